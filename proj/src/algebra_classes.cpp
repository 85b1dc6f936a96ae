#include "vilogic/algebra_classes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace vilogic {

namespace {

int require_op(const FiniteAlgebra& a, const std::string& op, int arity) {
  auto got = a.lang.arity_of(op);
  if (!got || *got != arity)
    throw Error("missing operator: class predicate needs '" + op + "' with arity " +
                std::to_string(arity));
  (void)a.table_of(op);
  return arity;
}

int unop(const FiniteAlgebra& a, const std::string& op, int x) {
  return a.table_of(op)[static_cast<size_t>(x)];
}

int binop(const FiniteAlgebra& a, const std::string& op, int x, int y) {
  return a.table_of(op)[static_cast<size_t>(x) * a.universe.size() + static_cast<size_t>(y)];
}

int constant(const FiniteAlgebra& a, const std::string& op) { return a.table_of(op)[0]; }

}  // namespace

AlgebraClass algebra_class_from_name(const std::string& name) {
  if (name == "bounded-distributive-lattice") return AlgebraClass::bounded_distributive_lattice;
  if (name == "quasi-boolean") return AlgebraClass::quasi_boolean;
  if (name == "heyting") return AlgebraClass::heyting;
  if (name == "pre-rough") return AlgebraClass::pre_rough;
  throw Error("unsupported algebra class '" + name + "'");
}

std::string algebra_class_name(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::bounded_distributive_lattice: return "bounded-distributive-lattice";
    case AlgebraClass::quasi_boolean: return "quasi-boolean";
    case AlgebraClass::heyting: return "heyting";
    case AlgebraClass::pre_rough: return "pre-rough";
  }
  throw Error("unknown algebra class");
}

Language required_language(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::bounded_distributive_lattice:
      return Language{{"&", 2}, {"|", 2}, {"0", 0}, {"1", 0}};
    case AlgebraClass::quasi_boolean:
      return Language{{"&", 2}, {"|", 2}, {"~", 1}, {"0", 0}, {"1", 0}};
    case AlgebraClass::heyting:
      return Language{{"&", 2}, {"|", 2}, {"->", 2}, {"~", 1}, {"0", 0}, {"1", 0}};
    case AlgebraClass::pre_rough:
      return Language{{"&", 2}, {"|", 2}, {"->", 2}, {"~", 1},
                      {"I", 1}, {"C", 1}, {"0", 0},  {"1", 0}};
  }
  throw Error("unknown algebra class");
}

bool is_bounded_distributive_lattice(const FiniteAlgebra& a) {
  require_op(a, "&", 2);
  require_op(a, "|", 2);
  require_op(a, "0", 0);
  require_op(a, "1", 0);
  const int n = static_cast<int>(a.universe.size());
  const int bot = constant(a, "0"), top = constant(a, "1");
  for (int x = 0; x < n; ++x) {
    if (binop(a, "&", x, x) != x || binop(a, "|", x, x) != x) return false;
    if (binop(a, "|", bot, x) != x || binop(a, "&", top, x) != x) return false;
    for (int y = 0; y < n; ++y) {
      if (binop(a, "&", x, y) != binop(a, "&", y, x)) return false;
      if (binop(a, "|", x, y) != binop(a, "|", y, x)) return false;
      if (binop(a, "&", x, binop(a, "|", x, y)) != x) return false;
      if (binop(a, "|", x, binop(a, "&", x, y)) != x) return false;
      for (int z = 0; z < n; ++z) {
        if (binop(a, "&", x, binop(a, "&", y, z)) != binop(a, "&", binop(a, "&", x, y), z))
          return false;
        if (binop(a, "|", x, binop(a, "|", y, z)) != binop(a, "|", binop(a, "|", x, y), z))
          return false;
        if (binop(a, "&", x, binop(a, "|", y, z)) !=
            binop(a, "|", binop(a, "&", x, y), binop(a, "&", x, z)))
          return false;
        if (binop(a, "|", x, binop(a, "&", y, z)) !=
            binop(a, "&", binop(a, "|", x, y), binop(a, "|", x, z)))
          return false;
      }
    }
  }
  return true;
}

bool is_quasi_boolean(const FiniteAlgebra& a) {
  require_op(a, "~", 1);
  if (!is_bounded_distributive_lattice(a)) return false;
  const int n = static_cast<int>(a.universe.size());
  for (int x = 0; x < n; ++x) {
    if (unop(a, "~", unop(a, "~", x)) != x) return false;
    for (int y = 0; y < n; ++y)
      if (unop(a, "~", binop(a, "|", x, y)) !=
          binop(a, "&", unop(a, "~", x), unop(a, "~", y)))
        return false;
  }
  return true;
}

bool is_heyting(const FiniteAlgebra& a) {
  require_op(a, "->", 2);
  require_op(a, "~", 1);
  if (!is_bounded_distributive_lattice(a)) return false;
  const int n = static_cast<int>(a.universe.size());
  const int bot = constant(a, "0");
  auto leq = [&](int x, int y) { return binop(a, "&", x, y) == x; };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int r = binop(a, "->", x, y);
      if (!leq(binop(a, "&", x, r), y)) return false;
      for (int z = 0; z < n; ++z)
        if (leq(binop(a, "&", x, z), y) && !leq(z, r)) return false;
    }
    if (unop(a, "~", x) != binop(a, "->", x, bot)) return false;
  }
  return true;
}

bool is_pre_rough(const FiniteAlgebra& a) {
  require_op(a, "->", 2);
  require_op(a, "I", 1);
  require_op(a, "C", 1);
  if (!is_quasi_boolean(a)) return false;
  const int n = static_cast<int>(a.universe.size());
  const int top = constant(a, "1");
  auto neg = [&](int x) { return unop(a, "~", x); };
  auto interior = [&](int x) { return unop(a, "I", x); };
  auto closure = [&](int x) { return unop(a, "C", x); };

  if (interior(top) != top) return false;
  for (int x = 0; x < n; ++x) {
    if (closure(x) != neg(interior(neg(x)))) return false;
    for (int y = 0; y < n; ++y) {
      if (interior(binop(a, "&", x, y)) != binop(a, "&", interior(x), interior(y)))
        return false;
      int want = binop(a, "&", binop(a, "|", neg(interior(x)), interior(y)),
                       binop(a, "|", neg(closure(x)), closure(y)));
      if (binop(a, "->", x, y) != want) return false;
      if (binop(a, "->", closure(x), closure(y)) == top &&
          binop(a, "->", interior(x), interior(y)) == top && binop(a, "->", x, y) != top)
        return false;
    }
  }
  return true;
}

bool passes(AlgebraClass c, const FiniteAlgebra& a) {
  switch (c) {
    case AlgebraClass::bounded_distributive_lattice: return is_bounded_distributive_lattice(a);
    case AlgebraClass::quasi_boolean: return is_quasi_boolean(a);
    case AlgebraClass::heyting: return is_heyting(a);
    case AlgebraClass::pre_rough: return is_pre_rough(a);
  }
  return false;
}

namespace {

// A bounded distributive lattice on {0..n-1}, as meet/join tables plus
// bottom and top indices.
struct Lattice {
  int n;
  std::vector<int> meet, join;
  int bot, top;
};

// Brute-force sweep of all partial orders on n points (n <= 4: at most
// 2^16 relation masks), keeping the bounded distributive lattices.
std::vector<Lattice> lattices_of_size(int n) {
  std::vector<Lattice> out;
  const int bits = n * n;
  auto rel_bit = [&](uint32_t mask, int x, int y) { return (mask >> (x * n + y)) & 1u; };
  for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = rel_bit(mask, x, x);
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        if (x != y && rel_bit(mask, x, y) && rel_bit(mask, y, x)) ok = false;
        if (rel_bit(mask, x, y))
          for (int z = 0; z < n && ok; ++z)
            if (rel_bit(mask, y, z) && !rel_bit(mask, x, z)) ok = false;
      }
    if (!ok) continue;

    Lattice lat;
    lat.n = n;
    lat.meet.assign(n * n, -1);
    lat.join.assign(n * n, -1);
    lat.bot = lat.top = -1;
    for (int x = 0; x < n; ++x) {
      bool is_bot = true, is_top = true;
      for (int y = 0; y < n; ++y) {
        is_bot = is_bot && rel_bit(mask, x, y);
        is_top = is_top && rel_bit(mask, y, x);
      }
      if (is_bot) lat.bot = x;
      if (is_top) lat.top = x;
    }
    if (lat.bot < 0 || lat.top < 0) continue;

    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        int meet = -1, join = -1;
        for (int z = 0; z < n; ++z) {
          if (rel_bit(mask, z, x) && rel_bit(mask, z, y) &&
              (meet < 0 || rel_bit(mask, meet, z)))
            meet = z;
          if (rel_bit(mask, x, z) && rel_bit(mask, y, z) &&
              (join < 0 || rel_bit(mask, z, join)))
            join = z;
        }
        // the greatest lower bound must dominate every lower bound
        for (int z = 0; z < n; ++z) {
          if (rel_bit(mask, z, x) && rel_bit(mask, z, y) && !rel_bit(mask, z, meet)) ok = false;
          if (rel_bit(mask, x, z) && rel_bit(mask, y, z) && !rel_bit(mask, join, z)) ok = false;
        }
        lat.meet[x * n + y] = meet;
        lat.join[x * n + y] = join;
      }
    if (!ok) continue;

    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z)
          if (lat.meet[x * n + lat.join[y * n + z]] !=
              lat.join[lat.meet[x * n + y] * n + lat.meet[x * n + z]])
            ok = false;
    if (ok) out.push_back(std::move(lat));
  }
  return out;
}

FiniteAlgebra base_algebra(const Lattice& lat, const Language& lang) {
  FiniteAlgebra a;
  a.lang = lang;
  for (int i = 0; i < lat.n; ++i) a.universe.push_back("e" + std::to_string(i));
  a.tables["&"] = lat.meet;
  a.tables["|"] = lat.join;
  a.tables["0"] = {lat.bot};
  a.tables["1"] = {lat.top};
  return a;
}

// All unary tables on n elements, in lexicographic order.
std::vector<std::vector<int>> unary_tables(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(n, 0);
  while (true) {
    out.push_back(t);
    int i = n - 1;
    while (i >= 0 && t[i] == n - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

void permute_tables(const FiniteAlgebra& a, const std::vector<int>& perm, FiniteAlgebra& out) {
  const int n = static_cast<int>(a.universe.size());
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  out = a;
  for (const auto& [op, arity] : a.lang.operators()) {
    const auto& src = a.table_of(op);
    auto& dst = out.tables[op];
    std::vector<int> args(arity, 0);
    size_t count = src.size();
    for (size_t flat = 0; flat < count; ++flat) {
      size_t rest = flat;
      for (int i = arity - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      size_t src_idx = 0;
      for (int i = 0; i < arity; ++i) src_idx = src_idx * n + inv[args[i]];
      dst[flat] = perm[src[src_idx]];
    }
  }
}

}  // namespace

std::string canonical_form(const FiniteAlgebra& a) {
  const int n = static_cast<int>(a.universe.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  FiniteAlgebra scratch;
  do {
    permute_tables(a, perm, scratch);
    std::string s = std::to_string(n) + ";";
    for (const auto& [op, arity] : a.lang.operators()) {
      s += op + ":";
      for (int e : scratch.table_of(op)) s += std::to_string(e) + ",";
    }
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<FiniteAlgebra> enumerate_algebras(AlgebraClass c, const Language& lang,
                                              int max_size) {
  if (max_size > 4) throw Error("size guardrail exceeded: enumeration allows max_size <= 4");
  const Language required = required_language(c);
  for (const auto& [op, arity] : required.operators()) {
    auto got = lang.arity_of(op);
    if (!got || *got != arity)
      throw Error("language lacks operator '" + op + "' required by class " +
                  algebra_class_name(c));
  }
  if (lang.operators().size() != required.operators().size())
    throw Error("enumeration expects exactly the class operators for " + algebra_class_name(c));

  std::vector<FiniteAlgebra> out;
  std::set<std::string> seen;
  auto emit = [&](FiniteAlgebra alg) {
    if (!passes(c, alg)) return;  // self-consistency gate
    if (seen.insert(canonical_form(alg)).second) out.push_back(std::move(alg));
  };

  for (int n = 1; n <= max_size; ++n) {
    for (const Lattice& lat : lattices_of_size(n)) {
      switch (c) {
        case AlgebraClass::bounded_distributive_lattice:
          emit(base_algebra(lat, lang));
          break;
        case AlgebraClass::quasi_boolean:
          for (const auto& neg : unary_tables(n)) {
            FiniteAlgebra alg = base_algebra(lat, lang);
            alg.tables["~"] = neg;
            emit(std::move(alg));
          }
          break;
        case AlgebraClass::heyting: {
          FiniteAlgebra alg = base_algebra(lat, lang);
          // residual: join of every x with a&x <= b (exists by distributivity)
          std::vector<int> arrow(n * n);
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
              int r = lat.bot;
              for (int z = 0; z < n; ++z)
                if (lat.meet[lat.meet[x * n + z] * n + y] == lat.meet[x * n + z])
                  r = lat.join[r * n + z];
              arrow[x * n + y] = r;
            }
          alg.tables["->"] = arrow;
          std::vector<int> neg(n);
          for (int x = 0; x < n; ++x) neg[x] = arrow[x * n + lat.bot];
          alg.tables["~"] = neg;
          emit(std::move(alg));
          break;
        }
        case AlgebraClass::pre_rough:
          for (const auto& neg : unary_tables(n)) {
            for (const auto& interior : unary_tables(n)) {
              FiniteAlgebra alg = base_algebra(lat, lang);
              alg.tables["~"] = neg;
              alg.tables["I"] = interior;
              std::vector<int> closure(n), arrow(n * n);
              for (int x = 0; x < n; ++x) closure[x] = neg[interior[neg[x]]];
              for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                  arrow[x * n + y] =
                      lat.meet[lat.join[neg[interior[x]] * n + interior[y]] * n +
                               lat.join[neg[closure[x]] * n + closure[y]]];
              alg.tables["C"] = closure;
              alg.tables["->"] = arrow;
              emit(std::move(alg));
            }
          }
          break;
      }
    }
  }
  return out;
}

}  // namespace vilogic
