#include "vilogic/plonka.hpp"

#include <algorithm>
#include <set>

namespace vilogic {

std::optional<int> SemilatticeIndex::bottom() const {
  const int n = static_cast<int>(elements.size());
  for (int b = 0; b < n; ++b) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = join(b, i) == i;
    if (ok) return b;
  }
  return std::nullopt;
}

std::vector<std::string> SemilatticeIndex::validate() const {
  std::vector<std::string> bad;
  const int n = static_cast<int>(elements.size());
  if (n == 0) {
    bad.push_back("index: empty element set");
    return bad;
  }
  if (join_table.size() != static_cast<size_t>(n) * n) {
    bad.push_back("index: join table size mismatch");
    return bad;
  }
  for (int e : join_table)
    if (e < 0 || e >= n) {
      bad.push_back("index: join table maps outside the element set");
      return bad;
    }
  for (int i = 0; i < n; ++i) {
    if (join(i, i) != i)
      bad.push_back("index: join not idempotent at " + elements[i]);
    for (int j = 0; j < n; ++j) {
      if (join(i, j) != join(j, i))
        bad.push_back("index: join not commutative at (" + elements[i] + ", " + elements[j] +
                      ")");
      for (int k = 0; k < n; ++k)
        if (join(i, join(j, k)) != join(join(i, j), k))
          bad.push_back("index: join not associative at (" + elements[i] + ", " + elements[j] +
                        ", " + elements[k] + ")");
    }
  }
  return bad;
}

namespace {

bool has_nullary(const Language& lang) {
  for (const auto& [op, arity] : lang.operators())
    if (arity == 0) return true;
  return false;
}

// Shared validation of the algebra-level conditions; matrix systems add the
// designated-set condition on top.
std::vector<std::string> validate_common(const SemilatticeIndex& index,
                                         const std::vector<FiniteAlgebra>& algebras,
                                         const std::map<std::pair<int, int>, ElementMap>& homs) {
  std::vector<std::string> bad = index.validate();
  const int n = static_cast<int>(index.elements.size());
  if (static_cast<size_t>(n) != algebras.size()) {
    bad.push_back("system: expected one algebra per index element");
    return bad;
  }
  for (const FiniteAlgebra& a : algebras) {
    try {
      a.validate();
    } catch (const Error& e) {
      bad.push_back(std::string("algebra: ") + e.what());
      return bad;
    }
  }
  for (int i = 1; i < n; ++i)
    if (!(algebras[i].lang == algebras[0].lang)) {
      bad.push_back("system: algebras must share one language");
      return bad;
    }

  std::map<std::string, int> owner;
  for (int i = 0; i < n; ++i)
    for (const std::string& e : algebras[i].universe) {
      auto [it, inserted] = owner.emplace(e, i);
      if (!inserted)
        bad.push_back("system: universes not disjoint, '" + e + "' appears under " +
                      index.elements[it->second] + " and " + index.elements[i]);
    }
  if (!bad.empty()) return bad;

  if (has_nullary(algebras[0].lang) && !index.bottom())
    bad.push_back("system: nullary operators require a bottom index element");

  // (a) identities, totality, homomorphism property
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!index.leq(i, j)) continue;
      auto it = homs.find({i, j});
      if (it == homs.end()) {
        bad.push_back("hom " + index.elements[i] + "->" + index.elements[j] + ": missing");
        continue;
      }
      const ElementMap& f = it->second;
      bool total = true;
      for (const std::string& e : algebras[i].universe) {
        auto at = f.find(e);
        if (at == f.end()) {
          bad.push_back("hom " + index.elements[i] + "->" + index.elements[j] +
                        ": no image for '" + e + "'");
          total = false;
          continue;
        }
        if (std::find(algebras[j].universe.begin(), algebras[j].universe.end(), at->second) ==
            algebras[j].universe.end()) {
          bad.push_back("hom " + index.elements[i] + "->" + index.elements[j] + ": image '" +
                        at->second + "' outside the target universe");
          total = false;
        }
      }
      if (!total) continue;
      if (i == j) {
        for (const std::string& e : algebras[i].universe)
          if (f.at(e) != e)
            bad.push_back("condition (a): hom " + index.elements[i] + "->" +
                          index.elements[i] + " is not the identity, maps '" + e + "' to '" +
                          f.at(e) + "'");
      }
      if (!is_homomorphism(f, algebras[i], algebras[j]))
        bad.push_back("hom " + index.elements[i] + "->" + index.elements[j] +
                      ": not a homomorphism");
    }
  if (!bad.empty()) return bad;

  // (b) composition coherence
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!(index.leq(i, j) && index.leq(j, k))) continue;
        const ElementMap& fij = homs.at({i, j});
        const ElementMap& fjk = homs.at({j, k});
        const ElementMap& fik = homs.at({i, k});
        for (const std::string& e : algebras[i].universe)
          if (fik.at(e) != fjk.at(fij.at(e)))
            bad.push_back("condition (b): composite through " + index.elements[j] +
                          " disagrees with hom " + index.elements[i] + "->" +
                          index.elements[k] + " at '" + e + "'");
      }
  return bad;
}

[[noreturn]] void throw_invalid(const std::vector<std::string>& bad) {
  std::string msg = "invalid directed system:";
  for (const std::string& b : bad) msg += "\n  " + b;
  throw Error(msg);
}

}  // namespace

DirectedSystemOfAlgebras DirectedSystemOfMatrices::algebra_system() const {
  DirectedSystemOfAlgebras sys;
  sys.index = index;
  for (const Matrix& m : matrices) sys.algebras.push_back(m.algebra);
  sys.homs = homs;
  return sys;
}

std::vector<std::string> validate_directed_system(const DirectedSystemOfAlgebras& sys) {
  return validate_common(sys.index, sys.algebras, sys.homs);
}

std::vector<std::string> validate_directed_system(const DirectedSystemOfMatrices& sys) {
  std::vector<FiniteAlgebra> algebras;
  for (const Matrix& m : sys.matrices) algebras.push_back(m.algebra);
  std::vector<std::string> bad = validate_common(sys.index, algebras, sys.homs);
  if (!bad.empty()) return bad;
  const int n = static_cast<int>(sys.index.elements.size());
  for (int i = 0; i < n; ++i) {
    try {
      sys.matrices[i].validate();
    } catch (const Error& e) {
      bad.push_back(std::string("matrix: ") + e.what());
      return bad;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!sys.index.leq(i, j)) continue;
      const ElementMap& f = sys.homs.at({i, j});
      for (const std::string& d : sys.matrices[i].designated)
        if (!sys.matrices[j].designated.count(f.at(d)))
          bad.push_back("hom " + sys.index.elements[i] + "->" + sys.index.elements[j] +
                        ": designated '" + d + "' maps to undesignated '" + f.at(d) + "'");
    }
  return bad;
}

FiniteAlgebra plonka_sum_algebras(const DirectedSystemOfAlgebras& sys) {
  if (auto bad = validate_directed_system(sys); !bad.empty()) throw_invalid(bad);

  const int n = static_cast<int>(sys.index.elements.size());
  FiniteAlgebra sum;
  sum.lang = sys.algebras[0].lang;
  std::vector<int> member_of;  // component index per summed element
  for (int i = 0; i < n; ++i)
    for (const std::string& e : sys.algebras[i].universe) {
      sum.universe.push_back(e);
      member_of.push_back(i);
    }
  const size_t total = sum.universe.size();

  auto route = [&](const std::string& label, int from, int to) {
    return sys.homs.at({from, to}).at(label);
  };

  for (const auto& [op, arity] : sum.lang.operators()) {
    if (arity == 0) {
      int bot = *sys.index.bottom();
      const FiniteAlgebra& base = sys.algebras[bot];
      sum.tables[op] = {
          static_cast<int>(std::find(sum.universe.begin(), sum.universe.end(),
                                     base.universe[base.table_of(op)[0]]) -
                           sum.universe.begin())};
      continue;
    }
    size_t entries = 1;
    for (int i = 0; i < arity; ++i) entries *= total;
    std::vector<int> table(entries);
    std::vector<int> args(arity, 0);
    for (size_t flat = 0; flat < entries; ++flat) {
      size_t rest = flat;
      for (int i = arity - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % total);
        rest /= total;
      }
      int j = member_of[args[0]];
      for (int i = 1; i < arity; ++i) j = sys.index.join(j, member_of[args[i]]);
      const FiniteAlgebra& target = sys.algebras[j];
      std::vector<int> local(arity);
      for (int i = 0; i < arity; ++i)
        local[i] = target.index_of(route(sum.universe[args[i]], member_of[args[i]], j));
      const std::string& result = target.universe[target.apply(op, local)];
      table[flat] = static_cast<int>(
          std::find(sum.universe.begin(), sum.universe.end(), result) - sum.universe.begin());
    }
    sum.tables[op] = std::move(table);
  }
  return sum;
}

Matrix plonka_sum_matrices(const DirectedSystemOfMatrices& sys) {
  if (auto bad = validate_directed_system(sys); !bad.empty()) throw_invalid(bad);
  Matrix sum;
  sum.algebra = plonka_sum_algebras(sys.algebra_system());
  for (const Matrix& m : sys.matrices)
    sum.designated.insert(m.designated.begin(), m.designated.end());
  return sum;
}

DirectedSystemOfMatrices make_disjoint(DirectedSystemOfMatrices sys) {
  std::set<std::string> seen;
  bool collision = false;
  for (const Matrix& m : sys.matrices)
    for (const std::string& e : m.algebra.universe) collision = collision || !seen.insert(e).second;
  if (!collision) return sys;

  const int n = static_cast<int>(sys.matrices.size());
  auto renamed = [&](int i, const std::string& e) { return sys.index.elements[i] + "." + e; };
  std::map<std::pair<int, int>, ElementMap> homs;
  for (const auto& [pair, f] : sys.homs) {
    ElementMap g;
    for (const auto& [from, to] : f) g[renamed(pair.first, from)] = renamed(pair.second, to);
    homs[pair] = std::move(g);
  }
  sys.homs = std::move(homs);
  for (int i = 0; i < n; ++i) {
    Matrix& m = sys.matrices[i];
    for (std::string& e : m.algebra.universe) e = renamed(i, e);
    std::set<std::string> designated;
    for (const std::string& d : m.designated) designated.insert(renamed(i, d));
    m.designated = std::move(designated);
  }
  return sys;
}

DirectedSystemOfMatrices omega_extension_system(const Matrix& m) {
  if (std::find(m.algebra.universe.begin(), m.algebra.universe.end(), kOmega) !=
      m.algebra.universe.end())
    throw Error(std::string("the label '") + kOmega + "' is reserved");

  Matrix trivial;
  trivial.algebra.lang = m.algebra.lang;
  trivial.algebra.universe = {kOmega};
  for (const auto& [op, arity] : m.algebra.lang.operators())
    trivial.algebra.tables[op] = std::vector<int>(1, 0);
  trivial.designated = {kOmega};

  DirectedSystemOfMatrices sys;
  sys.index.elements = {"b", "t"};
  sys.index.join_table = {0, 1, 1, 1};
  sys.matrices = {m, trivial};
  ElementMap id_base, collapse;
  for (const std::string& e : m.algebra.universe) {
    id_base[e] = e;
    collapse[e] = kOmega;
  }
  sys.homs[{0, 0}] = id_base;
  sys.homs[{0, 1}] = collapse;
  sys.homs[{1, 1}] = {{kOmega, kOmega}};
  return sys;
}

Matrix adjoin_contaminating(const Matrix& m) {
  if (std::find(m.algebra.universe.begin(), m.algebra.universe.end(), kOmega) !=
      m.algebra.universe.end())
    throw Error(std::string("the label '") + kOmega + "' is reserved");
  m.validate();

  Matrix out;
  out.algebra.lang = m.algebra.lang;
  out.algebra.universe = m.algebra.universe;
  out.algebra.universe.push_back(kOmega);
  const size_t base = m.algebra.universe.size();
  const int omega = static_cast<int>(base);
  const size_t total = base + 1;

  for (const auto& [op, arity] : m.algebra.lang.operators()) {
    if (arity == 0) {
      out.algebra.tables[op] = m.algebra.table_of(op);
      continue;
    }
    size_t entries = 1;
    for (int i = 0; i < arity; ++i) entries *= total;
    std::vector<int> table(entries);
    std::vector<int> args(arity, 0);
    for (size_t flat = 0; flat < entries; ++flat) {
      size_t rest = flat;
      bool contaminated = false;
      for (int i = arity - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % total);
        rest /= total;
        contaminated = contaminated || args[i] == omega;
      }
      table[flat] = contaminated ? omega : m.algebra.apply(op, args);
    }
    out.algebra.tables[op] = std::move(table);
  }
  out.designated = m.designated;
  out.designated.insert(kOmega);
  return out;
}

}  // namespace vilogic
