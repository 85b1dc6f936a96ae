#include "vilogic/matrix.hpp"

#include <algorithm>

namespace vilogic {

int FiniteAlgebra::index_of(const std::string& label) const {
  for (size_t i = 0; i < universe.size(); ++i)
    if (universe[i] == label) return static_cast<int>(i);
  throw Error("element '" + label + "' is not in the universe");
}

const std::vector<int>& FiniteAlgebra::table_of(const std::string& op) const {
  auto it = tables.find(op);
  if (it == tables.end()) throw Error("no table for operator '" + op + "'");
  return it->second;
}

int FiniteAlgebra::apply(const std::string& op, std::span<const int> args) const {
  auto arity = lang.arity_of(op);
  if (!arity) throw Error("unknown operator '" + op + "'");
  if (static_cast<size_t>(*arity) != args.size())
    throw Error("arity mismatch: operator '" + op + "' has arity " + std::to_string(*arity) +
                ", applied to " + std::to_string(args.size()) + " arguments");
  size_t idx = 0;
  for (int a : args) idx = idx * universe.size() + static_cast<size_t>(a);
  return table_of(op)[idx];
}

namespace {

size_t int_pow(size_t base, int exp) {
  size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

void FiniteAlgebra::validate() const {
  if (universe.empty()) throw Error("empty universe");
  for (size_t i = 0; i < universe.size(); ++i)
    for (size_t j = i + 1; j < universe.size(); ++j)
      if (universe[i] == universe[j])
        throw Error("duplicate universe element '" + universe[i] + "'");
  for (const auto& [op, arity] : lang.operators()) {
    const auto& table = table_of(op);
    size_t want = int_pow(universe.size(), arity);
    if (table.size() != want)
      throw Error("table for '" + op + "' has " + std::to_string(table.size()) +
                  " entries, expected " + std::to_string(want));
    for (int e : table)
      if (e < 0 || static_cast<size_t>(e) >= universe.size())
        throw Error("table for '" + op + "' maps outside the universe");
  }
  for (const auto& [op, table] : tables)
    if (!lang.has_operator(op)) throw Error("table for undeclared operator '" + op + "'");
}

void Matrix::validate() const {
  algebra.validate();
  for (const std::string& d : designated)
    if (std::find(algebra.universe.begin(), algebra.universe.end(), d) ==
        algebra.universe.end())
      throw Error("designated element '" + d + "' is not in the universe");
}

namespace {

// Formulas are flattened to postfix programs over variable slots, so
// consequence checks can sweep |U|^n valuations without touching the tree.
struct Instr {
  int var_slot;  // >= 0: push env[var_slot]; -1: apply op
  const std::vector<int>* table;
  int arity;
};

struct Program {
  std::vector<Instr> code;

  int run(const std::vector<int>& env, std::vector<int>& stack, size_t universe_size) const {
    stack.clear();
    for (const Instr& ins : code) {
      if (ins.var_slot >= 0) {
        stack.push_back(env[ins.var_slot]);
      } else {
        size_t idx = 0;
        size_t base = stack.size() - ins.arity;
        for (int i = 0; i < ins.arity; ++i)
          idx = idx * universe_size + static_cast<size_t>(stack[base + i]);
        stack.resize(base);
        stack.push_back((*ins.table)[idx]);
      }
    }
    return stack.back();
  }
};

void compile_into(const Formula& f, const FiniteAlgebra& alg,
                  const std::map<std::string, int>& slots, Program& prog) {
  if (f.is_variable()) {
    prog.code.push_back({slots.at(f.head()), nullptr, 0});
    return;
  }
  auto arity = alg.lang.arity_of(f.head());
  if (!arity) throw Error("unknown operator '" + f.head() + "'");
  if (static_cast<size_t>(*arity) != f.args().size())
    throw Error("arity mismatch: operator '" + f.head() + "' has arity " +
                std::to_string(*arity) + ", applied to " + std::to_string(f.args().size()) +
                " arguments");
  for (const Formula& a : f.args()) compile_into(a, alg, slots, prog);
  prog.code.push_back({-1, &alg.table_of(f.head()), *arity});
}

std::map<std::string, int> slot_map(const std::set<std::string>& vars) {
  std::map<std::string, int> slots;
  int next = 0;
  for (const std::string& x : vars) slots.emplace(x, next++);
  return slots;
}

// Odometer over |U|^n assignments; returns false when exhausted.
bool advance(std::vector<int>& env, size_t universe_size) {
  for (size_t i = env.size(); i-- > 0;) {
    if (static_cast<size_t>(++env[i]) < universe_size) return true;
    env[i] = 0;
  }
  return false;
}

}  // namespace

std::string evaluate(const Formula& f, const Valuation& val, const FiniteAlgebra& alg) {
  if (f.is_variable()) {
    auto it = val.find(f.head());
    if (it == val.end()) throw Error("unassigned variable '" + f.head() + "'");
    return alg.universe[alg.index_of(it->second)];
  }
  std::vector<int> args;
  args.reserve(f.args().size());
  for (const Formula& a : f.args()) args.push_back(alg.index_of(evaluate(a, val, alg)));
  return alg.universe[alg.apply(f.head(), args)];
}

namespace {

// Shared sweep behind consequence and find_countervaluation.
template <typename OnCounter>
bool sweep(const FormulaSet& premises, const Formula& conclusion, const Matrix& m,
           OnCounter&& on_counter) {
  const FiniteAlgebra& alg = m.algebra;
  FormulaSet all = premises;
  all.insert(conclusion);
  auto vars = variables_of(all);
  auto slots = slot_map(vars);

  std::vector<Program> premise_progs;
  for (const Formula& p : premises) {
    Program prog;
    compile_into(p, alg, slots, prog);
    premise_progs.push_back(std::move(prog));
  }
  Program concl;
  compile_into(conclusion, alg, slots, concl);

  std::vector<bool> designated(alg.universe.size());
  for (size_t i = 0; i < alg.universe.size(); ++i) designated[i] = m.is_designated(static_cast<int>(i));

  std::vector<int> env(vars.size(), 0);
  std::vector<int> stack;
  do {
    bool all_designated = true;
    for (const Program& p : premise_progs) {
      if (!designated[p.run(env, stack, alg.universe.size())]) {
        all_designated = false;
        break;
      }
    }
    if (all_designated && !designated[concl.run(env, stack, alg.universe.size())]) {
      on_counter(env, vars);
      return false;
    }
  } while (advance(env, alg.universe.size()));
  return true;
}

}  // namespace

bool consequence(const FormulaSet& premises, const Formula& conclusion,
                 const std::vector<Matrix>& matrices) {
  for (const Matrix& m : matrices)
    if (!sweep(premises, conclusion, m, [](const auto&, const auto&) {})) return false;
  return true;
}

bool is_tautology(const Formula& f, const std::vector<Matrix>& matrices) {
  return consequence({}, f, matrices);
}

std::optional<Valuation> find_countervaluation(const FormulaSet& premises,
                                               const Formula& conclusion, const Matrix& m) {
  std::optional<Valuation> found;
  sweep(premises, conclusion, m,
        [&](const std::vector<int>& env, const std::set<std::string>& vars) {
          Valuation val;
          int slot = 0;
          for (const std::string& x : vars) val[x] = m.algebra.universe[env[slot++]];
          found = std::move(val);
        });
  return found;
}

bool is_homomorphism(const std::map<std::string, std::string>& map, const FiniteAlgebra& a,
                     const FiniteAlgebra& b) {
  if (!(a.lang == b.lang)) throw Error("language mismatch between algebras");
  std::vector<int> image(a.universe.size());
  for (size_t i = 0; i < a.universe.size(); ++i) {
    auto it = map.find(a.universe[i]);
    if (it == map.end()) throw Error("map is not total: no image for '" + a.universe[i] + "'");
    image[i] = b.index_of(it->second);
  }
  for (const auto& [op, arity] : a.lang.operators()) {
    std::vector<int> args(arity, 0);
    std::vector<int> mapped(arity, 0);
    bool more = true;
    while (more) {
      for (int i = 0; i < arity; ++i) mapped[i] = image[args[i]];
      if (image[a.apply(op, args)] != b.apply(op, mapped)) return false;
      more = arity > 0 && advance(args, a.universe.size());
      if (arity == 0) break;
    }
  }
  return true;
}

}  // namespace vilogic
