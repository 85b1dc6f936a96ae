#include "vilogic/hilbert.hpp"

#include <algorithm>
#include <map>

namespace vilogic {

namespace {

bool vars_included(const std::set<std::string>& sub, const std::set<std::string>& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

std::string first_missing(const std::set<std::string>& sub, const std::set<std::string>& super) {
  for (const std::string& v : sub)
    if (!super.count(v)) return v;
  return "";
}

// Operators used by `f` must exist in `lang` with matching arities.
std::optional<std::string> language_defect(const Formula& f, const Language& lang) {
  if (f.is_variable()) return std::nullopt;
  auto arity = lang.arity_of(f.head());
  if (!arity) return "unknown operator '" + f.head() + "'";
  if (static_cast<size_t>(*arity) != f.args().size())
    return "arity mismatch on operator '" + f.head() + "'";
  for (const Formula& a : f.args())
    if (auto d = language_defect(a, lang)) return d;
  return std::nullopt;
}

}  // namespace

bool Rule::schematically_inclusive() const {
  std::set<std::string> premise_vars;
  for (const Formula& p : premises) {
    auto v = variables_of(p);
    premise_vars.insert(v.begin(), v.end());
  }
  return vars_included(premise_vars, variables_of(conclusion));
}

const Formula* HilbertSystem::axiom(const std::string& axiom_name) const {
  for (const auto& [n, schema] : axioms)
    if (n == axiom_name) return &schema;
  return nullptr;
}

const Rule* HilbertSystem::rule(const std::string& rule_name) const {
  for (const Rule& r : rules)
    if (r.name == rule_name) return &r;
  return nullptr;
}

const Formula& Proof::conclusion() const {
  if (lines.empty()) throw Error("empty proof has no conclusion");
  return lines.back().formula;
}

std::optional<ProofError> check_proof(const Proof& p, const HilbertSystem& s) {
  for (int i = 0; i < static_cast<int>(p.lines.size()); ++i) {
    const ProofLine& line = p.lines[i];
    if (auto defect = language_defect(line.formula, s.lang)) return ProofError{i, *defect};
    switch (line.kind) {
      case ProofLine::Kind::hypothesis:
        if (!p.hypotheses.count(line.formula))
          return ProofError{i, "'" + print_formula(line.formula) + "' is not a hypothesis"};
        break;
      case ProofLine::Kind::axiom: {
        const Formula* schema = s.axiom(line.ref);
        if (!schema) return ProofError{i, "unknown axiom '" + line.ref + "'"};
        if (!(apply_substitution(line.subst, *schema) == line.formula))
          return ProofError{i, "bad schema instance: substitution does not map " + line.ref +
                                   " to '" + print_formula(line.formula) + "'"};
        break;
      }
      case ProofLine::Kind::rule: {
        const Rule* rule = s.rule(line.ref);
        if (!rule) return ProofError{i, "unknown rule '" + line.ref + "'"};
        if (line.premises.size() != rule->premises.size())
          return ProofError{i, "rule " + rule->name + " takes " +
                                   std::to_string(rule->premises.size()) + " premises, got " +
                                   std::to_string(line.premises.size())};
        for (int j : line.premises)
          if (j < 0 || j >= i)
            return ProofError{i, "forward reference to line " + std::to_string(j + 1)};
        Substitution binding;
        for (size_t k = 0; k < rule->premises.size(); ++k)
          if (!match_schema_into(rule->premises[k], p.lines[line.premises[k]].formula, binding))
            return ProofError{i, "wrong premise shapes for rule " + rule->name};
        if (!match_schema_into(rule->conclusion, line.formula, binding))
          return ProofError{i, "conclusion does not match rule " + rule->name};
        if (rule->restricted) {
          std::set<std::string> premise_vars;
          for (int j : line.premises) {
            auto v = variables_of(p.lines[j].formula);
            premise_vars.insert(v.begin(), v.end());
          }
          auto concl_vars = variables_of(line.formula);
          if (!vars_included(premise_vars, concl_vars)) {
            std::string premise_text;
            for (size_t k = 0; k < line.premises.size(); ++k) {
              if (k) premise_text += ", ";
              premise_text += print_formula(p.lines[line.premises[k]].formula);
            }
            return ProofError{
                i, "side condition violated: var(" + premise_text + ") is not included in var(" +
                       print_formula(line.formula) + "): variable '" +
                       first_missing(premise_vars, concl_vars) + "' is lost"};
          }
        }
        break;
      }
    }
  }
  if (p.lines.empty()) return ProofError{0, "proof has no lines"};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bounded forward search.

namespace {

struct Justification {
  ProofLine::Kind kind;
  std::string ref;
  Substitution subst;
  std::vector<Formula> premises;
};

using FactMap = std::map<Formula, Justification>;

// Enumerates substitutions of `metavars` into `pool`, pruning branches whose
// instance size already exceeds the cap.  Occurrence counts let the partial
// size be tracked exactly: size(inst) = ops + sum over metavars of
// count * size(binding).
struct BindingEnumerator {
  const std::vector<Formula>& pool;
  int cap;
  std::vector<std::pair<std::string, int>> metavar_counts;
  int op_nodes = 0;

  BindingEnumerator(const Formula& schema, const std::vector<Formula>& pool_, int cap_)
      : pool(pool_), cap(cap_) {
    std::map<std::string, int> counts;
    count_nodes(schema, counts);
    for (const auto& [v, c] : counts) metavar_counts.emplace_back(v, c);
  }

  void count_nodes(const Formula& f, std::map<std::string, int>& counts) {
    if (f.is_variable()) {
      ++counts[f.head()];
      return;
    }
    ++op_nodes;
    for (const Formula& a : f.args()) count_nodes(a, counts);
  }

  template <typename Emit>
  void run(Substitution& binding, Emit&& emit) {
    // minimum contribution of one node per still-unbound metavariable
    int base = op_nodes;
    for (const auto& [v, c] : metavar_counts)
      base += binding.count(v) ? c * binding.at(v).size() : c;
    step(0, base, binding, emit);
  }

  template <typename Emit>
  void step(size_t i, int partial, Substitution& binding, Emit&& emit) {
    if (partial > cap) return;
    while (i < metavar_counts.size() && binding.count(metavar_counts[i].first)) ++i;
    if (i == metavar_counts.size()) {
      emit(binding);
      return;
    }
    const auto& [name, count] = metavar_counts[i];
    for (const Formula& candidate : pool) {
      int grown = partial + count * (candidate.size() - 1);
      if (grown > cap) continue;
      binding.emplace(name, candidate);
      step(i + 1, grown, binding, emit);
      binding.erase(name);
    }
  }
};

class Search {
public:
  Search(const FormulaSet& hypotheses, const Formula& goal, const HilbertSystem& s,
         SearchLimits limits)
      : goal_(goal), system_(s), limits_(limits) {
    FormulaSet seed = hypotheses;
    seed.insert(goal);
    FormulaSet pool_set = subformulas(seed);
    for (const auto& [op, arity] : s.lang.operators())
      if (arity == 0) pool_set.insert(Formula::apply(op, {}));
    pool_.assign(pool_set.begin(), pool_set.end());
    for (const Formula& h : hypotheses)
      facts_.emplace(h, Justification{ProofLine::Kind::hypothesis, "", {}, {}});
  }

  std::optional<Proof> run(const FormulaSet& hypotheses) {
    if (facts_.count(goal_)) return reconstruct(hypotheses);
    for (int round = 1; round <= limits_.max_depth; ++round) {
      FactMap fresh;
      if (round == 1) instantiate_axioms(fresh);
      apply_rules(fresh);
      bool grew = false;
      for (auto& [f, j] : fresh) grew = facts_.emplace(f, std::move(j)).second || grew;
      if (facts_.count(goal_)) return reconstruct(hypotheses);
      if (!grew) return std::nullopt;  // fixpoint below the depth limit
    }
    return std::nullopt;
  }

private:
  void emit(FactMap& fresh, Formula f, Justification j) {
    if (f.size() > limits_.max_size) return;
    if (facts_.count(f) || fresh.count(f)) return;
    fresh.emplace(std::move(f), std::move(j));
  }

  void instantiate_axioms(FactMap& fresh) {
    for (const auto& [name, schema] : system_.axioms) {
      BindingEnumerator spread(schema, pool_, limits_.max_size);
      Substitution binding;
      spread.run(binding, [&](const Substitution& b) {
        emit(fresh, apply_substitution(b, schema),
             Justification{ProofLine::Kind::axiom, name, b, {}});
      });
    }
  }

  void apply_rules(FactMap& fresh) {
    for (const Rule& rule : system_.rules) {
      Substitution binding;
      std::vector<Formula> matched(rule.premises.size(), goal_);
      std::vector<bool> done(rule.premises.size(), false);
      match_premises(rule, binding, matched, done, 0, fresh);
    }
  }

  // Premise slots are filled one at a time: ground slots by lookup, open
  // slots by scanning facts, most structured first.
  void match_premises(const Rule& rule, Substitution& binding, std::vector<Formula>& matched,
                      std::vector<bool>& done, size_t filled, FactMap& fresh) {
    if (filled == rule.premises.size()) {
      finish_rule(rule, binding, matched, fresh);
      return;
    }
    int pick = -1;
    bool pick_ground = false;
    for (size_t k = 0; k < rule.premises.size(); ++k) {
      if (done[k]) continue;
      bool ground = true;
      for (const std::string& v : variables_of(rule.premises[k]))
        ground = ground && binding.count(v);
      if (ground) {
        pick = static_cast<int>(k);
        pick_ground = true;
        break;
      }
      if (pick < 0 || rule.premises[k].size() > rule.premises[pick].size())
        pick = static_cast<int>(k);
    }
    done[pick] = true;
    const Formula& schema = rule.premises[pick];
    if (pick_ground) {
      Formula inst = apply_substitution(binding, schema);
      if (facts_.count(inst)) {
        matched[pick] = inst;
        match_premises(rule, binding, matched, done, filled + 1, fresh);
      }
    } else {
      for (const auto& [fact, _] : facts_) {
        Substitution local = binding;
        if (!match_schema_into(schema, fact, local)) continue;
        matched[pick] = fact;
        std::swap(binding, local);
        match_premises(rule, binding, matched, done, filled + 1, fresh);
        std::swap(binding, local);
      }
    }
    done[pick] = false;
  }

  void finish_rule(const Rule& rule, Substitution& binding, const std::vector<Formula>& matched,
                   FactMap& fresh) {
    auto conclude = [&](const Substitution& full) {
      Formula concl = apply_substitution(full, rule.conclusion);
      if (concl.size() > limits_.max_size) return;
      if (rule.restricted) {
        std::set<std::string> premise_vars;
        for (const Formula& m : matched) {
          auto v = variables_of(m);
          premise_vars.insert(v.begin(), v.end());
        }
        if (!vars_included(premise_vars, variables_of(concl))) return;
      }
      emit(fresh, std::move(concl),
           Justification{ProofLine::Kind::rule, rule.name, {}, matched});
    };

    bool ground = true;
    for (const std::string& v : variables_of(rule.conclusion))
      ground = ground && binding.count(v);
    if (ground) {
      conclude(binding);
    } else {
      // conclusion-only metavariables range over the pool
      BindingEnumerator spread(rule.conclusion, pool_, limits_.max_size);
      spread.run(binding, [&](const Substitution& full) { conclude(full); });
    }
  }

  std::optional<Proof> reconstruct(const FormulaSet& hypotheses) const {
    Proof proof;
    proof.hypotheses = hypotheses;
    std::map<Formula, int> placed;
    place(goal_, proof, placed);
    return proof;
  }

  int place(const Formula& f, Proof& proof, std::map<Formula, int>& placed) const {
    if (auto it = placed.find(f); it != placed.end()) return it->second;
    const Justification& j = facts_.at(f);
    ProofLine line{f, j.kind, j.ref, j.subst, {}};
    for (const Formula& premise : j.premises)
      line.premises.push_back(place(premise, proof, placed));
    proof.lines.push_back(std::move(line));
    int idx = static_cast<int>(proof.lines.size()) - 1;
    placed.emplace(f, idx);
    return idx;
  }

  Formula goal_;
  const HilbertSystem& system_;
  SearchLimits limits_;
  std::vector<Formula> pool_;
  FactMap facts_;
};

}  // namespace

std::optional<Proof> derive_bounded(const FormulaSet& hypotheses, const Formula& goal,
                                    const HilbertSystem& s, SearchLimits limits) {
  if (limits.max_depth <= 0 || limits.max_size <= 0) throw Error("search limits must be positive");
  Search search(hypotheses, goal, s, limits);
  return search.run(hypotheses);
}

// ---------------------------------------------------------------------------
// Theorem-proof translation and pruning.

namespace {

// Appends `line` (with premise indices already relative to `lines`) unless an
// identical formula is present; returns the line's index either way.
int glue_line(std::vector<ProofLine>& lines, std::map<Formula, int>& index, ProofLine line) {
  if (auto it = index.find(line.formula); it != index.end()) return it->second;
  lines.push_back(std::move(line));
  int at = static_cast<int>(lines.size()) - 1;
  index.emplace(lines.back().formula, at);
  return at;
}

}  // namespace

Proof translate_theorem_proof(const Proof& p, const HilbertSystem& s) {
  if (!p.hypotheses.empty()) throw Error("translation expects a theorem proof, got hypotheses");
  if (auto err = check_proof(p, s))
    throw Error("input proof invalid at line " + std::to_string(err->line + 1) + ": " +
                err->message);

  // per original line, a hypothesis-free proof whose last line is that formula
  std::vector<std::vector<ProofLine>> proofs(p.lines.size());

  for (size_t i = 0; i < p.lines.size(); ++i) {
    const ProofLine& line = p.lines[i];
    if (line.kind == ProofLine::Kind::axiom) {
      proofs[i] = {line};
      continue;
    }

    // the variable-collapsing substitution for this conclusion
    auto keep = variables_of(line.formula);
    Formula target = Formula::variable("p");  // placeholder, replaced below
    if (!keep.empty()) {
      target = Formula::variable(*keep.begin());
    } else {
      std::string least_nullary;
      for (const auto& [op, arity] : s.lang.operators())
        if (arity == 0 && (least_nullary.empty() || op < least_nullary)) least_nullary = op;
      if (least_nullary.empty())
        throw Error("cannot collapse variables: conclusion '" + print_formula(line.formula) +
                    "' has none and the language has no nullary operator");
      target = Formula::apply(least_nullary, {});
    }
    auto collapse = [&](const Formula& f) {
      Substitution sigma;
      for (const std::string& v : variables_of(f))
        if (!keep.count(v)) sigma.emplace(v, target);
      return apply_substitution(sigma, f);
    };

    std::vector<ProofLine> out;
    std::map<Formula, int> index;
    std::vector<int> premise_at;
    for (int j : line.premises) {
      // glue the collapsed premise sub-proof, re-justifying as we go
      std::vector<int> remap(proofs[j].size());
      for (size_t t = 0; t < proofs[j].size(); ++t) {
        ProofLine moved = proofs[j][t];
        moved.formula = collapse(moved.formula);
        if (moved.kind == ProofLine::Kind::axiom) {
          auto sigma = match_schema(*s.axiom(moved.ref), moved.formula);
          if (!sigma)
            throw Error("collapsed line is no longer an instance of axiom " + moved.ref);
          moved.subst = *sigma;
        } else {
          for (int& idx : moved.premises) idx = remap[idx];
        }
        remap[t] = glue_line(out, index, std::move(moved));
      }
      premise_at.push_back(remap.back());
    }
    if (auto it = index.find(line.formula); it != index.end()) {
      // already derived while gluing; repeat that line so the sub-proof
      // ends with its conclusion
      ProofLine copy = out[it->second];
      out.push_back(std::move(copy));
    } else {
      out.push_back(ProofLine{line.formula, ProofLine::Kind::rule, line.ref, {}, premise_at});
    }
    proofs[i] = std::move(out);
  }

  return Proof{{}, proofs.back()};
}

Proof prune_derivation(const Proof& p) {
  if (p.lines.empty()) throw Error("invalid input: empty proof");
  std::vector<bool> keep(p.lines.size(), false);
  std::vector<int> stack{static_cast<int>(p.lines.size()) - 1};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    if (keep[i]) continue;
    keep[i] = true;
    for (int j : p.lines[i].premises) stack.push_back(j);
  }
  Proof out;
  std::vector<int> remap(p.lines.size(), -1);
  for (size_t i = 0; i < p.lines.size(); ++i) {
    if (!keep[i]) continue;
    ProofLine line = p.lines[i];
    for (int& j : line.premises) j = remap[j];
    if (line.kind == ProofLine::Kind::hypothesis) out.hypotheses.insert(line.formula);
    remap[i] = static_cast<int>(out.lines.size());
    out.lines.push_back(std::move(line));
  }
  return out;
}

FormulaSet extract_delta(const FormulaSet& sigma, const Formula& phi) {
  auto phi_vars = variables_of(phi);
  FormulaSet delta;
  for (const Formula& gamma : sigma)
    if (vars_included(variables_of(gamma), phi_vars)) delta.insert(gamma);
  return delta;
}

}  // namespace vilogic
