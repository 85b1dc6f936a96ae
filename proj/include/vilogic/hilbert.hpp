#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vilogic/syntax.hpp"

namespace vilogic {

/// An inference rule: premise and conclusion schemas, plus an optional
/// variable-inclusion side condition.  When `restricted` is set, an
/// application is legal only if every variable of the instantiated
/// premises occurs in the instantiated conclusion.
struct Rule {
  std::string name;
  std::vector<Formula> premises;
  Formula conclusion;
  bool restricted = false;

  /// True when the schemas alone guarantee the inclusion, so restricting
  /// the rule would not change its instances.
  bool schematically_inclusive() const;

  bool operator==(const Rule&) const = default;
};

struct HilbertSystem {
  std::string name;
  Language lang;
  std::vector<std::pair<std::string, Formula>> axioms;
  std::vector<Rule> rules;

  const Formula* axiom(const std::string& axiom_name) const;
  const Rule* rule(const std::string& rule_name) const;

  bool operator==(const HilbertSystem&) const = default;
};

struct ProofLine {
  enum class Kind { hypothesis, axiom, rule };
  Formula formula;
  Kind kind;
  std::string ref;              // axiom or rule name
  Substitution subst;           // axiom instantiation
  std::vector<int> premises;    // rule premises, 0-based indices of earlier lines
};

struct Proof {
  FormulaSet hypotheses;
  std::vector<ProofLine> lines;

  const Formula& conclusion() const;
};

/// Failed line (0-based) and what went wrong.
struct ProofError {
  int line;
  std::string message;
};

/// Verifies every line: hypothesis membership, axiom instances under the
/// recorded substitution, rule applications (premise shapes matched
/// simultaneously with shared bindings), and variable-inclusion side
/// conditions with the missing-variable witness in the message.
std::optional<ProofError> check_proof(const Proof& p, const HilbertSystem& s);

struct SearchLimits {
  int max_depth = 6;  // saturation rounds
  int max_size = 24;  // node-count cap on derived formulas
};

/// Bounded forward search: saturates rule applications round by round, with
/// axiom and free-conclusion metavariables instantiated from the subformula
/// pool of the hypotheses and the goal.  Returns a checkable proof when the
/// goal is reached; absence means "not found within limits", never
/// refutation.  Deterministic for fixed inputs and limits.
std::optional<Proof> derive_bounded(const FormulaSet& hypotheses, const Formula& goal,
                                    const HilbertSystem& s, SearchLimits limits);

/// Rewrites a proof of a theorem (no hypotheses) into one whose rule
/// applications all satisfy variable inclusion: per rule application the
/// premise sub-proofs are glued, the variable-collapsing substitution is
/// applied (variables outside the conclusion go to its least variable, or
/// to the least nullary operator when it has none), and lines are
/// re-justified.  The result checks against the restricted system.
Proof translate_theorem_proof(const Proof& p, const HilbertSystem& s);

/// Keeps exactly the lines reachable backward from the final one,
/// reindexed; hypotheses shrink to those still used.
Proof prune_derivation(const Proof& p);

/// The members of sigma all of whose variables occur in phi.
FormulaSet extract_delta(const FormulaSet& sigma, const Formula& phi);

}  // namespace vilogic
