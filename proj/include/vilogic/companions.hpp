#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vilogic/hilbert.hpp"
#include "vilogic/matrix.hpp"

namespace vilogic {

/// A consequence test with a provenance tag.  Hilbert-backed oracles are
/// bounded-depth semi-decisions: a negative answer means "not found within
/// the limits", not refutation.
struct ConsequenceOracle {
  std::string provenance;
  std::function<bool(const FormulaSet&, const Formula&)> holds;

  bool operator()(const FormulaSet& premises, const Formula& conclusion) const {
    return holds(premises, conclusion);
  }
};

ConsequenceOracle matrix_oracle(std::vector<Matrix> matrices, const std::string& name);
ConsequenceOracle hilbert_oracle(HilbertSystem system, SearchLimits limits);

/// The left variable inclusion companion of `base`: premises are first cut
/// down to the ones whose variables all occur in the conclusion, then the
/// base decides.  By monotonicity of the base this single maximal subset
/// settles the existential over all subsets.
ConsequenceOracle left_companion(ConsequenceOracle base);

/// Same axioms; every rule that can lose variables gains the side condition
/// that instantiated premise variables must occur in the instantiated
/// conclusion.  Rules whose schemas already guarantee the inclusion are
/// left unchanged.
HilbertSystem restricted_system(const HilbertSystem& s);

struct Instance {
  FormulaSet premises;
  Formula conclusion;
};

struct ComparisonRow {
  Instance instance;
  bool a_holds;
  bool b_holds;

  std::string classification() const {
    if (a_holds == b_holds) return "agree";
    return a_holds ? "a-only" : "b-only";
  }
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  int agree = 0;
  int a_only = 0;
  int b_only = 0;
};

ComparisonReport compare_oracles(const ConsequenceOracle& a, const ConsequenceOracle& b,
                                 const std::vector<Instance>& instances);

}  // namespace vilogic
