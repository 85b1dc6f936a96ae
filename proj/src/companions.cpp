#include "vilogic/companions.hpp"

namespace vilogic {

ConsequenceOracle matrix_oracle(std::vector<Matrix> matrices, const std::string& name) {
  return {"matrix:" + name,
          [matrices = std::move(matrices)](const FormulaSet& premises, const Formula& concl) {
            return consequence(premises, concl, matrices);
          }};
}

ConsequenceOracle hilbert_oracle(HilbertSystem system, SearchLimits limits) {
  std::string tag = "hilbert:" + system.name + "@depth" + std::to_string(limits.max_depth);
  return {std::move(tag),
          [system = std::move(system), limits](const FormulaSet& premises, const Formula& concl) {
            return derive_bounded(premises, concl, system, limits).has_value();
          }};
}

ConsequenceOracle left_companion(ConsequenceOracle base) {
  std::string tag = "left-of:" + base.provenance;
  return {std::move(tag),
          [base = std::move(base)](const FormulaSet& premises, const Formula& concl) {
            return base(extract_delta(premises, concl), concl);
          }};
}

HilbertSystem restricted_system(const HilbertSystem& s) {
  HilbertSystem out = s;
  out.name = s.name + "-re";
  for (Rule& rule : out.rules)
    if (!rule.schematically_inclusive()) rule.restricted = true;
  return out;
}

ComparisonReport compare_oracles(const ConsequenceOracle& a, const ConsequenceOracle& b,
                                 const std::vector<Instance>& instances) {
  ComparisonReport report;
  for (const Instance& inst : instances) {
    ComparisonRow row{inst, a(inst.premises, inst.conclusion), b(inst.premises, inst.conclusion)};
    if (row.a_holds == row.b_holds)
      ++report.agree;
    else if (row.a_holds)
      ++report.a_only;
    else
      ++report.b_only;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace vilogic
