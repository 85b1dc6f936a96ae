#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vilogic/companions.hpp"

using namespace vilogic;

namespace {

const Language kLand{{"&", 2}, {"|", 2}};
const Language kImp{{"&", 2}, {"|", 2}, {"->", 2}, {"~", 1}, {"0", 0}, {"1", 0}};
const Language kRm3Lang{{"&", 2}, {"|", 2}, {"->", 2}, {"~", 1}};

Formula land(const std::string& s) { return parse_formula(s, kLand); }
Formula imp(const std::string& s) { return parse_formula(s, kImp); }

Matrix b2_matrix() {
  Matrix m;
  m.algebra.lang = kImp;
  m.algebra.universe = {"0", "1"};
  m.algebra.tables["&"] = {0, 0, 0, 1};
  m.algebra.tables["|"] = {0, 1, 1, 1};
  m.algebra.tables["->"] = {1, 1, 0, 1};
  m.algebra.tables["~"] = {1, 0};
  m.algebra.tables["0"] = {0};
  m.algebra.tables["1"] = {1};
  m.designated = {"1"};
  return m;
}

Matrix m3_matrix() {
  Matrix m;
  m.algebra.lang = kRm3Lang;
  m.algebra.universe = {"1", "1/2", "0"};
  m.algebra.tables["&"] = {0, 1, 2, 1, 1, 2, 2, 2, 2};
  m.algebra.tables["|"] = {0, 0, 0, 0, 1, 1, 0, 1, 2};
  m.algebra.tables["->"] = {0, 2, 2, 0, 1, 2, 0, 0, 0};
  m.algebra.tables["~"] = {2, 1, 0};
  m.designated = {"1", "1/2"};
  return m;
}

HilbertSystem minimal_system() {
  HilbertSystem s;
  s.name = "minimal";
  s.lang = kLand;
  s.rules.push_back({"R1", {land("a & b")}, land("a"), false});
  s.rules.push_back({"R2", {land("a")}, land("a | b"), false});
  return s;
}

HilbertSystem cpc_fragment() {
  HilbertSystem s;
  s.name = "cpc-frag";
  s.lang = kImp;
  s.axioms.emplace_back("A1", imp("a -> (b -> a)"));
  s.axioms.emplace_back("A2", imp("(a -> (b -> c)) -> ((a -> b) -> (a -> c))"));
  s.axioms.emplace_back("A4", imp("a & b -> a"));
  s.axioms.emplace_back("A6", imp("a -> a | b"));
  s.rules.push_back({"MP", {imp("a"), imp("a -> b")}, imp("b"), false});
  return s;
}

Formula random_formula(std::mt19937& rng, const Language& lang,
                       const std::vector<std::string>& vars, int depth) {
  if (depth == 0 || rng() % 3 == 0) return Formula::variable(vars[rng() % vars.size()]);
  const auto& ops = lang.operators();
  const auto& [name, arity] = ops[rng() % ops.size()];
  std::vector<Formula> args;
  for (int i = 0; i < arity; ++i) args.push_back(random_formula(rng, lang, vars, depth - 1));
  return Formula::apply(name, std::move(args));
}

}  // namespace

TEST_CASE("left companion over the Boolean matrix") {
  ConsequenceOracle base = matrix_oracle({b2_matrix()}, "B2");
  ConsequenceOracle left = left_companion(base);

  CHECK(left({imp("p & q")}, imp("p | q")));
  CHECK_FALSE(left({imp("p & q")}, imp("p")));
  CHECK_FALSE(left({imp("p"), imp("~p")}, imp("q")));
  CHECK(left.provenance.find("matrix:B2") != std::string::npos);
}

TEST_CASE("restricted_system marks exactly the variable-losing rules") {
  HilbertSystem cpc = cpc_fragment();
  HilbertSystem re = restricted_system(cpc);
  CHECK(re.axioms == cpc.axioms);
  REQUIRE(re.rules.size() == 1);
  CHECK(re.rules[0].restricted);

  HilbertSystem min = restricted_system(minimal_system());
  CHECK(min.rule("R1")->restricted);
  CHECK_FALSE(min.rule("R2")->restricted);

  // a hypothetical-syllogism rule gets the middle-variable condition
  HilbertSystem hs;
  hs.name = "hs";
  hs.lang = kImp;
  hs.rules.push_back({"HS", {imp("a -> b"), imp("b -> c")}, imp("a -> c"), false});
  hs.rules.push_back({"R3", {imp("a")}, imp("b -> a"), false});
  HilbertSystem hs_re = restricted_system(hs);
  CHECK(hs_re.rule("HS")->restricted);
  CHECK_FALSE(hs_re.rule("R3")->restricted);

  // the instantiated condition coincides with: middle variables must occur
  // on the outside
  Proof lossy;
  lossy.hypotheses = {imp("p -> q"), imp("q -> r")};
  lossy.lines.push_back({imp("p -> q"), ProofLine::Kind::hypothesis, "", {}, {}});
  lossy.lines.push_back({imp("q -> r"), ProofLine::Kind::hypothesis, "", {}, {}});
  lossy.lines.push_back({imp("p -> r"), ProofLine::Kind::rule, "HS", {}, {0, 1}});
  CHECK_FALSE(check_proof(lossy, hs).has_value());
  auto err = check_proof(lossy, hs_re);
  REQUIRE(err.has_value());
  CHECK(err->message.find("'q'") != std::string::npos);

  Proof lossless;
  lossless.hypotheses = {imp("p -> (p & r)"), imp("(p & r) -> r")};
  lossless.lines.push_back({imp("p -> (p & r)"), ProofLine::Kind::hypothesis, "", {}, {}});
  lossless.lines.push_back({imp("(p & r) -> r"), ProofLine::Kind::hypothesis, "", {}, {}});
  lossless.lines.push_back({imp("p -> r"), ProofLine::Kind::rule, "HS", {}, {0, 1}});
  CHECK_FALSE(check_proof(lossless, hs_re).has_value());
}

TEST_CASE("compare_oracles separates the companions of the minimal system") {
  HilbertSystem s = minimal_system();
  SearchLimits limits{6, 16};
  ConsequenceOracle re = hilbert_oracle(restricted_system(s), limits);
  ConsequenceOracle left = left_companion(hilbert_oracle(s, limits));

  std::vector<Instance> instances{
      {{land("p & q")}, land("p | q")},
      {{land("p")}, land("p | q")},
      {{land("p & q")}, land("p")},
  };
  ComparisonReport report = compare_oracles(re, left, instances);
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].classification() == "b-only");  // the separating instance
  CHECK(report.rows[1].classification() == "agree");
  CHECK(report.rows[2].classification() == "agree");
  CHECK(report.b_only == 1);
  CHECK(report.agree == 2);

  ComparisonReport self = compare_oracles(re, re, instances);
  CHECK(self.agree == 3);
  CHECK(self.a_only + self.b_only == 0);
}

TEST_CASE("bounded containment: restricted successes are left-companion successes") {
  std::mt19937 rng(321);
  std::vector<std::string> vars{"p", "q", "r"};

  HilbertSystem min = minimal_system();
  ConsequenceOracle min_re = hilbert_oracle(restricted_system(min), {4, 14});
  ConsequenceOracle min_left = left_companion(hilbert_oracle(min, {6, 14}));
  int hits = 0;
  for (int i = 0; i < 250; ++i) {
    FormulaSet premises;
    for (int k = rng() % 3; k > 0; --k) premises.insert(random_formula(rng, kLand, vars, 2));
    Formula concl = random_formula(rng, kLand, vars, 3);
    if (min_re(premises, concl)) {
      ++hits;
      REQUIRE(min_left(premises, concl));
    }
  }
  CHECK(hits > 10);

  HilbertSystem cpc = cpc_fragment();
  ConsequenceOracle cpc_re = hilbert_oracle(restricted_system(cpc), {3, 18});
  ConsequenceOracle cpc_left = left_companion(hilbert_oracle(cpc, {5, 18}));
  std::vector<Instance> cpc_instances{
      {{imp("p")}, imp("p | q")},
      {{imp("q")}, imp("p -> q")},
      {{imp("p & q")}, imp("p & q")},
      {{imp("p"), imp("q")}, imp("q | q")},
      {{}, imp("p -> (q -> p)")},
      {{imp("r")}, imp("r | (p & q)")},
  };
  for (int i = 0; i < 60; ++i) {
    FormulaSet premises;
    for (int k = rng() % 3; k > 0; --k) premises.insert(random_formula(rng, kImp, vars, 2));
    cpc_instances.push_back({premises, random_formula(rng, kImp, vars, 2)});
  }
  hits = 0;
  for (const Instance& inst : cpc_instances) {
    if (cpc_re(inst.premises, inst.conclusion)) {
      ++hits;
      REQUIRE(cpc_left(inst.premises, inst.conclusion));
    }
  }
  CHECK(hits > 5);
}

TEST_CASE("companions agree for a system with modus ponens and the deduction theorem") {
  HilbertSystem cpc = cpc_fragment();
  ConsequenceOracle re = hilbert_oracle(restricted_system(cpc), {5, 24});
  ConsequenceOracle left = left_companion(hilbert_oracle(cpc, {5, 24}));

  std::vector<Instance> instances{
      {{}, imp("p -> p")},
      {{}, imp("p -> (q -> p)")},
      {{imp("p")}, imp("p")},
      {{imp("p"), imp("q")}, imp("q")},
      {{imp("p & q")}, imp("p")},        // both false: the split loses q
      {{imp("p"), imp("p -> q")}, imp("q")},  // both false: detachment loses p
      {{imp("q")}, imp("p -> q")},       // delta keeps q, A1 provides the rest
      {{imp("p")}, imp("p | q")},
  };
  ComparisonReport report = compare_oracles(re, left, instances);
  for (const ComparisonRow& row : report.rows) {
    CAPTURE(print_formula(row.instance.conclusion));
    CHECK(row.classification() == "agree");
  }
  // and the known verdicts hold exactly
  CHECK(report.rows[0].a_holds);
  CHECK(report.rows[2].a_holds);
  CHECK_FALSE(report.rows[4].a_holds);
  CHECK_FALSE(report.rows[5].a_holds);
  CHECK(report.rows[6].a_holds);
  CHECK(report.rows[7].a_holds);
}

TEST_CASE("left companion is below the base and keeps its theorems") {
  ConsequenceOracle base = matrix_oracle({b2_matrix()}, "B2");
  ConsequenceOracle left = left_companion(base);
  std::mt19937 rng(777);
  std::vector<std::string> vars{"p", "q", "r"};
  for (int i = 0; i < 500; ++i) {
    FormulaSet premises;
    for (int k = rng() % 3; k > 0; --k) premises.insert(random_formula(rng, kImp, vars, 2));
    Formula concl = random_formula(rng, kImp, vars, 2);
    if (left(premises, concl)) REQUIRE(base(premises, concl));
    REQUIRE(left({}, concl) == base({}, concl));
  }
}

TEST_CASE("left companion satisfies the consequence conditions") {
  ConsequenceOracle left = left_companion(matrix_oracle({b2_matrix()}, "B2"));
  std::mt19937 rng(2025);
  std::vector<std::string> vars{"p", "q", "r"};
  for (int i = 0; i < 400; ++i) {
    FormulaSet sigma;
    for (int k = 1 + rng() % 2; k > 0; --k) sigma.insert(random_formula(rng, kImp, vars, 2));
    Formula phi = random_formula(rng, kImp, vars, 2);

    FormulaSet with_phi = sigma;
    with_phi.insert(phi);
    REQUIRE(left(with_phi, phi));  // C1

    if (left(sigma, phi)) {
      FormulaSet larger = sigma;
      larger.insert(random_formula(rng, kImp, vars, 2));
      REQUIRE(left(larger, phi));  // C3
    }

    FormulaSet delta;
    for (int k = 1 + rng() % 2; k > 0; --k) delta.insert(random_formula(rng, kImp, vars, 2));
    bool delta_covers = true;
    for (const Formula& psi : sigma) delta_covers = delta_covers && left(delta, psi);
    if (delta_covers && left(sigma, phi)) REQUIRE(left(delta, phi));  // C2

    if (left(sigma, phi)) {  // C4
      Substitution sub;
      for (const auto& x : vars)
        if (rng() % 2) sub.emplace(x, random_formula(rng, kImp, vars, 1));
      FormulaSet sigma_sub;
      for (const Formula& f : sigma) sigma_sub.insert(apply_substitution(sub, f));
      REQUIRE(left(sigma_sub, apply_substitution(sub, phi)));
    }
  }
}

TEST_CASE("three-valued detachment logic is not a left companion") {
  // {p, p -> q} entails q over the three-valued tables, q alone is not
  // valid, and no variable-included premise subset remains: the scripted
  // witness that this logic cannot arise as a left companion.
  Matrix m3 = m3_matrix();
  Formula p = parse_formula("p", kRm3Lang);
  Formula q = parse_formula("q", kRm3Lang);
  Formula impl = parse_formula("p -> q", kRm3Lang);

  CHECK(consequence({p, impl}, q, {m3}));
  CHECK_FALSE(is_tautology(q, {m3}));
  CHECK(extract_delta({p, impl}, q).empty());
}
