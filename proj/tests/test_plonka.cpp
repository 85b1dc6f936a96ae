#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vilogic/plonka.hpp"

using namespace vilogic;

namespace {

const Language kIpcLang{{"&", 2}, {"|", 2}, {"->", 2}, {"~", 1}, {"0", 0}, {"1", 0}};
const Language kRm3Lang{{"&", 2}, {"|", 2}, {"->", 2}, {"~", 1}};

Matrix b2_matrix() {
  Matrix m;
  m.algebra.lang = kIpcLang;
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

Matrix h3_matrix() {
  Matrix m;
  m.algebra.lang = kIpcLang;
  m.algebra.universe = {"0", "a", "1"};
  m.algebra.tables["&"] = {0, 0, 0, 0, 1, 1, 0, 1, 2};
  m.algebra.tables["|"] = {0, 1, 2, 1, 1, 2, 2, 2, 2};
  m.algebra.tables["->"] = {2, 2, 2, 0, 2, 2, 0, 1, 2};
  m.algebra.tables["~"] = {2, 0, 0};
  m.algebra.tables["0"] = {0};
  m.algebra.tables["1"] = {2};
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

Matrix prerough3_matrix() {
  Matrix m;
  m.algebra.lang = Language{{"&", 2}, {"|", 2}, {"->", 2}, {"~", 1},
                            {"I", 1}, {"C", 1}, {"0", 0}, {"1", 0}};
  m.algebra.universe = {"0", "a", "1"};
  m.algebra.tables["~"] = {2, 1, 0};
  m.algebra.tables["I"] = {0, 1, 2};
  m.algebra.tables["C"] = {0, 1, 2};
  m.algebra.tables["&"] = {0, 0, 0, 0, 1, 1, 0, 1, 2};
  m.algebra.tables["|"] = {0, 1, 2, 1, 1, 2, 2, 2, 2};
  m.algebra.tables["->"] = {2, 2, 2, 1, 1, 2, 0, 1, 2};
  m.algebra.tables["0"] = {0};
  m.algebra.tables["1"] = {2};
  m.designated = {"1"};
  return m;
}

Formula random_formula(std::mt19937& rng, const Language& lang,
                       const std::vector<std::string>& vars, int depth) {
  std::uniform_int_distribution<int> coin(0, 2);
  if (depth == 0 || coin(rng) == 0)
    return Formula::variable(vars[rng() % vars.size()]);
  const auto& ops = lang.operators();
  const auto& [name, arity] = ops[rng() % ops.size()];
  std::vector<Formula> args;
  for (int i = 0; i < arity; ++i) args.push_back(random_formula(rng, lang, vars, depth - 1));
  return Formula::apply(name, std::move(args));
}

}  // namespace

TEST_CASE("semilattice validation") {
  SemilatticeIndex good{{"i", "j"}, {0, 1, 1, 1}};
  CHECK(good.validate().empty());
  CHECK(good.bottom() == 0);
  CHECK(good.leq(0, 1));
  CHECK_FALSE(good.leq(1, 0));

  SemilatticeIndex bad{{"i", "j"}, {1, 1, 1, 1}};  // join(i,i) != i
  CHECK_FALSE(bad.validate().empty());
}

TEST_CASE("validate_directed_system") {
  DirectedSystemOfMatrices sys = omega_extension_system(b2_matrix());
  CHECK(validate_directed_system(sys).empty());

  SUBCASE("identity condition violated") {
    sys.homs[{0, 0}]["0"] = "1";
    auto bad = validate_directed_system(sys);
    REQUIRE(!bad.empty());
    bool mentions_identity = false;
    for (const auto& b : bad) mentions_identity = mentions_identity || b.find("(a)") != std::string::npos;
    CHECK(mentions_identity);
  }

  SUBCASE("filter condition violated") {
    sys.matrices[1].designated = {};
    auto bad = validate_directed_system(sys);
    REQUIRE(!bad.empty());
  }

  SUBCASE("composition coherence violated on a 3-chain") {
    // chain i <= j <= k of one-point algebras over a two-point target
    DirectedSystemOfMatrices chain;
    chain.index.elements = {"i", "j", "k"};
    chain.index.join_table = {0, 1, 2, 1, 1, 2, 2, 2, 2};
    Matrix two;
    two.algebra.lang = Language{{"&", 2}};
    two.algebra.universe = {"x", "y"};
    two.algebra.tables["&"] = {0, 0, 0, 1};  // meet of x < y
    two.designated = {"y"};
    Matrix mid = two, top = two;
    mid.algebra.universe = {"mx", "my"};
    mid.designated = {"my"};
    top.algebra.universe = {"tx", "ty"};
    top.designated = {"ty"};
    chain.matrices = {two, mid, top};
    chain.homs[{0, 0}] = {{"x", "x"}, {"y", "y"}};
    chain.homs[{1, 1}] = {{"mx", "mx"}, {"my", "my"}};
    chain.homs[{2, 2}] = {{"tx", "tx"}, {"ty", "ty"}};
    chain.homs[{0, 1}] = {{"x", "mx"}, {"y", "my"}};
    chain.homs[{1, 2}] = {{"mx", "tx"}, {"my", "ty"}};
    chain.homs[{0, 2}] = {{"x", "tx"}, {"y", "ty"}};
    CHECK(validate_directed_system(chain).empty());

    chain.homs[{0, 2}]["x"] = "ty";  // breaks f_ik = f_jk . f_ij and the hom property
    auto bad = validate_directed_system(chain);
    REQUIRE(!bad.empty());
  }
}

TEST_CASE("plonka sum of the two-element system") {
  Matrix sum = plonka_sum_matrices(omega_extension_system(b2_matrix()));
  CHECK(sum.algebra.universe == std::vector<std::string>{"0", "1", "w"});
  CHECK(sum.designated == std::set<std::string>{"1", "w"});

  // contamination: 1 & w = w
  int one = sum.algebra.index_of("1"), w = sum.algebra.index_of("w");
  std::vector<int> args{one, w};
  CHECK(sum.algebra.apply("&", args) == w);

  // nullary operations take their value in the bottom algebra
  Matrix h3sum = plonka_sum_matrices(omega_extension_system(h3_matrix()));
  CHECK(h3sum.algebra.universe[h3sum.algebra.table_of("0")[0]] == "0");
  CHECK(evaluate(parse_formula("0", kIpcLang), {}, h3sum.algebra) == "0");

  Matrix rsum = plonka_sum_matrices(omega_extension_system(prerough3_matrix()));
  CHECK(rsum.algebra.universe.size() == 4);
  CHECK(rsum.designated == std::set<std::string>{"1", "w"});
}

TEST_CASE("plonka sum of a one-element system is the matrix itself") {
  Matrix m = b2_matrix();
  DirectedSystemOfMatrices sys;
  sys.index.elements = {"i"};
  sys.index.join_table = {0};
  sys.matrices = {m};
  ElementMap id;
  for (const auto& e : m.algebra.universe) id[e] = e;
  sys.homs[{0, 0}] = id;
  CHECK(plonka_sum_matrices(sys) == m);
}

TEST_CASE("adjoin_contaminating equals the explicit two-element sum") {
  for (const Matrix& m : {b2_matrix(), h3_matrix(), m3_matrix(), prerough3_matrix()}) {
    Matrix direct = adjoin_contaminating(m);
    Matrix summed = plonka_sum_matrices(omega_extension_system(m));
    REQUIRE(direct == summed);
  }
}

TEST_CASE("contamination principle holds tuple by tuple") {
  for (const Matrix& m : {b2_matrix(), m3_matrix(), prerough3_matrix()}) {
    Matrix ext = adjoin_contaminating(m);
    const size_t base = m.algebra.universe.size();
    const int omega = static_cast<int>(base);
    for (const auto& [op, arity] : ext.algebra.lang.operators()) {
      if (arity == 0) {
        REQUIRE(ext.algebra.table_of(op) == m.algebra.table_of(op));
        continue;
      }
      std::vector<int> args(arity, 0);
      bool more = true;
      while (more) {
        bool contaminated = false;
        for (int a : args) contaminated = contaminated || a == omega;
        int got = ext.algebra.apply(op, args);
        if (contaminated) {
          REQUIRE(got == omega);
        } else {
          REQUIRE(got == m.algebra.apply(op, args));
        }
        more = false;
        for (size_t i = args.size(); i-- > 0;) {
          if (static_cast<size_t>(++args[i]) < base + 1) {
            more = true;
            break;
          }
          args[i] = 0;
        }
      }
    }
  }
}

TEST_CASE("omega evaluation and reserved label") {
  Matrix ext = adjoin_contaminating(b2_matrix());
  CHECK(evaluate(parse_formula("~p", kIpcLang), {{"p", "w"}}, ext.algebra) == "w");
  CHECK_THROWS_WITH_AS(adjoin_contaminating(ext), doctest::Contains("reserved"), Error);
}

TEST_CASE("make_disjoint prefixes only when universes collide") {
  DirectedSystemOfMatrices sys = omega_extension_system(b2_matrix());
  CHECK(make_disjoint(sys).matrices[0].algebra.universe == sys.matrices[0].algebra.universe);

  DirectedSystemOfMatrices twin;
  twin.index.elements = {"i", "j"};
  twin.index.join_table = {0, 1, 1, 1};
  twin.matrices = {b2_matrix(), b2_matrix()};
  ElementMap id{{"0", "0"}, {"1", "1"}};
  twin.homs[{0, 0}] = id;
  twin.homs[{1, 1}] = id;
  twin.homs[{0, 1}] = id;
  CHECK_FALSE(validate_directed_system(twin).empty());

  DirectedSystemOfMatrices fixed = make_disjoint(twin);
  CHECK(validate_directed_system(fixed).empty());
  CHECK(fixed.matrices[0].algebra.universe == std::vector<std::string>{"i.0", "i.1"});
  CHECK(fixed.matrices[1].designated == std::set<std::string>{"j.1"});
  Matrix sum = plonka_sum_matrices(fixed);
  CHECK(sum.algebra.universe.size() == 4);
}

TEST_CASE("desk-scale completeness transfer on B2") {
  // consequence filtered through the maximal variable-included premise
  // subset coincides with consequence over {m, m + omega}
  Matrix m = b2_matrix();
  Matrix ext = adjoin_contaminating(m);
  std::mt19937 rng(1828);
  std::vector<std::string> vars{"p", "q", "r"};
  for (int i = 0; i < 400; ++i) {
    FormulaSet premises;
    for (int k = rng() % 3; k > 0; --k)
      premises.insert(random_formula(rng, kIpcLang, vars, 2));
    Formula concl = random_formula(rng, kIpcLang, vars, 3);

    FormulaSet delta;
    auto cvars = variables_of(concl);
    for (const Formula& g : premises) {
      auto gv = variables_of(g);
      if (std::includes(cvars.begin(), cvars.end(), gv.begin(), gv.end())) delta.insert(g);
    }
    bool left = consequence(delta, concl, {m});
    bool plonka = consequence(premises, concl, {m, ext});
    REQUIRE(left == plonka);
  }
}
