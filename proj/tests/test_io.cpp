#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vilogic/catalog.hpp"
#include "vilogic/io.hpp"

using namespace vilogic;

TEST_CASE("matrix files round-trip bit exactly") {
  for (const char* id : {"B2", "M3", "PS3", "prerough3", "B2w", "H3w"}) {
    const Matrix& m = catalog_get(id).as_matrix();
    std::string text = store_matrix(m);
    Matrix back = load_matrix(text);
    REQUIRE(back == m);
    REQUIRE(store_matrix(back) == text);
  }
}

TEST_CASE("algebra files round-trip") {
  const FiniteAlgebra& a = catalog_get("prerough3").algebra();
  std::string text = store_algebra(a);
  CHECK(load_algebra(text) == a);
  CHECK(store_algebra(load_algebra(text)) == text);
  CHECK_THROWS_WITH_AS(load_matrix(text), doctest::Contains("designated"), Error);
}

TEST_CASE("matrix file errors") {
  CHECK_THROWS_WITH_AS(load_algebra("universe: 0 1\ntable &: 0"),
                       doctest::Contains("language"), Error);
  CHECK_THROWS_WITH_AS(
      load_algebra("language: & 2\nuniverse: 0 1\ntable &:\n  0 0\n  0"),
      doctest::Contains("ends early"), Error);
  CHECK_THROWS_WITH_AS(load_algebra("language: & 2\nuniverse: 0 1\ntable |: 0 0 0 1"),
                       doctest::Contains("undeclared operator"), Error);
  CHECK_THROWS_WITH_AS(load_algebra("language: & 2\nuniverse: 0 1\nwhat: ever"),
                       doctest::Contains("unrecognized line"), Error);
}

TEST_CASE("directed system files round-trip") {
  DirectedSystemOfMatrices sys = omega_extension_system(catalog_get("B2").as_matrix());
  std::string text = store_directed_system(sys);
  DirectedSystemOfMatrices back = load_directed_system(text);
  CHECK(validate_directed_system(back).empty());
  CHECK(store_directed_system(back) == text);
  CHECK(plonka_sum_matrices(back) == plonka_sum_matrices(sys));
}

TEST_CASE("identity homs may be omitted in system files") {
  std::string text =
      "index: b t\n"
      "join:\n"
      "  b t\n"
      "  t t\n"
      "hom b t: 0=w 1=w\n"
      "begin matrix b\n"
      "language: & 2\n"
      "universe: 0 1\n"
      "designated: 1\n"
      "table &:\n"
      "  0 0\n"
      "  0 1\n"
      "end\n"
      "begin matrix t\n"
      "language: & 2\n"
      "universe: w\n"
      "designated: w\n"
      "table &: w\n"
      "end\n";
  DirectedSystemOfMatrices sys = load_directed_system(text);
  CHECK(validate_directed_system(sys).empty());
  CHECK(sys.homs.at({0, 0}).at("1") == "1");
  Matrix sum = plonka_sum_matrices(sys);
  CHECK(sum.algebra.universe == std::vector<std::string>{"0", "1", "w"});
}

TEST_CASE("hilbert system files round-trip") {
  for (const char* id : {"minimal", "minimal-re", "ipc", "hipwk", "hprl", "hprl-re", "lps3"}) {
    const HilbertSystem& s = catalog_get(id).as_system();
    std::string text = store_hilbert_system(s);
    HilbertSystem back = load_hilbert_system(text);
    REQUIRE(back == s);
    REQUIRE(store_hilbert_system(back) == text);
  }
  CHECK_THROWS_WITH_AS(load_hilbert_system("system: x\nlanguage: & 2\nrule R: / a"),
                       doctest::Contains("no premises"), Error);
}

TEST_CASE("proof scripts round-trip and justify") {
  const HilbertSystem& minimal = catalog_get("minimal").as_system();
  std::string text =
      "hypotheses: p & q\n"
      "1. p & q [hyp]\n"
      "2. p [R1 1]\n"
      "3. (p | q) [R2 2]\n";
  Proof p = load_proof(text, minimal);
  CHECK_FALSE(check_proof(p, minimal).has_value());
  CHECK(p.lines.size() == 3);
  CHECK(p.lines[2].premises == std::vector<int>{1});

  std::string canonical = store_proof(p);
  Proof again = load_proof(canonical, minimal);
  CHECK(store_proof(again) == canonical);
  CHECK_FALSE(check_proof(again, minimal).has_value());
}

TEST_CASE("axiom bindings are inferred when omitted") {
  const HilbertSystem& ipc = catalog_get("ipc").as_system();
  Proof p = load_proof("1. (p & q) -> p [ax A4]\n", ipc);
  CHECK_FALSE(check_proof(p, ipc).has_value());
  CHECK(p.lines[0].subst.at("a") == parse_formula("p", ipc.lang));

  Proof q = load_proof("1. (p & q) -> p [ax A4 a=p, b=q]\n", ipc);
  CHECK(q.lines[0].subst == p.lines[0].subst);

  CHECK_THROWS_WITH_AS(load_proof("1. p -> q [ax A4]\n", ipc),
                       doctest::Contains("not an instance"), Error);
  CHECK_THROWS_WITH_AS(load_proof("2. p [hyp]\n", ipc),
                       doctest::Contains("numbered consecutively"), Error);
}

TEST_CASE("instance batch parsing") {
  const Language& lang = lattice_language();
  Instance inst = parse_instance("p & q ; r |- p | q", lang);
  CHECK(inst.premises.size() == 2);
  CHECK(inst.conclusion == parse_formula("p | q", lang));

  Instance thm = parse_instance("|- p & p", lang);
  CHECK(thm.premises.empty());

  CHECK(print_instance(inst) == "r ; (p & q) |- (p | q)");
  Instance back = parse_instance(print_instance(inst), lang);
  CHECK(back.premises == inst.premises);
  CHECK(back.conclusion == inst.conclusion);

  auto batch = load_instances("p |- p | q\n# comment\n\nq ; p |- q\n", lang);
  CHECK(batch.size() == 2);

  CHECK_THROWS_WITH_AS(parse_instance("p & q", lang), doctest::Contains("|-"), Error);
}
