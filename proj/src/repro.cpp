#include "vilogic/repro.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <random>
#include <sstream>

#include "vilogic/algebra_classes.hpp"
#include "vilogic/catalog.hpp"
#include "vilogic/io.hpp"

namespace vilogic {

namespace {

Formula random_formula(std::mt19937& rng, const Language& lang,
                       const std::vector<std::string>& vars, int depth) {
  if (depth == 0 || rng() % 3 == 0) return Formula::variable(vars[rng() % vars.size()]);
  const auto& ops = lang.operators();
  const auto& [name, arity] = ops[rng() % ops.size()];
  std::vector<Formula> args;
  for (int i = 0; i < arity; ++i) args.push_back(random_formula(rng, lang, vars, depth - 1));
  return Formula::apply(name, std::move(args));
}

struct Suite {
  std::vector<CheckResult> checks;

  void record(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({name, pass, detail});
  }
};

// --- criterion 1: the printed three-valued and pre-rough tables ----------

struct NamedTable {
  std::string op;
  std::vector<std::vector<std::string>> grid;  // rows by first argument
};

int check_tables(Suite& suite) {
  int checked = 0;
  bool ok = true;
  std::string first_bad;

  auto check_entry = [&](const FiniteAlgebra& alg, const std::string& op,
                         const std::vector<std::string>& args, const std::string& want) {
    std::vector<Formula> operands;
    Valuation v;
    const char* names[] = {"x", "y"};
    for (size_t i = 0; i < args.size(); ++i) {
      operands.push_back(Formula::variable(names[i]));
      v[names[i]] = args[i];
    }
    Formula f = Formula::apply(op, std::move(operands));
    ++checked;
    std::string got = evaluate(f, v, alg);
    if (got != want && ok) {
      ok = false;
      first_bad = op + "(" + (args.empty() ? "" : args[0]) +
                  (args.size() > 1 ? ", " + args[1] : "") + ") = " + got + ", expected " + want;
    }
  };

  auto check_binary = [&](const FiniteAlgebra& alg, const NamedTable& table,
                          const std::vector<std::string>& order) {
    for (size_t i = 0; i < order.size(); ++i)
      for (size_t j = 0; j < order.size(); ++j)
        check_entry(alg, table.op, {order[i], order[j]}, table.grid[i][j]);
  };

  const std::vector<std::string> three{"1", "1/2", "0"};
  const FiniteAlgebra& m3 = catalog_get("M3").algebra();
  check_binary(m3, {"&", {{"1", "1/2", "0"}, {"1/2", "1/2", "0"}, {"0", "0", "0"}}}, three);
  check_binary(m3, {"|", {{"1", "1", "1"}, {"1", "1/2", "1/2"}, {"1", "1/2", "0"}}}, three);
  check_binary(m3, {"->", {{"1", "0", "0"}, {"1", "1/2", "0"}, {"1", "1", "1"}}}, three);
  check_entry(m3, "~", {"1"}, "0");
  check_entry(m3, "~", {"1/2"}, "1/2");
  check_entry(m3, "~", {"0"}, "1");

  const FiniteAlgebra& ps3 = catalog_get("PS3").algebra();
  check_binary(ps3, {"&", {{"1", "1/2", "0"}, {"1/2", "1/2", "0"}, {"0", "0", "0"}}}, three);
  check_binary(ps3, {"|", {{"1", "1", "1"}, {"1", "1/2", "1/2"}, {"1", "1/2", "0"}}}, three);
  check_binary(ps3, {"->", {{"1", "1", "0"}, {"1", "1", "0"}, {"1", "1", "1"}}}, three);
  check_entry(ps3, "~", {"1"}, "0");
  check_entry(ps3, "~", {"1/2"}, "1/2");
  check_entry(ps3, "~", {"0"}, "1");

  const std::vector<std::string> chain{"0", "a", "1"};
  const FiniteAlgebra& r = catalog_get("prerough3").algebra();
  for (const auto& [op, col] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"~", {"1", "a", "0"}}, {"I", {"0", "a", "1"}}, {"C", {"0", "a", "1"}}})
    for (size_t i = 0; i < chain.size(); ++i) check_entry(r, op, {chain[i]}, col[i]);
  check_binary(r, {"&", {{"0", "0", "0"}, {"0", "a", "a"}, {"0", "a", "1"}}}, chain);
  check_binary(r, {"|", {{"0", "a", "1"}, {"a", "a", "1"}, {"1", "1", "1"}}}, chain);
  check_binary(r, {"->", {{"1", "1", "1"}, {"a", "a", "1"}, {"0", "a", "1"}}}, chain);
  check_entry(r, "0", {}, "0");
  check_entry(r, "1", {}, "1");

  suite.record("criterion 1 (truth-table fidelity)", ok,
               ok ? std::to_string(checked) + " table entries match exactly" : first_bad);
  return checked;
}

// --- criterion 2: the two-rule separation story ---------------------------

void check_minimal_separation(Suite& suite) {
  const HilbertSystem& minimal = catalog_get("minimal").as_system();
  const HilbertSystem& minimal_re = catalog_get("minimal-re").as_system();
  const Language& lang = minimal.lang;
  Formula premise = parse_formula("p & q", lang);
  Formula goal = parse_formula("p | q", lang);

  bool ok = true;
  std::ostringstream detail;

  auto found = derive_bounded({premise}, goal, minimal, {4, 16});
  bool search_ok = found.has_value() && !check_proof(*found, minimal).has_value();
  ok = ok && search_ok;
  detail << "search depth 4: " << (search_ok ? "proof found" : "MISSING");

  ConsequenceOracle re = hilbert_oracle(minimal_re, {8, 16});
  ConsequenceOracle left = left_companion(hilbert_oracle(minimal, {8, 16}));
  ComparisonReport report = compare_oracles(re, left, {{{premise}, goal}});
  bool compare_ok = report.rows.size() == 1 && report.rows[0].b_holds &&
                    report.rows[0].classification() == "b-only";
  ok = ok && compare_ok;
  detail << "; companion verdicts: " << (compare_ok ? "left-only, as required" : "WRONG");

  bool not_found = !derive_bounded({premise}, goal, minimal_re, {8, 16}).has_value();
  ok = ok && not_found;
  detail << "; restricted search depth 8: " << (not_found ? "not found" : "UNEXPECTED PROOF");

  Proof three;
  three.hypotheses = {premise};
  three.lines.push_back({premise, ProofLine::Kind::hypothesis, "", {}, {}});
  three.lines.push_back({parse_formula("p", lang), ProofLine::Kind::rule, "R1", {}, {0}});
  three.lines.push_back({goal, ProofLine::Kind::rule, "R2", {}, {1}});
  bool accepted = !check_proof(three, minimal).has_value();
  auto err = check_proof(three, minimal_re);
  bool rejected = err.has_value() && err->line == 1 &&
                  err->message.find("side condition violated") != std::string::npos &&
                  err->message.find("'q'") != std::string::npos;
  ok = ok && accepted && rejected;
  detail << "; three-line derivation: "
         << (accepted && rejected ? "accepted plain, rejected restricted at line 2"
                                  : "WRONG verdicts");

  suite.record("criterion 2 (two-rule separation)", ok, detail.str());
}

// --- criterion 3: explosion and non-contradiction facts -------------------

void check_ecq_lnc(Suite& suite) {
  struct Fact {
    std::string text;
    bool got, want;
  };
  std::vector<Fact> facts{
      {"ECQ fails on B2w", probe_ecq(catalog_get("B2w").as_matrix()), false},
      {"LNC holds on B2w", probe_lnc(catalog_get("B2w").as_matrix()), true},
      {"ECQ fails on M3", probe_ecq(catalog_get("M3").as_matrix()), false},
      {"ECQ fails on PS3", probe_ecq(catalog_get("PS3").as_matrix()), false},
      {"LNC fails on prerough3", probe_lnc(catalog_get("prerough3").as_matrix()), false},
      {"prerough3w strongly paraconsistent",
       classify_paraconsistency(catalog_get("prerough3w").as_matrix()) ==
           Paraconsistency::strongly,
       true},
      {"B2w weakly paraconsistent",
       classify_paraconsistency(catalog_get("B2w").as_matrix()) == Paraconsistency::weakly,
       true},
  };
  bool ok = true;
  std::string bad;
  for (const Fact& f : facts)
    if (f.got != f.want && ok) {
      ok = false;
      bad = f.text;
    }
  suite.record("criterion 3 (explosion and non-contradiction facts)", ok,
               ok ? std::to_string(facts.size()) + " matrix facts confirmed"
                  : "mismatch: " + bad);
}

// --- criterion 4: the three-valued deduction-theorem failure --------------

void check_rm3_deduction(Suite& suite) {
  const Matrix& m3 = catalog_get("M3").as_matrix();
  const Language& lang = m3.algebra.lang;
  DeductionInstance inst{{}, parse_formula("p | ~p", lang), parse_formula("q | ~q", lang)};
  auto rows = probe_deduction(m3, {inst});
  const DeductionReportRow& row = rows.at(0);
  bool witness_ok = row.implication_witness.has_value() &&
                    row.implication_witness->at("p") == "1" &&
                    row.implication_witness->at("q") == "1/2";
  bool value_ok =
      witness_ok &&
      evaluate(Formula::apply("->", {inst.antecedent, inst.consequent}),
               *row.implication_witness, m3.algebra) == "0";
  bool ok = row.premise_entails && !row.implication_entailed && witness_ok && value_ok;
  suite.record("criterion 4 (deduction-theorem failure over M3)", ok,
               ok ? "entailment holds, implication refuted at v(p)=1, v(q)=1/2 with value 0"
                  : "verdicts or witness wrong");
}

// --- criterion 5: the companion/extension equivalence ---------------------

void check_plonka_equivalence(Suite& suite, bool quick) {
  const int per_matrix = quick ? 1000 : 10000;
  const std::vector<std::string> vars{"p", "q", "r"};
  bool ok = true;
  std::string bad;
  long total = 0;

  for (const char* id : {"B2", "H3", "prerough3", "M3", "PS3"}) {
    const Matrix& m = catalog_get(id).as_matrix();
    Matrix ext = adjoin_contaminating(m);
    const Language& lang = m.algebra.lang;
    std::mt19937 rng(42);
    for (int i = 0; i < per_matrix; ++i) {
      FormulaSet premises;
      for (int k = rng() % 3; k > 0; --k) premises.insert(random_formula(rng, lang, vars, 3));
      Formula concl = random_formula(rng, lang, vars, 3);
      bool left = consequence(extract_delta(premises, concl), concl, {m});
      bool plonka = consequence(premises, concl, {m, ext});
      ++total;
      if (left != plonka && ok) {
        ok = false;
        bad = std::string(id) + " disagrees on " + print_instance({premises, concl});
      }
    }
  }
  suite.record("criterion 5 (companion matches the extended-matrix semantics)", ok,
               ok ? std::to_string(total) + " instances agree across five matrices" : bad);
}

// --- criterion 6: restricted successes stay inside the companion ----------

void check_containment(Suite& suite, bool quick) {
  bool ok = true;
  std::string bad;
  int successes = 0;
  long total = 0;

  {
    const HilbertSystem& minimal = catalog_get("minimal").as_system();
    ConsequenceOracle re = hilbert_oracle(catalog_get("minimal-re").as_system(), {4, 14});
    ConsequenceOracle left = left_companion(hilbert_oracle(minimal, {6, 14}));
    std::mt19937 rng(7);
    std::vector<std::string> vars{"p", "q", "r"};
    const int rounds = quick ? 300 : 2000;
    for (int i = 0; i < rounds; ++i) {
      FormulaSet premises;
      for (int k = rng() % 3; k > 0; --k)
        premises.insert(random_formula(rng, minimal.lang, vars, 2));
      Formula concl = random_formula(rng, minimal.lang, vars, 3);
      ++total;
      if (re(premises, concl)) {
        ++successes;
        if (!left(premises, concl) && ok) {
          ok = false;
          bad = "minimal: " + print_instance({premises, concl});
        }
      }
    }
  }

  {
    const HilbertSystem& ipc = catalog_get("ipc").as_system();
    ConsequenceOracle re = hilbert_oracle(catalog_get("hipwk").as_system(), {3, 18});
    ConsequenceOracle left = left_companion(hilbert_oracle(ipc, {5, 18}));
    const Language& lang = ipc.lang;
    std::vector<Instance> instances{
        {{parse_formula("p", lang)}, parse_formula("p | q", lang)},
        {{parse_formula("q", lang)}, parse_formula("p -> q", lang)},
        {{parse_formula("p", lang), parse_formula("q", lang)},
         parse_formula("q | q", lang)},
        {{}, parse_formula("p -> (q -> p)", lang)},
        {{}, parse_formula("0 -> p", lang)},
        {{parse_formula("r", lang)}, parse_formula("r | (p & q)", lang)},
        {{parse_formula("p & q", lang)}, parse_formula("p", lang)},
        {{parse_formula("p", lang), parse_formula("p -> q", lang)},
         parse_formula("q", lang)},
    };
    std::mt19937 rng(11);
    std::vector<std::string> vars{"p", "q", "r"};
    const int rounds = quick ? 60 : 250;
    for (int i = 0; i < rounds; ++i) {
      FormulaSet premises;
      for (int k = rng() % 3; k > 0; --k) premises.insert(random_formula(rng, lang, vars, 2));
      instances.push_back({premises, random_formula(rng, lang, vars, 2)});
    }
    for (const Instance& inst : instances) {
      ++total;
      if (re(inst.premises, inst.conclusion)) {
        ++successes;
        if (!left(inst.premises, inst.conclusion) && ok) {
          ok = false;
          bad = "ipc: " + print_instance(inst);
        }
      }
    }
  }

  ok = ok && successes > 20;
  suite.record("criterion 6 (restricted searches contained in the companion)", ok,
               ok ? std::to_string(successes) + " restricted successes out of " +
                        std::to_string(total) + " instances, no escapes"
                  : (successes <= 20 ? "too few restricted successes to be meaningful" : bad));
}

// --- criterion 7: theorem-proof translation corpus ------------------------

void check_translation_corpus(Suite& suite, const std::string& data_dir) {
  namespace fs = std::filesystem;
  if (data_dir.empty()) {
    suite.record("criterion 7 (theorem-proof translation corpus)", false,
                 "no data directory given; pass the corpus location");
    return;
  }
  int passed = 0, total = 0;
  bool ok = true;
  std::string bad;
  for (const auto& [sub, system_id] :
       std::vector<std::pair<std::string, std::string>>{{"ipc", "ipc"}, {"hprl", "hprl"}}) {
    fs::path dir = fs::path(data_dir) / "proofs" / sub;
    if (!fs::exists(dir)) continue;
    const HilbertSystem& system = catalog_get(system_id).as_system();
    HilbertSystem restricted = restricted_system(system);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.path().extension() == ".prf") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const fs::path& file : files) {
      ++total;
      try {
        Proof p = load_proof(read_file(file.string()), system);
        if (auto err = check_proof(p, system))
          throw Error("original fails: " + err->message);
        Proof translated = translate_theorem_proof(p, system);
        if (!(translated.conclusion() == p.conclusion()))
          throw Error("translation changed the conclusion");
        if (auto err = check_proof(translated, restricted))
          throw Error("translated proof fails at line " + std::to_string(err->line + 1) +
                      ": " + err->message);
        ++passed;
      } catch (const Error& e) {
        if (ok) {
          ok = false;
          bad = file.filename().string() + ": " + e.what();
        }
      }
    }
  }
  ok = ok && total >= 10 && passed == total;
  suite.record("criterion 7 (theorem-proof translation corpus)", ok,
               ok ? std::to_string(passed) + "/" + std::to_string(total) +
                        " corpus proofs translate and re-check"
                  : (total < 10 ? "corpus has fewer than 10 proofs" : bad));
}

// --- criterion 8: consequence-relation conditions --------------------------

void check_consequence_conditions(Suite& suite, bool quick) {
  const int per_matrix = quick ? 500 : 5000;
  bool ok = true;
  std::string bad;
  long instances = 0;

  std::vector<std::string> ids{"B2", "H3", "M3", "PS3", "prerough3",
                               "B2w", "H3w", "M3w", "PS3w", "prerough3w"};
  for (const std::string& id : ids) {
    const Matrix& m = catalog_get(id).as_matrix();
    const Language& lang = m.algebra.lang;
    ConsequenceOracle base = matrix_oracle({m}, id);
    ConsequenceOracle left = left_companion(base);
    std::mt19937 rng(1234);
    std::vector<std::string> vars{"p", "q", "r"};

    auto fail = [&](const std::string& what, const Instance& inst) {
      if (ok) {
        ok = false;
        bad = id + " violates " + what + " at " + print_instance(inst);
      }
    };

    for (int i = 0; i < per_matrix; ++i) {
      ++instances;
      FormulaSet sigma;
      for (int k = 1 + rng() % 2; k > 0; --k) sigma.insert(random_formula(rng, lang, vars, 2));
      Formula phi = random_formula(rng, lang, vars, 2);
      const ConsequenceOracle& oracle = (i % 2 == 0) ? base : left;
      const std::string tag = (i % 2 == 0) ? "base C" : "left C";

      FormulaSet with_phi = sigma;
      with_phi.insert(phi);
      if (!oracle(with_phi, phi)) fail(tag + "1", {with_phi, phi});

      if (oracle(sigma, phi)) {
        FormulaSet larger = sigma;
        larger.insert(random_formula(rng, lang, vars, 2));
        if (!oracle(larger, phi)) fail(tag + "3", {larger, phi});

        Substitution sub;
        for (const auto& x : vars)
          if (rng() % 2) sub.emplace(x, random_formula(rng, lang, vars, 1));
        FormulaSet sigma_sub;
        for (const Formula& f : sigma) sigma_sub.insert(apply_substitution(sub, f));
        if (!oracle(sigma_sub, apply_substitution(sub, phi)))
          fail(tag + "4", {sigma_sub, apply_substitution(sub, phi)});
      }

      FormulaSet delta;
      if (rng() % 2) {
        delta = sigma;
        delta.insert(random_formula(rng, lang, vars, 2));
      } else {
        for (int k = 1 + rng() % 2; k > 0; --k) delta.insert(random_formula(rng, lang, vars, 2));
      }
      bool covers = true;
      for (const Formula& psi : sigma) covers = covers && oracle(delta, psi);
      if (covers && oracle(sigma, phi) && !oracle(delta, phi)) fail(tag + "2", {delta, phi});

      // companion below the base, with the same theorems
      if (left(sigma, phi) && !base(sigma, phi)) fail("left within base", {sigma, phi});
      if (i % 10 == 0 && left({}, phi) != base({}, phi)) fail("theorem equality", {{}, phi});
    }
  }
  suite.record("criterion 8 (consequence conditions for bases and companions)", ok,
               ok ? std::to_string(instances) + " randomized instances across " +
                        std::to_string(ids.size()) + " matrices, no violations"
                  : bad);
}

// --- criterion 9: deduction-theorem transfer over the Heyting chain -------

void check_deduction_transfer(Suite& suite, bool quick) {
  const Matrix& h3 = catalog_get("H3").as_matrix();
  const Language& lang = h3.algebra.lang;
  ConsequenceOracle base = matrix_oracle({h3}, "H3");
  ConsequenceOracle left = left_companion(base);

  std::mt19937 rng(5150);
  std::vector<std::string> vars{"p", "q", "r"};
  const int rounds = quick ? 600 : 4000;
  bool ok = true;
  std::string bad;
  int converse_failures = 0, forced_failures = 0;

  for (int i = 0; i < rounds; ++i) {
    FormulaSet sigma;
    for (int k = rng() % 3; k > 0; --k) sigma.insert(random_formula(rng, lang, vars, 2));
    Formula alpha = random_formula(rng, lang, vars, 2);
    Formula beta = random_formula(rng, lang, vars, 2);
    Formula implication = Formula::apply("->", {alpha, beta});
    FormulaSet with_alpha = sigma;
    with_alpha.insert(alpha);

    bool premise_side = left(with_alpha, beta);
    bool implication_side = left(sigma, implication);

    // deduction theorem: always transfers to the companion
    if (premise_side && !implication_side && ok) {
      ok = false;
      bad = "deduction direction fails at " + print_instance({with_alpha, beta});
    }

    auto avars = variables_of(alpha);
    auto bvars = variables_of(beta);
    bool proviso = std::includes(bvars.begin(), bvars.end(), avars.begin(), avars.end());

    if (implication_side && !premise_side) {
      ++converse_failures;
      // converse failures happen only outside the inclusion proviso
      if (proviso && ok) {
        ok = false;
        bad = "converse fails despite var inclusion at " + print_instance({sigma, implication});
      }
    }

    // outside the proviso the failure is forced once the conclusion is not
    // already reachable: a fresh antecedent variable cannot be recovered
    auto svars = variables_of(sigma);
    bool fresh = false;
    for (const std::string& v : avars)
      fresh = fresh || (!bvars.count(v) && !svars.count(v));
    if (fresh && implication_side && !left(sigma, beta)) {
      ++forced_failures;
      if (premise_side && ok) {
        ok = false;
        bad = "converse unexpectedly holds at " + print_instance({sigma, implication});
      }
    }
  }
  ok = ok && converse_failures > 0 && forced_failures > 0;
  suite.record(
      "criterion 9 (deduction-theorem transfer over H3)", ok,
      ok ? std::to_string(rounds) + " instances: deduction direction clean, " +
               std::to_string(converse_failures) + " converse failures, all outside the " +
               "inclusion proviso (" + std::to_string(forced_failures) + " forced)"
         : bad);
}

// --- narrative checks beyond the numbered criteria ------------------------

void check_prerough_story(Suite& suite) {
  const HilbertSystem& hprl = catalog_get("hprl").as_system();
  const HilbertSystem& hprl_re = catalog_get("hprl-re").as_system();
  const Language& lang = hprl.lang;

  Proof p;
  p.hypotheses = {parse_formula("p & q", lang)};
  p.lines.push_back({parse_formula("p & q", lang), ProofLine::Kind::hypothesis, "", {}, {}});
  p.lines.push_back({parse_formula("(p & q) -> q", lang), ProofLine::Kind::axiom, "A3",
                     Substitution{{"a", parse_formula("p", lang)},
                                  {"b", parse_formula("q", lang)}},
                     {}});
  p.lines.push_back({parse_formula("q", lang), ProofLine::Kind::rule, "MP", {}, {0, 1}});
  p.lines.push_back({parse_formula("p -> q", lang), ProofLine::Kind::rule, "R3", {}, {2}});

  bool plain_ok = !check_proof(p, hprl).has_value();
  auto err = check_proof(p, hprl_re);
  bool restricted_rejects = err.has_value() && err->line == 2;

  // The detachment route is blocked, but the restricted system still
  // derives p -> q: weaken the hypothesis into p -> (p & q), then compose
  // with the elimination axiom by restricted syllogism, whose middle-term
  // condition var(p & q) <= var(p) + var(q) is satisfied.  Conjunction
  // splitting is not the only road.
  auto detour = derive_bounded({parse_formula("p & q", lang)}, parse_formula("p -> q", lang),
                               hprl_re, {6, 12});
  bool detour_ok = detour.has_value() && !check_proof(*detour, hprl_re).has_value() &&
                   detour->conclusion() == parse_formula("p -> q", lang);
  bool ok = plain_ok && restricted_rejects && detour_ok;
  suite.record("pre-rough conjunction-splitting story", ok,
               ok ? "four-line derivation checks; the restricted variant rejects it at the "
                    "detachment step yet derives the implication through weakening and "
                    "restricted syllogism"
                  : "unexpected verdicts");
}

void check_rm3_not_companion(Suite& suite) {
  const Matrix& m3 = catalog_get("M3").as_matrix();
  const Language& lang = m3.algebra.lang;
  Formula p = parse_formula("p", lang), q = parse_formula("q", lang);
  Formula impl = parse_formula("p -> q", lang);
  bool ok = consequence({p, impl}, q, {m3}) && !is_tautology(q, {m3}) &&
            extract_delta({p, impl}, q).empty();
  suite.record("detachment logic is no companion", ok,
               ok ? "modus ponens holds, q is no theorem, and the variable-included premise "
                    "subset is empty"
                  : "witness facts wrong");
}

void check_falsum_equivalence(Suite& suite) {
  const FiniteAlgebra& ps3 = catalog_get("PS3").algebra();
  bool ok = true;
  for (const std::string& x : ps3.universe)
    ok = ok && evaluate(parse_formula("~(p -> p)", ps3.lang), {{"p", x}}, ps3) == "0";
  suite.record("falsum abbreviation is value-independent", ok,
               ok ? "~(x -> x) evaluates to 0 for every x in the three-valued tables"
                  : "abbreviation depends on the instance");
}

void check_catalog_classes(Suite& suite) {
  bool ok = is_heyting(catalog_get("B2").algebra()) && is_heyting(catalog_get("H3").algebra()) &&
            is_pre_rough(catalog_get("prerough3").algebra());
  for (const char* id : {"M3", "PS3"}) {
    const FiniteAlgebra& src = catalog_get(id).algebra();
    FiniteAlgebra reduct;
    reduct.lang = Language{{"&", 2}, {"|", 2}, {"~", 1}, {"0", 0}, {"1", 0}};
    reduct.universe = src.universe;
    reduct.tables["&"] = src.table_of("&");
    reduct.tables["|"] = src.table_of("|");
    reduct.tables["~"] = src.table_of("~");
    reduct.tables["0"] = {src.index_of("0")};
    reduct.tables["1"] = {src.index_of("1")};
    ok = ok && is_quasi_boolean(reduct);
  }
  suite.record("catalog class membership", ok,
               ok ? "Heyting, pre-rough and quasi-Boolean predicates hold where declared"
                  : "a catalog algebra fails its class predicate");
}

}  // namespace

bool ReproReport::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

ReproReport run_repro(const ReproOptions& options) {
  Suite suite;
  check_tables(suite);
  check_minimal_separation(suite);
  check_ecq_lnc(suite);
  check_rm3_deduction(suite);
  check_plonka_equivalence(suite, options.quick);
  check_containment(suite, options.quick);
  check_translation_corpus(suite, options.data_dir);
  check_consequence_conditions(suite, options.quick);
  check_deduction_transfer(suite, options.quick);
  check_prerough_story(suite);
  check_rm3_not_companion(suite);
  check_falsum_equivalence(suite);
  check_catalog_classes(suite);
  return {std::move(suite.checks)};
}

void print_report(const ReproReport& report, std::ostream& out) {
  for (const CheckResult& c : report.checks)
    out << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " - " << c.detail << '\n';
  out << (report.all_pass() ? "all checks passed" : "some checks FAILED") << '\n';
}

}  // namespace vilogic
