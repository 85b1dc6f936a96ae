// Command-line workbench: evaluate formulas in finite matrices, test
// consequence, build contaminated extensions, check and search proofs,
// compare companion relations, probe paraconsistency, enumerate small
// algebras, and run the built-in reproduction suite.
//
// Exit codes: 0 success / property holds, 1 property fails / not found,
// 2 usage or input error.

#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vilogic/algebra_classes.hpp"
#include "vilogic/catalog.hpp"
#include "vilogic/io.hpp"
#include "vilogic/repro.hpp"

using namespace vilogic;

namespace {

bool is_file(const std::string& name) { return std::filesystem::exists(name); }

Matrix resolve_matrix(const std::string& name) {
  if (!is_file(name)) return catalog_get(name).as_matrix();
  return load_matrix(read_file(name));
}

HilbertSystem resolve_system(const std::string& name) {
  if (!is_file(name)) return catalog_get(name).as_system();
  return load_hilbert_system(read_file(name));
}

Valuation parse_assignments(const std::string& text) {
  Valuation v;
  size_t start = 0;
  while (start < text.size()) {
    size_t comma = text.find(',', start);
    std::string chunk = text.substr(start, comma - start);
    size_t eq = chunk.find('=');
    if (eq == std::string::npos) throw Error("assignments look like p=1,q=1/2");
    v[chunk.substr(0, eq)] = chunk.substr(eq + 1);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return v;
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t at = text.find(sep, start);
    std::string chunk = text.substr(start, at - start);
    if (!chunk.empty()) out.push_back(chunk);
    if (at == std::string::npos) break;
    start = at + 1;
  }
  return out;
}

struct DtTriple {
  FormulaSet context;
  Formula antecedent, consequent;
};

// dt instance lines: premises |- antecedent |- consequent
DtTriple parse_dt_line(const std::string& line, const Language& lang) {
  size_t first = line.find("|-");
  size_t second = line.find("|-", first + 2);
  if (first == std::string::npos || second == std::string::npos)
    throw Error("deduction instances look like 'premises |- antecedent |- consequent'");
  FormulaSet context;
  for (const std::string& chunk : split_list(line.substr(0, first), ';')) {
    std::string t = chunk;
    if (t.find_first_not_of(" \t") == std::string::npos) continue;
    context.insert(parse_formula(t, lang));
  }
  return {std::move(context), parse_formula(line.substr(first + 2, second - first - 2), lang),
          parse_formula(line.substr(second + 2), lang)};
}

int run(int argc, char** argv) {
  CLI::App app{"finite-model workbench for variable-inclusion logics"};
  app.require_subcommand(1);

  // eval -------------------------------------------------------------
  std::string eval_matrix, eval_formula, eval_assign;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula in a matrix's algebra");
  eval_cmd->add_option("matrix", eval_matrix, "catalog id or matrix file")->required();
  eval_cmd->add_option("formula", eval_formula, "formula text")->required();
  eval_cmd->add_option("--assign", eval_assign, "variable assignments p=1,q=1/2");

  // consequence --------------------------------------------------------
  std::string cons_matrices, cons_instance;
  auto* cons_cmd = app.add_subcommand("consequence", "test matrix consequence");
  cons_cmd->add_option("matrices", cons_matrices, "comma-separated ids or files")->required();
  cons_cmd->add_option("instance", cons_instance, "'premises |- conclusion'")->required();

  // plonka ---------------------------------------------------------------
  std::string plonka_file, plonka_adjoin;
  auto* plonka_cmd = app.add_subcommand("plonka", "sum a directed system of matrices");
  plonka_cmd->add_option("system-file", plonka_file, "directed-system file");
  plonka_cmd->add_option("--adjoin-omega", plonka_adjoin,
                         "instead, extend a matrix with the contaminating element");

  // check-proof ---------------------------------------------------------
  std::string chk_system, chk_proof;
  auto* chk_cmd = app.add_subcommand("check-proof", "check a proof script");
  chk_cmd->add_option("system", chk_system, "catalog id or system file")->required();
  chk_cmd->add_option("proof-file", chk_proof, "proof script")->required();

  // search-proof ----------------------------------------------------------
  std::string search_system, search_instance;
  int search_depth = 6, search_cap = 16;
  auto* search_cmd = app.add_subcommand("search-proof", "bounded proof search");
  search_cmd->add_option("system", search_system, "catalog id or system file")->required();
  search_cmd->add_option("instance", search_instance, "'premises |- goal'")->required();
  search_cmd->add_option("--depth", search_depth, "saturation rounds (default 6)");
  search_cmd->add_option("--size-cap", search_cap, "formula size cap (default 16)");

  // companion compare --------------------------------------------------
  auto* companion_cmd = app.add_subcommand("companion", "companion constructions");
  companion_cmd->require_subcommand(1);
  std::string cmp_system, cmp_instances;
  int cmp_depth = 6, cmp_cap = 16;
  auto* cmp_cmd = companion_cmd->add_subcommand(
      "compare", "restricted-rules vs left variable inclusion verdicts");
  cmp_cmd->add_option("system", cmp_system, "catalog id or system file")->required();
  cmp_cmd->add_option("--instances", cmp_instances, "instance batch file")->required();
  cmp_cmd->add_option("--depth", cmp_depth, "search depth for both oracles (default 6)");
  cmp_cmd->add_option("--size-cap", cmp_cap, "formula size cap (default 16)");

  // probe ------------------------------------------------------------------
  std::string probe_kind, probe_matrix, probe_instances;
  auto* probe_cmd = app.add_subcommand("probe", "paraconsistency probes");
  probe_cmd->add_option("kind", probe_kind, "ecq | land-ecq | lnc | dt | classify")->required();
  probe_cmd->add_option("matrix", probe_matrix, "catalog id or matrix file")->required();
  probe_cmd->add_option("--instances", probe_instances,
                        "dt only: lines 'premises |- antecedent |- consequent'");

  // enumerate -----------------------------------------------------------
  std::string enum_class;
  int enum_size = 3;
  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate small algebras of a class");
  enum_cmd->add_option("class", enum_class,
                       "bounded-distributive-lattice | quasi-boolean | heyting | pre-rough")
      ->required();
  enum_cmd->add_option("--max-size", enum_size, "largest universe (default 3, limit 4)");

  // repro ----------------------------------------------------------------
  std::string repro_data = "tests/data";
  bool repro_quick = false;
  auto* repro_cmd = app.add_subcommand("repro", "run the full reproduction suite");
  repro_cmd->add_option("--data", repro_data, "corpus directory (default tests/data)");
  repro_cmd->add_flag("--quick", repro_quick, "reduced instance counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (eval_cmd->parsed()) {
    Matrix m = resolve_matrix(eval_matrix);
    Formula f = parse_formula(eval_formula, m.algebra.lang);
    Valuation v = eval_assign.empty() ? Valuation{} : parse_assignments(eval_assign);
    std::cout << evaluate(f, v, m.algebra) << '\n';
    return 0;
  }

  if (cons_cmd->parsed()) {
    std::vector<Matrix> matrices;
    for (const std::string& name : split_list(cons_matrices, ','))
      matrices.push_back(resolve_matrix(name));
    if (matrices.empty()) throw Error("no matrices given");
    Instance inst = parse_instance(cons_instance, matrices[0].algebra.lang);
    bool holds = consequence(inst.premises, inst.conclusion, matrices);
    std::cout << (holds ? "holds" : "fails") << '\n';
    if (!holds) {
      for (const Matrix& m : matrices)
        if (auto witness = find_countervaluation(inst.premises, inst.conclusion, m)) {
          std::cout << "countervaluation:";
          for (const auto& [var, val] : *witness) std::cout << ' ' << var << '=' << val;
          std::cout << '\n';
          break;
        }
    }
    return holds ? 0 : 1;
  }

  if (plonka_cmd->parsed()) {
    if (!plonka_adjoin.empty()) {
      std::cout << store_matrix(adjoin_contaminating(resolve_matrix(plonka_adjoin)));
      return 0;
    }
    if (plonka_file.empty()) throw Error("give a system file or --adjoin-omega");
    DirectedSystemOfMatrices sys = make_disjoint(load_directed_system(read_file(plonka_file)));
    auto violations = validate_directed_system(sys);
    if (!violations.empty()) {
      std::cout << "invalid directed system:\n";
      for (const std::string& v : violations) std::cout << "  " << v << '\n';
      return 1;
    }
    std::cout << store_matrix(plonka_sum_matrices(sys));
    return 0;
  }

  if (chk_cmd->parsed()) {
    HilbertSystem s = resolve_system(chk_system);
    Proof p = load_proof(read_file(chk_proof), s);
    if (auto err = check_proof(p, s)) {
      std::cout << "error at line " << (err->line + 1) << ": " << err->message << '\n';
      return 1;
    }
    std::cout << "ok\n";
    return 0;
  }

  if (search_cmd->parsed()) {
    HilbertSystem s = resolve_system(search_system);
    Instance inst = parse_instance(search_instance, s.lang);
    auto proof = derive_bounded(inst.premises, inst.conclusion, s, {search_depth, search_cap});
    if (!proof) {
      std::cout << "not found within depth " << search_depth << " (size cap " << search_cap
                << ")\n";
      return 1;
    }
    std::cout << store_proof(*proof);
    return 0;
  }

  if (cmp_cmd->parsed()) {
    HilbertSystem s = resolve_system(cmp_system);
    SearchLimits limits{cmp_depth, cmp_cap};
    ConsequenceOracle re = hilbert_oracle(restricted_system(s), limits);
    ConsequenceOracle left = left_companion(hilbert_oracle(s, limits));
    auto instances = load_instances(read_file(cmp_instances), s.lang);
    ComparisonReport report = compare_oracles(re, left, instances);
    std::cout << "a = restricted-rules search, b = left variable inclusion companion\n"
              << "(negative verdicts mean: not found within depth " << cmp_depth << ")\n";
    for (const ComparisonRow& row : report.rows)
      std::cout << print_instance(row.instance) << "  a=" << (row.a_holds ? "yes" : "no")
                << " b=" << (row.b_holds ? "yes" : "no") << "  " << row.classification()
                << '\n';
    std::cout << "agree " << report.agree << ", a-only " << report.a_only << ", b-only "
              << report.b_only << '\n';
    return 0;
  }

  if (probe_cmd->parsed()) {
    Matrix m = resolve_matrix(probe_matrix);
    if (probe_kind == "ecq" || probe_kind == "land-ecq" || probe_kind == "lnc") {
      bool holds = probe_kind == "ecq"        ? probe_ecq(m)
                   : probe_kind == "land-ecq" ? probe_land_ecq(m)
                                              : probe_lnc(m);
      std::cout << (holds ? "holds" : "fails") << '\n';
      return holds ? 0 : 1;
    }
    if (probe_kind == "classify") {
      std::cout << to_string(classify_paraconsistency(m)) << '\n';
      return 0;
    }
    if (probe_kind == "dt") {
      std::vector<DeductionInstance> instances;
      if (probe_instances.empty()) {
        const Language& lang = m.algebra.lang;
        instances.push_back(
            {{}, parse_formula("p | ~p", lang), parse_formula("q | ~q", lang)});
      } else {
        std::istringstream in(read_file(probe_instances));
        std::string line;
        while (std::getline(in, line)) {
          if (line.empty() || line[0] == '#') continue;
          DtTriple t = parse_dt_line(line, m.algebra.lang);
          instances.push_back({t.context, t.antecedent, t.consequent});
        }
      }
      bool all_hold = true;
      for (const auto& row : probe_deduction(m, instances)) {
        std::cout << print_instance({row.instance.context, row.instance.antecedent})
                  << " => " << print_formula(row.instance.consequent)
                  << "  deduction=" << (row.dt_holds ? "holds" : "fails")
                  << " converse=" << (row.converse_holds ? "holds" : "fails")
                  << " var-inclusion=" << (row.var_inclusion ? "yes" : "no");
        if (row.implication_witness) {
          std::cout << "  implication refuted at";
          for (const auto& [var, val] : *row.implication_witness)
            std::cout << ' ' << var << '=' << val;
        }
        std::cout << '\n';
        all_hold = all_hold && row.dt_holds && row.converse_holds;
      }
      return all_hold ? 0 : 1;
    }
    throw Error("unknown probe kind '" + probe_kind + "'");
  }

  if (enum_cmd->parsed()) {
    AlgebraClass c = algebra_class_from_name(enum_class);
    auto algebras = enumerate_algebras(c, required_language(c), enum_size);
    int i = 0;
    for (const FiniteAlgebra& a : algebras) {
      std::cout << "# " << enum_class << " " << ++i << " of " << algebras.size() << " (size "
                << a.universe.size() << ")\n"
                << store_algebra(a) << '\n';
    }
    return 0;
  }

  if (repro_cmd->parsed()) {
    ReproOptions options;
    options.data_dir = repro_data;
    options.quick = repro_quick;
    ReproReport report = run_repro(options);
    print_report(report, std::cout);
    return report.all_pass() ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;  // CLI11_PARSE already reported; normalize the exit code
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
