#include "vilogic/catalog.hpp"

#include <algorithm>
#include <map>

namespace vilogic {

const Language& lattice_language() {
  static const Language lang{{"&", 2}, {"|", 2}};
  return lang;
}

const Language& rm3_language() {
  static const Language lang{{"&", 2}, {"|", 2}, {"->", 2}, {"~", 1}};
  return lang;
}

const Language& ipc_language() {
  static const Language lang{{"&", 2}, {"|", 2}, {"->", 2}, {"~", 1}, {"0", 0}, {"1", 0}};
  return lang;
}

const Language& prerough_language() {
  static const Language lang{{"&", 2}, {"|", 2}, {"->", 2}, {"~", 1},
                             {"I", 1}, {"C", 1}, {"0", 0},  {"1", 0}};
  return lang;
}

const FiniteAlgebra& CatalogEntry::algebra() const { return as_matrix().algebra; }

const Matrix& CatalogEntry::as_matrix() const {
  if (!matrix) throw Error("catalog entry '" + id + "' is not a matrix");
  return *matrix;
}

const HilbertSystem& CatalogEntry::as_system() const {
  if (!system) throw Error("catalog entry '" + id + "' is not a Hilbert system");
  return *system;
}

namespace {

Matrix b2_matrix() {
  Matrix m;
  m.algebra.lang = ipc_language();
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
  m.algebra.lang = ipc_language();
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

// Universe order (1, 1/2, 0), matching the printed three-valued tables.
Matrix m3_matrix() {
  Matrix m;
  m.algebra.lang = rm3_language();
  m.algebra.universe = {"1", "1/2", "0"};
  m.algebra.tables["&"] = {0, 1, 2, 1, 1, 2, 2, 2, 2};
  m.algebra.tables["|"] = {0, 0, 0, 0, 1, 1, 0, 1, 2};
  m.algebra.tables["->"] = {0, 2, 2, 0, 1, 2, 0, 0, 0};
  m.algebra.tables["~"] = {2, 1, 0};
  m.designated = {"1", "1/2"};
  return m;
}

Matrix ps3_matrix() {
  Matrix m = m3_matrix();
  m.algebra.tables["->"] = {0, 0, 2, 0, 0, 2, 0, 0, 0};
  return m;
}

Matrix prerough3_matrix() {
  Matrix m;
  m.algebra.lang = prerough_language();
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

HilbertSystem minimal_system() {
  const Language& lang = lattice_language();
  HilbertSystem s;
  s.name = "minimal";
  s.lang = lang;
  s.rules.push_back({"R1", {parse_formula("a & b", lang)}, parse_formula("a", lang), false});
  s.rules.push_back({"R2", {parse_formula("a", lang)}, parse_formula("a | b", lang), false});
  return s;
}

HilbertSystem ipc_system() {
  const Language& lang = ipc_language();
  auto f = [&](const char* text) { return parse_formula(text, lang); };
  HilbertSystem s;
  s.name = "ipc";
  s.lang = lang;
  s.axioms = {
      {"A1", f("a -> (b -> a)")},
      {"A2", f("(a -> (b -> c)) -> ((a -> b) -> (a -> c))")},
      {"A3", f("a -> (b -> (a & b))")},
      {"A4", f("a & b -> a")},
      {"A5", f("a & b -> b")},
      {"A6", f("a -> a | b")},
      {"A7", f("b -> a | b")},
      {"A8", f("(a -> c) -> ((b -> c) -> (a | b -> c))")},
      {"A9", f("(a -> b) -> ((a -> ~b) -> ~a)")},
      {"A10", f("0 -> a")},
  };
  s.rules.push_back({"MP", {f("a"), f("a -> b")}, f("b"), false});
  return s;
}

HilbertSystem hprl_system() {
  const Language& lang = prerough_language();
  auto f = [&](const char* text) { return parse_formula(text, lang); };
  HilbertSystem s;
  s.name = "hprl";
  s.lang = lang;
  s.axioms = {
      {"A1", f("a -> ~(~a)")},
      {"A2", f("~(~a) -> a")},
      {"A3", f("(a & b) -> b")},
      {"A4", f("(a & b) -> (b & a)")},
      {"A5", f("(a & (b | c)) -> ((a & b) | (a & c))")},
      {"A6", f("((a & b) | (a & c)) -> (a & (b | c))")},
      {"A7", f("(a | b) -> ~(~a & ~b)")},
      {"A8", f("~(~a & ~b) -> (a | b)")},
      {"A9", f("C a -> ~(I (~a))")},
      {"A10", f("~(I (~a)) -> C a")},
      {"A11", f("I a -> a")},
      {"A12", f("(I a & I b) -> I (a & b)")},
      {"A13", f("(a -> b) -> ((~(I a) | I b) & (~(C a) | C b))")},
      {"A14", f("((~(I a) | I b) & (~(C a) | C b)) -> (a -> b)")},
  };
  s.rules.push_back({"MP", {f("a"), f("a -> b")}, f("b"), false});
  s.rules.push_back({"HS", {f("a -> b"), f("b -> c")}, f("a -> c"), false});
  s.rules.push_back({"R3", {f("a")}, f("b -> a"), false});
  s.rules.push_back({"R4", {f("a -> b")}, f("~b -> ~a"), false});
  s.rules.push_back({"R5", {f("a -> b"), f("a -> c")}, f("a -> (b & c)"), false});
  s.rules.push_back(
      {"R6", {f("a -> b"), f("b -> a"), f("c -> d"), f("d -> c")}, f("(a -> c) -> (b -> d)"),
       false});
  s.rules.push_back({"R7", {f("a -> b")}, f("I a -> I b"), false});
  s.rules.push_back({"R8", {f("a")}, f("I a"), false});
  s.rules.push_back({"R9", {f("I a -> I b"), f("C a -> C b")}, f("a -> b"), false});
  return s;
}

HilbertSystem rm3_system() {
  const Language& lang = rm3_language();
  auto f = [&](const char* text) { return parse_formula(text, lang); };
  HilbertSystem s;
  s.name = "rm3";
  s.lang = lang;
  s.axioms = {
      {"A1", f("a -> a")},
      {"A2", f("(a -> b) -> ((b -> c) -> (a -> c))")},
      {"A3", f("a -> ((a -> b) -> b)")},
      {"A4", f("(a -> (a -> b)) -> (a -> b)")},
      {"A5", f("(a & b) -> a")},
      {"A6", f("(a & b) -> b")},
      {"A7", f("((a -> b) & (a -> c)) -> (a -> (b & c))")},
      {"A8", f("a -> (a | b)")},
      {"A9", f("b -> (a | b)")},
      {"A10", f("((a -> c) & (b -> c)) -> ((a | b) -> c)")},
      {"A11", f("(a & (b | c)) -> ((a & b) | (a & c))")},
      {"A12", f("~(~a) -> a")},
      {"A13", f("(a -> ~b) -> (b -> ~a)")},
      {"A14", f("a -> (a -> a)")},
      {"A15", f("a | (a -> b)")},
  };
  s.rules.push_back({"AndI", {f("a"), f("b")}, f("a & b"), false});
  s.rules.push_back({"MP", {f("a"), f("a -> b")}, f("b"), false});
  return s;
}

// The falsum abbreviation is expanded at load time: a reserved schema
// variable p0 stands for the arbitrary formula inside ~(p0 -> p0).
HilbertSystem lps3_system() {
  const Language& lang = rm3_language();
  auto f = [&](const char* text) { return parse_formula(text, lang); };
  HilbertSystem s;
  s.name = "lps3";
  s.lang = lang;
  s.axioms = {
      {"A1", f("a -> (b -> a)")},
      {"A2", f("(a -> (b -> c)) -> ((a -> b) -> (a -> c))")},
      {"A3", f("(a & b) -> a")},
      {"A4", f("(a & b) -> b")},
      {"A5", f("a -> (a | b)")},
      {"A6", f("((a -> c) & (b -> c)) -> ((a | b) -> c)")},
      {"A7", f("((a -> b) & (a -> c)) -> (a -> (b & c))")},
      {"A8", f("(a -> ~(~a)) & (~(~a) -> a)")},
      {"A9", f("(~(a & b) -> (~a | ~b)) & ((~a | ~b) -> ~(a & b))")},
      {"A10", f("(a & ~a) -> (~(b -> a) -> c)")},
      {"A11", f("(a -> b) -> (~(a -> c) -> b)")},
      {"A12", f("(~a -> b) -> (~(c -> a) -> b)")},
      {"A13", f("~(p0 -> p0) -> a")},
      {"A14", f("(a & (b -> ~(p0 -> p0))) -> ~(a -> b)")},
      {"A15", f("(a & (~a -> ~(p0 -> p0))) | (a & ~a) | (~a & (a -> ~(p0 -> p0)))")},
  };
  s.rules.push_back({"AndI", {f("a"), f("b")}, f("a & b"), false});
  s.rules.push_back({"MP", {f("a"), f("a -> b")}, f("b"), false});
  return s;
}

HilbertSystem renamed(HilbertSystem s, const std::string& name) {
  s.name = name;
  return s;
}

std::map<std::string, CatalogEntry> build_catalog() {
  std::map<std::string, CatalogEntry> entries;
  auto add_matrix = [&](const std::string& id, Matrix m, const std::string& note) {
    entries[id] = CatalogEntry{id, CatalogKind::matrix, std::move(m), std::nullopt, note};
  };
  auto add_system = [&](const std::string& id, HilbertSystem s, const std::string& note) {
    entries[id] = CatalogEntry{id, CatalogKind::system, std::nullopt, std::move(s), note};
  };

  add_matrix("B2", b2_matrix(), "two-element Boolean matrix, designated {1}");
  add_matrix("H3", h3_matrix(), "three-chain Heyting matrix, designated {1}");
  add_matrix("M3", m3_matrix(),
             "three-valued relevance-mingle matrix, designated {1, 1/2}");
  add_matrix("PS3", ps3_matrix(),
             "three-valued matrix with the detachment-friendly conditional, designated {1, 1/2}");
  add_matrix("prerough3", prerough3_matrix(),
             "smallest nontrivial three-element pre-rough matrix, designated {1}");
  for (const char* base : {"B2", "H3", "M3", "PS3", "prerough3"})
    add_matrix(std::string(base) + "w", adjoin_contaminating(entries[base].as_matrix()),
               entries[base].note + ", extended with the contaminating element w");

  HilbertSystem minimal = minimal_system();
  add_system("minimal", minimal, "conjunction-elimination / disjunction-introduction system");
  add_system("minimal-re", renamed(restricted_system(minimal), "minimal-re"),
             "minimal system with the variable-inclusion restriction on R1");
  HilbertSystem ipc = ipc_system();
  add_system("ipc", ipc, "intuitionistic base: ten axiom schemas with modus ponens");
  add_system("hipwk", renamed(restricted_system(ipc), "hipwk"),
             "intuitionistic axioms with restricted modus ponens");
  HilbertSystem hprl = hprl_system();
  add_system("hprl", hprl, "pre-rough base: fourteen axiom schemas, nine rules");
  add_system("hprl-re", renamed(restricted_system(hprl), "hprl-re"),
             "pre-rough base with restricted modus ponens and hypothetical syllogism");
  add_system("rm3", rm3_system(), "relevance-mingle system: adjunction and modus ponens");
  add_system("lps3", lps3_system(),
             "fifteen-axiom system over the three-valued detachment-friendly matrix");
  return entries;
}

const std::map<std::string, CatalogEntry>& catalog() {
  static const std::map<std::string, CatalogEntry> entries = build_catalog();
  return entries;
}

Formula fresh_var(const char* name) { return Formula::variable(name); }

void require_operator(const Matrix& m, const std::string& op) {
  if (!m.algebra.lang.has_operator(op))
    throw Error("probe needs operator '" + op + "' in the matrix language");
}

}  // namespace

const CatalogEntry& catalog_get(const std::string& id) {
  auto it = catalog().find(id);
  if (it == catalog().end()) throw Error("unknown catalog id '" + id + "'");
  return it->second;
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, _] : catalog()) ids.push_back(id);
  return ids;
}

bool probe_ecq(const Matrix& m) {
  require_operator(m, "~");
  Formula p = fresh_var("p"), q = fresh_var("q");
  return consequence({p, Formula::apply("~", {p})}, q, {m});
}

bool probe_land_ecq(const Matrix& m) {
  require_operator(m, "~");
  require_operator(m, "&");
  Formula p = fresh_var("p"), q = fresh_var("q");
  return consequence({Formula::apply("&", {p, Formula::apply("~", {p})})}, q, {m});
}

bool probe_lnc(const Matrix& m) {
  require_operator(m, "~");
  require_operator(m, "&");
  Formula p = fresh_var("p");
  return is_tautology(
      Formula::apply("~", {Formula::apply("&", {p, Formula::apply("~", {p})})}), {m});
}

std::string to_string(Paraconsistency p) {
  switch (p) {
    case Paraconsistency::not_paraconsistent: return "not paraconsistent";
    case Paraconsistency::weakly: return "weakly paraconsistent";
    case Paraconsistency::strongly: return "strongly paraconsistent";
  }
  throw Error("unknown paraconsistency value");
}

Paraconsistency classify_paraconsistency(const Matrix& m) {
  if (probe_ecq(m)) return Paraconsistency::not_paraconsistent;
  return probe_lnc(m) ? Paraconsistency::weakly : Paraconsistency::strongly;
}

std::vector<DeductionReportRow> probe_deduction(const Matrix& m,
                                                const std::vector<DeductionInstance>& instances) {
  require_operator(m, "->");
  std::vector<DeductionReportRow> rows;
  for (const DeductionInstance& inst : instances) {
    DeductionReportRow row{inst, false, false, false, false, false, std::nullopt};
    FormulaSet with_antecedent = inst.context;
    with_antecedent.insert(inst.antecedent);
    row.premise_entails = consequence(with_antecedent, inst.consequent, {m});
    Formula implication = Formula::apply("->", {inst.antecedent, inst.consequent});
    row.implication_entailed = consequence(inst.context, implication, {m});
    row.dt_holds = !row.premise_entails || row.implication_entailed;
    row.converse_holds = !row.implication_entailed || row.premise_entails;
    auto avars = variables_of(inst.antecedent);
    auto cvars = variables_of(inst.consequent);
    row.var_inclusion = std::includes(cvars.begin(), cvars.end(), avars.begin(), avars.end());
    if (!row.implication_entailed)
      row.implication_witness = find_countervaluation(inst.context, implication, m);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace vilogic
