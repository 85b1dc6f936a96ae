#include "vilogic/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

namespace vilogic {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// content lines, comments and blanks dropped
std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back(t);
  }
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

size_t table_entries(size_t universe, int arity) {
  size_t n = 1;
  for (int i = 0; i < arity; ++i) n *= universe;
  return n;
}

void emit_table(std::ostringstream& out, const FiniteAlgebra& a, const std::string& op,
                int arity) {
  const auto& table = a.table_of(op);
  if (arity <= 1) {
    out << "table " << op << ":";
    for (int e : table) out << ' ' << a.universe[e];
    out << '\n';
    return;
  }
  out << "table " << op << ":\n";
  size_t row_len = a.universe.size();
  for (size_t i = 0; i < table.size(); i += row_len) {
    out << " ";
    for (size_t j = 0; j < row_len; ++j) out << ' ' << a.universe[table[i + j]];
    out << '\n';
  }
}

// Parses one algebra/matrix section.  `pos` advances past consumed lines.
struct AlgebraSection {
  FiniteAlgebra algebra;
  std::optional<std::set<std::string>> designated;
};

AlgebraSection parse_algebra_section(const std::vector<std::string>& lines, size_t& pos,
                                     const std::string& terminator) {
  AlgebraSection section;
  FiniteAlgebra& a = section.algebra;
  bool have_language = false, have_universe = false;
  while (pos < lines.size()) {
    const std::string& line = lines[pos];
    if (!terminator.empty() && line == terminator) break;
    ++pos;
    if (starts_with(line, "language:")) {
      auto toks = split_ws(line.substr(9));
      if (toks.size() % 2 != 0) throw Error("language line wants name/arity pairs");
      for (size_t i = 0; i < toks.size(); i += 2)
        a.lang.add_operator(toks[i], std::stoi(toks[i + 1]));
      have_language = true;
    } else if (starts_with(line, "universe:")) {
      a.universe = split_ws(line.substr(9));
      have_universe = true;
    } else if (starts_with(line, "designated:")) {
      auto toks = split_ws(line.substr(11));
      section.designated = std::set<std::string>(toks.begin(), toks.end());
    } else if (starts_with(line, "table ")) {
      if (!have_language || !have_universe)
        throw Error("table lines must follow the language and universe lines");
      size_t colon = line.find(':');
      if (colon == std::string::npos) throw Error("missing ':' in table line");
      std::string op = trim(line.substr(6, colon - 6));
      auto arity = a.lang.arity_of(op);
      if (!arity) throw Error("table for undeclared operator '" + op + "'");
      size_t want = table_entries(a.universe.size(), *arity);
      std::vector<int> table;
      auto consume = [&](const std::string& chunk) {
        for (const std::string& label : split_ws(chunk)) {
          if (table.size() == want) throw Error("too many entries in table for '" + op + "'");
          table.push_back(a.index_of(label));
        }
      };
      consume(line.substr(colon + 1));
      while (table.size() < want) {
        if (pos >= lines.size() || (!terminator.empty() && lines[pos] == terminator))
          throw Error("table for '" + op + "' ends early");
        consume(lines[pos++]);
      }
      a.tables[op] = std::move(table);
    } else {
      throw Error("unrecognized line '" + line + "'");
    }
  }
  a.validate();
  return section;
}

}  // namespace

std::string store_algebra(const FiniteAlgebra& a) {
  a.validate();
  std::ostringstream out;
  out << "language:";
  for (const auto& [op, arity] : a.lang.operators()) out << ' ' << op << ' ' << arity;
  out << '\n';
  out << "universe:";
  for (const std::string& e : a.universe) out << ' ' << e;
  out << '\n';
  for (const auto& [op, arity] : a.lang.operators()) emit_table(out, a, op, arity);
  return out.str();
}

std::string store_matrix(const Matrix& m) {
  m.validate();
  std::ostringstream out;
  out << "language:";
  for (const auto& [op, arity] : m.algebra.lang.operators()) out << ' ' << op << ' ' << arity;
  out << '\n';
  out << "universe:";
  for (const std::string& e : m.algebra.universe) out << ' ' << e;
  out << '\n';
  out << "designated:";
  for (const std::string& e : m.designated) out << ' ' << e;
  out << '\n';
  for (const auto& [op, arity] : m.algebra.lang.operators()) emit_table(out, m.algebra, op, arity);
  return out.str();
}

FiniteAlgebra load_algebra(const std::string& text) {
  auto lines = content_lines(text);
  size_t pos = 0;
  return parse_algebra_section(lines, pos, "").algebra;
}

Matrix load_matrix(const std::string& text) {
  auto lines = content_lines(text);
  size_t pos = 0;
  AlgebraSection section = parse_algebra_section(lines, pos, "");
  if (!section.designated) throw Error("matrix file lacks a designated line");
  Matrix m{std::move(section.algebra), std::move(*section.designated)};
  m.validate();
  return m;
}

std::string store_directed_system(const DirectedSystemOfMatrices& sys) {
  std::ostringstream out;
  out << "index:";
  for (const std::string& e : sys.index.elements) out << ' ' << e;
  out << '\n';
  out << "join:\n";
  size_t n = sys.index.elements.size();
  for (size_t i = 0; i < n; ++i) {
    out << " ";
    for (size_t j = 0; j < n; ++j) out << ' ' << sys.index.elements[sys.index.join_table[i * n + j]];
    out << '\n';
  }
  for (const auto& [pair, f] : sys.homs) {
    out << "hom " << sys.index.elements[pair.first] << ' ' << sys.index.elements[pair.second]
        << ':';
    for (const auto& [from, to] : f) out << ' ' << from << '=' << to;
    out << '\n';
  }
  for (size_t i = 0; i < n; ++i) {
    out << "begin matrix " << sys.index.elements[i] << '\n';
    out << store_matrix(sys.matrices[i]);
    out << "end\n";
  }
  return out.str();
}

DirectedSystemOfMatrices load_directed_system(const std::string& text) {
  auto lines = content_lines(text);
  DirectedSystemOfMatrices sys;
  std::map<std::string, Matrix> matrix_blocks;
  std::vector<std::tuple<std::string, std::string, ElementMap>> hom_lines;

  size_t pos = 0;
  while (pos < lines.size()) {
    const std::string& line = lines[pos];
    if (starts_with(line, "index:")) {
      sys.index.elements = split_ws(line.substr(6));
      ++pos;
    } else if (starts_with(line, "join:")) {
      ++pos;
      size_t n = sys.index.elements.size();
      if (n == 0) throw Error("join block must follow the index line");
      std::vector<std::string> labels;
      while (labels.size() < n * n) {
        if (pos >= lines.size()) throw Error("join table ends early");
        for (const std::string& tok : split_ws(lines[pos++])) labels.push_back(tok);
      }
      for (const std::string& label : labels) {
        auto it = std::find(sys.index.elements.begin(), sys.index.elements.end(), label);
        if (it == sys.index.elements.end())
          throw Error("join table mentions unknown index element '" + label + "'");
        sys.index.join_table.push_back(
            static_cast<int>(it - sys.index.elements.begin()));
      }
    } else if (starts_with(line, "hom ")) {
      size_t colon = line.find(':');
      if (colon == std::string::npos) throw Error("missing ':' in hom line");
      auto names = split_ws(line.substr(4, colon - 4));
      if (names.size() != 2) throw Error("hom line wants two index elements");
      ElementMap f;
      for (const std::string& pair : split_ws(line.substr(colon + 1))) {
        size_t eq = pair.find('=');
        if (eq == std::string::npos) throw Error("hom entries look like from=to");
        f[pair.substr(0, eq)] = pair.substr(eq + 1);
      }
      hom_lines.emplace_back(names[0], names[1], std::move(f));
      ++pos;
    } else if (starts_with(line, "begin matrix ")) {
      std::string name = trim(line.substr(13));
      ++pos;
      AlgebraSection section = parse_algebra_section(lines, pos, "end");
      if (pos >= lines.size() || lines[pos] != "end")
        throw Error("matrix block for '" + name + "' lacks its end line");
      ++pos;
      if (!section.designated)
        throw Error("matrix block for '" + name + "' lacks a designated line");
      matrix_blocks[name] = Matrix{std::move(section.algebra), std::move(*section.designated)};
    } else {
      throw Error("unrecognized line '" + line + "'");
    }
  }

  auto index_of = [&](const std::string& name) {
    auto it = std::find(sys.index.elements.begin(), sys.index.elements.end(), name);
    if (it == sys.index.elements.end()) throw Error("unknown index element '" + name + "'");
    return static_cast<int>(it - sys.index.elements.begin());
  };
  for (const std::string& e : sys.index.elements) {
    auto it = matrix_blocks.find(e);
    if (it == matrix_blocks.end()) throw Error("no matrix block for index element '" + e + "'");
    sys.matrices.push_back(std::move(it->second));
  }
  for (auto& [from, to, f] : hom_lines) sys.homs[{index_of(from), index_of(to)}] = std::move(f);
  // identity homs may be left implicit in the file
  for (size_t i = 0; i < sys.index.elements.size(); ++i) {
    auto key = std::make_pair(static_cast<int>(i), static_cast<int>(i));
    if (!sys.homs.count(key)) {
      ElementMap id;
      for (const std::string& e : sys.matrices[i].algebra.universe) id[e] = e;
      sys.homs[key] = std::move(id);
    }
  }
  return sys;
}

std::string store_hilbert_system(const HilbertSystem& s) {
  std::ostringstream out;
  out << "system: " << s.name << '\n';
  out << "language:";
  for (const auto& [op, arity] : s.lang.operators()) out << ' ' << op << ' ' << arity;
  out << '\n';
  for (const auto& [name, schema] : s.axioms)
    out << "axiom " << name << ": " << print_formula(schema) << '\n';
  for (const Rule& r : s.rules) {
    out << "rule " << r.name << (r.restricted ? " restrict" : "") << ": ";
    for (size_t i = 0; i < r.premises.size(); ++i) {
      if (i) out << ", ";
      out << print_formula(r.premises[i]);
    }
    out << " / " << print_formula(r.conclusion) << '\n';
  }
  return out.str();
}

HilbertSystem load_hilbert_system(const std::string& text) {
  HilbertSystem s;
  bool have_language = false;
  for (const std::string& line : content_lines(text)) {
    if (starts_with(line, "system:")) {
      s.name = trim(line.substr(7));
    } else if (starts_with(line, "language:")) {
      auto toks = split_ws(line.substr(9));
      if (toks.size() % 2 != 0) throw Error("language line wants name/arity pairs");
      for (size_t i = 0; i < toks.size(); i += 2)
        s.lang.add_operator(toks[i], std::stoi(toks[i + 1]));
      have_language = true;
    } else if (starts_with(line, "axiom ")) {
      if (!have_language) throw Error("axiom lines must follow the language line");
      size_t colon = line.find(':');
      if (colon == std::string::npos) throw Error("missing ':' in axiom line");
      std::string name = trim(line.substr(6, colon - 6));
      s.axioms.emplace_back(name, parse_formula(line.substr(colon + 1), s.lang));
    } else if (starts_with(line, "rule ")) {
      if (!have_language) throw Error("rule lines must follow the language line");
      size_t colon = line.find(':');
      if (colon == std::string::npos) throw Error("missing ':' in rule line");
      auto head = split_ws(line.substr(5, colon - 5));
      if (head.empty() || head.size() > 2 || (head.size() == 2 && head[1] != "restrict"))
        throw Error("rule head looks like 'rule NAME [restrict]:'");
      std::string body = line.substr(colon + 1);
      size_t slash = body.find('/');
      if (slash == std::string::npos) throw Error("rule body wants 'premises / conclusion'");
      std::string premise_text = body.substr(0, slash);
      std::vector<Formula> premises;
      size_t start = 0;
      while (true) {
        size_t comma = premise_text.find(',', start);
        std::string chunk = trim(premise_text.substr(start, comma - start));
        if (!chunk.empty()) premises.push_back(parse_formula(chunk, s.lang));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (premises.empty()) throw Error("rule '" + head[0] + "' has no premises");
      s.rules.push_back(Rule{head[0], std::move(premises),
                             parse_formula(body.substr(slash + 1), s.lang), head.size() == 2});
    } else {
      throw Error("unrecognized line '" + line + "'");
    }
  }
  if (!have_language) throw Error("system file lacks a language line");
  return s;
}

std::string store_proof(const Proof& p) {
  std::ostringstream out;
  if (!p.hypotheses.empty()) {
    out << "hypotheses:";
    bool first = true;
    for (const Formula& h : p.hypotheses) {
      out << (first ? " " : " ; ") << print_formula(h);
      first = false;
    }
    out << '\n';
  }
  for (size_t i = 0; i < p.lines.size(); ++i) {
    const ProofLine& line = p.lines[i];
    out << (i + 1) << ". " << print_formula(line.formula) << " [";
    switch (line.kind) {
      case ProofLine::Kind::hypothesis:
        out << "hyp";
        break;
      case ProofLine::Kind::axiom: {
        out << "ax " << line.ref;
        bool first = true;
        for (const auto& [var, f] : line.subst) {
          out << (first ? " " : ", ") << var << '=' << print_formula(f);
          first = false;
        }
        break;
      }
      case ProofLine::Kind::rule:
        out << line.ref;
        for (int j : line.premises) out << ' ' << (j + 1);
        break;
    }
    out << "]\n";
  }
  return out.str();
}

Proof load_proof(const std::string& text, const HilbertSystem& s) {
  Proof p;
  int expected = 1;
  for (const std::string& line : content_lines(text)) {
    if (starts_with(line, "hypotheses:")) {
      std::string rest = line.substr(11);
      size_t start = 0;
      while (true) {
        size_t semi = rest.find(';', start);
        std::string chunk = trim(rest.substr(start, semi - start));
        if (!chunk.empty()) p.hypotheses.insert(parse_formula(chunk, s.lang));
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
      continue;
    }
    size_t dot = line.find('.');
    if (dot == std::string::npos) throw Error("proof lines start with 'N.'");
    int number = std::stoi(line.substr(0, dot));
    if (number != expected)
      throw Error("proof lines must be numbered consecutively; expected " +
                  std::to_string(expected) + ", got " + std::to_string(number));
    ++expected;
    size_t open = line.rfind('[');
    size_t close = line.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw Error("missing [justification] on line " + std::to_string(number));
    Formula formula = parse_formula(line.substr(dot + 1, open - dot - 1), s.lang);
    std::string just = trim(line.substr(open + 1, close - open - 1));

    ProofLine out{formula, ProofLine::Kind::hypothesis, "", {}, {}};
    if (just == "hyp") {
      out.kind = ProofLine::Kind::hypothesis;
    } else if (starts_with(just, "ax ")) {
      out.kind = ProofLine::Kind::axiom;
      std::string rest = trim(just.substr(3));
      size_t space = rest.find(' ');
      out.ref = rest.substr(0, space);
      const Formula* schema = s.axiom(out.ref);
      if (!schema) throw Error("unknown axiom '" + out.ref + "' on line " + std::to_string(number));
      if (space == std::string::npos) {
        auto sigma = match_schema(*schema, formula);
        if (!sigma)
          throw Error("line " + std::to_string(number) + " is not an instance of " + out.ref);
        out.subst = std::move(*sigma);
      } else {
        std::string bindings = rest.substr(space + 1);
        size_t start = 0;
        while (true) {
          size_t comma = bindings.find(',', start);
          std::string chunk = trim(bindings.substr(start, comma - start));
          if (!chunk.empty()) {
            size_t eq = chunk.find('=');
            if (eq == std::string::npos) throw Error("axiom bindings look like var=formula");
            out.subst.emplace(trim(chunk.substr(0, eq)),
                              parse_formula(chunk.substr(eq + 1), s.lang));
          }
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      }
    } else {
      out.kind = ProofLine::Kind::rule;
      auto toks = split_ws(just);
      if (toks.empty()) throw Error("empty justification on line " + std::to_string(number));
      out.ref = toks[0];
      for (size_t i = 1; i < toks.size(); ++i) out.premises.push_back(std::stoi(toks[i]) - 1);
    }
    p.lines.push_back(std::move(out));
  }
  return p;
}

Instance parse_instance(const std::string& line, const Language& lang) {
  size_t sep = line.find("|-");
  if (sep == std::string::npos) throw Error("instance lines look like 'premises |- conclusion'");
  Instance inst{{}, parse_formula(line.substr(sep + 2), lang)};
  std::string premises = line.substr(0, sep);
  size_t start = 0;
  while (true) {
    size_t semi = premises.find(';', start);
    std::string chunk = trim(premises.substr(start, semi - start));
    if (!chunk.empty()) inst.premises.insert(parse_formula(chunk, lang));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return inst;
}

std::vector<Instance> load_instances(const std::string& text, const Language& lang) {
  std::vector<Instance> out;
  for (const std::string& line : content_lines(text)) out.push_back(parse_instance(line, lang));
  return out;
}

std::string print_instance(const Instance& inst) {
  std::string out;
  bool first = true;
  for (const Formula& f : inst.premises) {
    if (!first) out += " ; ";
    out += print_formula(f);
    first = false;
  }
  out += first ? "|- " : " |- ";
  out += print_formula(inst.conclusion);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

}  // namespace vilogic
