#include "vilogic/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vilogic {

Language::Language(std::initializer_list<std::pair<std::string, int>> ops) {
  for (const auto& [name, arity] : ops) add_operator(name, arity);
}

void Language::add_operator(const std::string& name, int arity) {
  if (arity < 0) throw Error("operator '" + name + "' has negative arity");
  if (has_operator(name)) throw Error("duplicate operator '" + name + "'");
  ops_.emplace_back(name, arity);
}

std::optional<int> Language::arity_of(const std::string& name) const {
  for (const auto& [n, a] : ops_)
    if (n == name) return a;
  return std::nullopt;
}

Formula Formula::variable(std::string name) {
  auto node = std::make_shared<Node>();
  node->is_var = true;
  node->head = std::move(name);
  node->size = 1;
  node->depth = 0;
  return Formula(std::move(node));
}

Formula Formula::apply(std::string op, std::vector<Formula> args) {
  auto node = std::make_shared<Node>();
  node->is_var = false;
  node->head = std::move(op);
  node->size = 1;
  node->depth = 0;
  for (const Formula& a : args) {
    node->size += a.size();
    node->depth = std::max(node->depth, a.depth() + 1);
  }
  node->args = std::move(args);
  return Formula(std::move(node));
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->is_var != other.node_->is_var || node_->size != other.node_->size ||
      node_->head != other.node_->head || node_->args.size() != other.node_->args.size())
    return false;
  for (size_t i = 0; i < node_->args.size(); ++i)
    if (!(node_->args[i] == other.node_->args[i])) return false;
  return true;
}

std::strong_ordering Formula::operator<=>(const Formula& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  if (auto c = node_->size <=> other.node_->size; c != 0) return c;
  if (auto c = (node_->is_var ? 0 : 1) <=> (other.node_->is_var ? 0 : 1); c != 0) return c;
  if (auto c = node_->head <=> other.node_->head; c != 0) return c;
  if (auto c = node_->args.size() <=> other.node_->args.size(); c != 0) return c;
  for (size_t i = 0; i < node_->args.size(); ++i)
    if (auto c = node_->args[i] <=> other.node_->args[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

namespace {

struct Token {
  std::string text;
  size_t pos;
};

bool is_ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t start = i;
    if (c == '(' || c == ')' || c == '~' || c == '&' || c == '|') {
      out.push_back({std::string(1, c), start});
      ++i;
    } else if (c == '-') {
      if (i + 1 < text.size() && text[i + 1] == '>') {
        out.push_back({"->", start});
        i += 2;
      } else {
        throw Error("syntax error at position " + std::to_string(start) +
                    ": expected '->' after '-'");
      }
    } else if (c == '0' || c == '1') {
      out.push_back({std::string(1, c), start});
      ++i;
    } else if (is_ident_start(c) || is_upper(c)) {
      size_t j = i + 1;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      out.push_back({text.substr(i, j - i), start});
      i = j;
    } else {
      throw Error("syntax error at position " + std::to_string(start) +
                  ": unexpected character '" + std::string(1, c) + "'");
    }
  }
  return out;
}

class Parser {
public:
  Parser(std::vector<Token> tokens, const Language& lang, size_t text_len)
      : tokens_(std::move(tokens)), lang_(lang), text_len_(text_len) {}

  Formula run() {
    Formula f = implication();
    if (pos_ < tokens_.size())
      throw Error("syntax error at position " + std::to_string(tokens_[pos_].pos) +
                  ": unexpected '" + tokens_[pos_].text + "'");
    return f;
  }

private:
  const Token* peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }

  [[noreturn]] void fail(const std::string& msg) const {
    size_t p = pos_ < tokens_.size() ? tokens_[pos_].pos : text_len_;
    throw Error("syntax error at position " + std::to_string(p) + ": " + msg);
  }

  void require_op(const std::string& name, int arity) const {
    auto a = lang_.arity_of(name);
    if (!a) throw Error("unknown operator '" + name + "'");
    if (*a != arity)
      throw Error("arity mismatch: operator '" + name + "' has arity " +
                  std::to_string(*a) + ", used with arity " + std::to_string(arity));
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (const Token* t = peek(); t && t->text == "->") {
      require_op("->", 2);
      ++pos_;
      Formula rhs = implication();  // right-associative
      return Formula::apply("->", {lhs, rhs});
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    for (const Token* t = peek(); t && t->text == "|"; t = peek()) {
      require_op("|", 2);
      ++pos_;
      f = Formula::apply("|", {f, conjunction()});
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    for (const Token* t = peek(); t && t->text == "&"; t = peek()) {
      require_op("&", 2);
      ++pos_;
      f = Formula::apply("&", {f, unary()});
    }
    return f;
  }

  Formula unary() {
    const Token* t = peek();
    if (!t) fail("formula expected");
    if (t->text == "~" || is_upper(t->text[0])) {
      require_op(t->text, 1);
      std::string op = t->text;
      ++pos_;
      return Formula::apply(op, {unary()});
    }
    return primary();
  }

  Formula primary() {
    const Token* t = peek();
    if (!t) fail("formula expected");
    if (t->text == "(") {
      ++pos_;
      Formula f = implication();
      const Token* close = peek();
      if (!close || close->text != ")") fail("expected ')'");
      ++pos_;
      return f;
    }
    if (t->text == "0" || t->text == "1") {
      require_op(t->text, 0);
      std::string op = t->text;
      ++pos_;
      return Formula::apply(op, {});
    }
    if (is_ident_start(t->text[0])) {
      std::string name = t->text;
      ++pos_;
      return Formula::variable(name);
    }
    fail("unexpected '" + t->text + "'");
  }

  std::vector<Token> tokens_;
  const Language& lang_;
  size_t text_len_;
  size_t pos_ = 0;
};

void print_to(const Formula& f, std::string& out) {
  if (f.is_variable()) {
    out += f.head();
    return;
  }
  const auto& args = f.args();
  switch (args.size()) {
    case 0:
      out += f.head();
      break;
    case 1:
      if (f.head() == "~") {
        out += "(~";
        print_to(args[0], out);
        out += ')';
      } else {
        out += f.head();
        out += ' ';
        print_to(args[0], out);
      }
      break;
    case 2:
      out += '(';
      print_to(args[0], out);
      out += ' ';
      out += f.head();
      out += ' ';
      print_to(args[1], out);
      out += ')';
      break;
    default:
      out += f.head();
      out += '(';
      for (size_t i = 0; i < args.size(); ++i) {
        if (i) out += ", ";
        print_to(args[i], out);
      }
      out += ')';
  }
}

}  // namespace

Formula parse_formula(const std::string& text, const Language& lang) {
  Parser parser(tokenize(text), lang, text.size());
  return parser.run();
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_to(f, out);
  return out;
}

std::set<std::string> variables_of(const Formula& f) {
  std::set<std::string> vars;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (g->is_variable()) {
      vars.insert(g->head());
    } else {
      for (const Formula& a : g->args()) stack.push_back(&a);
    }
  }
  return vars;
}

std::set<std::string> variables_of(const FormulaSet& fs) {
  std::set<std::string> vars;
  for (const Formula& f : fs) {
    auto v = variables_of(f);
    vars.insert(v.begin(), v.end());
  }
  return vars;
}

Formula apply_substitution(const Substitution& s, const Formula& f) {
  if (f.is_variable()) {
    auto it = s.find(f.head());
    return it == s.end() ? f : it->second;
  }
  bool changed = false;
  std::vector<Formula> args;
  args.reserve(f.args().size());
  for (const Formula& a : f.args()) {
    args.push_back(apply_substitution(s, a));
    changed = changed || !(args.back() == a);
  }
  if (!changed) return f;
  return Formula::apply(f.head(), std::move(args));
}

bool match_schema_into(const Formula& schema, const Formula& target, Substitution& binding) {
  if (schema.is_variable()) {
    auto [it, inserted] = binding.emplace(schema.head(), target);
    return inserted || it->second == target;
  }
  if (target.is_variable() || schema.head() != target.head() ||
      schema.args().size() != target.args().size())
    return false;
  for (size_t i = 0; i < schema.args().size(); ++i)
    if (!match_schema_into(schema.args()[i], target.args()[i], binding)) return false;
  return true;
}

std::optional<Substitution> match_schema(const Formula& schema, const Formula& target) {
  Substitution binding;
  if (match_schema_into(schema, target, binding)) return binding;
  return std::nullopt;
}

FormulaSet subformulas(const Formula& f) {
  FormulaSet out;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (!out.insert(g).second) continue;
    for (const Formula& a : g.args()) stack.push_back(a);
  }
  return out;
}

FormulaSet subformulas(const FormulaSet& fs) {
  FormulaSet out;
  for (const Formula& f : fs) {
    auto s = subformulas(f);
    out.insert(s.begin(), s.end());
  }
  return out;
}

}  // namespace vilogic
