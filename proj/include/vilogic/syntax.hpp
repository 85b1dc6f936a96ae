#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace vilogic {

/// Error type thrown by operations whose preconditions are violated:
/// malformed input text, unknown operators, arity mismatches, invalid
/// proofs handed to transformations, and the like.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A propositional language: operator symbols with fixed arities.
///
/// Operator names are the surface tokens of the concrete grammar
/// ("~", "&", "|", "->", "I", "C", "0", "1").
class Language {
public:
  Language() = default;
  Language(std::initializer_list<std::pair<std::string, int>> ops);

  /// Adds an operator; throws if the name is already present.
  void add_operator(const std::string& name, int arity);

  std::optional<int> arity_of(const std::string& name) const;
  bool has_operator(const std::string& name) const { return arity_of(name).has_value(); }

  const std::vector<std::pair<std::string, int>>& operators() const { return ops_; }

  bool operator==(const Language&) const = default;

private:
  std::vector<std::pair<std::string, int>> ops_;
};

/// An immutable formula tree: either a variable or an operator applied to
/// argument formulas.  Values share structure and are cheap to copy.
/// Equality and ordering are structural.
class Formula {
public:
  /// Makes a variable.  Names match [a-z][a-zA-Z0-9_]*.
  static Formula variable(std::string name);

  /// Makes an application of `op` to `args`.  Arity is whatever the
  /// argument count says; conformance to a Language is checked where a
  /// Language is in play (parsing, evaluation).
  static Formula apply(std::string op, std::vector<Formula> args);

  bool is_variable() const { return node_->is_var; }

  /// Variable name, or the operator symbol for applications.
  const std::string& head() const { return node_->head; }

  const std::vector<Formula>& args() const { return node_->args; }

  /// Number of nodes in the tree.
  int size() const { return node_->size; }

  /// Nesting depth; a variable or a constant has depth 0.
  int depth() const { return node_->depth; }

  bool operator==(const Formula& other) const;
  std::strong_ordering operator<=>(const Formula& other) const;

private:
  struct Node {
    bool is_var;
    std::string head;
    std::vector<Formula> args;
    int size;
    int depth;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// A finite-support mapping from variable names to formulas; identity
/// elsewhere.
using Substitution = std::map<std::string, Formula>;

using FormulaSet = std::set<Formula>;

/// Parses `text` into the unique formula it denotes over `lang`.
///
/// Grammar: variables are [a-z][a-zA-Z0-9_]* identifiers; `~` and the
/// named unary operators bind tightest, then `&`, then `|`, then `->`
/// (right-associative); `0` and `1` are nullary; parentheses group.
/// Throws Error on syntax errors (with position), unknown operators and
/// arity mismatches.
Formula parse_formula(const std::string& text, const Language& lang);

/// Canonical text form; parse_formula(print_formula(f), lang) == f.
std::string print_formula(const Formula& f);

std::set<std::string> variables_of(const Formula& f);
std::set<std::string> variables_of(const FormulaSet& fs);

/// Homomorphic image of `f` under `s`.
Formula apply_substitution(const Substitution& s, const Formula& f);

/// One-sided first-order matching: finds the unique minimal substitution
/// over the schema's variables mapping `schema` onto `target`, if any.
/// Repeated schema variables must bind equal subformulas.
std::optional<Substitution> match_schema(const Formula& schema, const Formula& target);

/// Matching against an accumulated binding, for matching several schemas
/// simultaneously (rule premises and conclusion share metavariables).
/// On failure the binding may be left partially extended.
bool match_schema_into(const Formula& schema, const Formula& target, Substitution& binding);

/// All distinct subformulas of `f`, including `f` itself.
FormulaSet subformulas(const Formula& f);
FormulaSet subformulas(const FormulaSet& fs);

}  // namespace vilogic
