#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "vilogic/syntax.hpp"

namespace vilogic {

/// A finite algebra given by operation tables over an ordered universe of
/// element labels.  Tables are stored row-major: for an n-ary operator the
/// entry for arguments (i1, ..., in) sits at ((i1*|U| + i2)*|U| + ...) + in.
struct FiniteAlgebra {
  Language lang;
  std::vector<std::string> universe;
  std::map<std::string, std::vector<int>> tables;

  int index_of(const std::string& label) const;
  const std::string& label_of(int index) const { return universe[index]; }

  /// Looks up one table entry.  Throws on unknown operator or arity mismatch.
  int apply(const std::string& op, std::span<const int> args) const;

  const std::vector<int>& table_of(const std::string& op) const;

  /// Checks structural well-formedness: one total, in-range table per
  /// operator, with |U|^arity entries.  Throws Error on the first defect.
  void validate() const;

  bool operator==(const FiniteAlgebra&) const = default;
};

/// An algebra together with its designated subset.
struct Matrix {
  FiniteAlgebra algebra;
  std::set<std::string> designated;

  bool is_designated(int index) const {
    return designated.count(algebra.universe[index]) > 0;
  }
  void validate() const;

  bool operator==(const Matrix&) const = default;
};

/// Assignment of universe labels to variable names.
using Valuation = std::map<std::string, std::string>;

/// Value of `f` in `alg` under `val`: the homomorphic extension of the
/// variable assignment.  Throws on unassigned variables and on operators
/// absent from the algebra.
std::string evaluate(const Formula& f, const Valuation& val, const FiniteAlgebra& alg);

/// Matrix-defined consequence: true iff in every listed matrix, every
/// valuation of the occurring variables that designates all premises also
/// designates the conclusion.
bool consequence(const FormulaSet& premises, const Formula& conclusion,
                 const std::vector<Matrix>& matrices);

bool is_tautology(const Formula& f, const std::vector<Matrix>& matrices);

/// First valuation (universe order, variables in sorted order) designating
/// all premises but not the conclusion, if one exists in `m`.
std::optional<Valuation> find_countervaluation(const FormulaSet& premises,
                                               const Formula& conclusion, const Matrix& m);

/// True iff `map` (total on A's universe, into B's universe) commutes with
/// every operation.  Throws on a partial map or mismatched languages.
bool is_homomorphism(const std::map<std::string, std::string>& map, const FiniteAlgebra& a,
                     const FiniteAlgebra& b);

}  // namespace vilogic
