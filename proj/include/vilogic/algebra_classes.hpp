#pragma once

#include <string>
#include <vector>

#include "vilogic/matrix.hpp"

namespace vilogic {

/// Algebra classes the workbench can decide and enumerate.
enum class AlgebraClass {
  bounded_distributive_lattice,
  quasi_boolean,
  heyting,
  pre_rough,
};

AlgebraClass algebra_class_from_name(const std::string& name);
std::string algebra_class_name(AlgebraClass c);

/// The operators a member of the class must carry.
Language required_language(AlgebraClass c);

// All predicates decide membership by exhausting the tables.  They throw
// Error when a required operator is missing from the algebra's language.

/// &,| commutative/associative/idempotent/absorptive/distributive with 0,1
/// as bottom and top.
bool is_bounded_distributive_lattice(const FiniteAlgebra& a);

/// Bounded distributive lattice with an involutive De Morgan negation.
bool is_quasi_boolean(const FiniteAlgebra& a);

/// Bounded distributive lattice where a->b is the largest x with a&x <= b
/// and ~a = a->0.
bool is_heyting(const FiniteAlgebra& a);

/// Quasi-Boolean reduct with interior/closure operators I, C and the
/// defined implication: I1=1, I distributes over &, C = ~I~, the
/// implication a->b = (~Ia | Ib) & (~Ca | Cb), and implications whose I/C
/// projections are 1 are themselves 1.
bool is_pre_rough(const FiniteAlgebra& a);

bool passes(AlgebraClass c, const FiniteAlgebra& a);

/// Every algebra of the class over universes of at most `max_size`
/// elements, one representative per isomorphism class, in a fixed order.
/// `lang` supplies the operator names; it must contain the class's
/// required operators.  Throws when max_size exceeds 4.
std::vector<FiniteAlgebra> enumerate_algebras(AlgebraClass c, const Language& lang,
                                              int max_size);

/// Isomorphism-invariant fingerprint: the least table serialization over
/// all relabelings of the universe.
std::string canonical_form(const FiniteAlgebra& a);

}  // namespace vilogic
