#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vilogic/matrix.hpp"

namespace vilogic {

/// Reserved label for the contaminating element; user algebras may not
/// contain it.
inline constexpr const char* kOmega = "w";

/// A finite join semilattice of index elements, join given as a row-major
/// table over the element order.
struct SemilatticeIndex {
  std::vector<std::string> elements;
  std::vector<int> join_table;

  int join(int i, int j) const {
    return join_table[static_cast<size_t>(i) * elements.size() + static_cast<size_t>(j)];
  }
  /// i <= j in the induced order.
  bool leq(int i, int j) const { return join(i, j) == j; }

  /// Element below every other one, if present.
  std::optional<int> bottom() const;

  /// Commutativity, associativity, idempotence by table exhaustion.
  std::vector<std::string> validate() const;
};

/// Element maps keyed by source label.
using ElementMap = std::map<std::string, std::string>;

struct DirectedSystemOfAlgebras {
  SemilatticeIndex index;
  std::vector<FiniteAlgebra> algebras;                  // one per index element
  std::map<std::pair<int, int>, ElementMap> homs;       // for every i <= j, including i == j
};

struct DirectedSystemOfMatrices {
  SemilatticeIndex index;
  std::vector<Matrix> matrices;
  std::map<std::pair<int, int>, ElementMap> homs;

  DirectedSystemOfAlgebras algebra_system() const;
};

/// Empty result means the system is well formed; otherwise one entry per
/// violated condition, with witnesses.
std::vector<std::string> validate_directed_system(const DirectedSystemOfAlgebras& sys);
std::vector<std::string> validate_directed_system(const DirectedSystemOfMatrices& sys);

/// Universe: the disjoint union in index order.  An operation routes its
/// arguments to the join of their indices through the system's
/// homomorphisms and applies the table there; nullary operations take
/// their value in the bottom algebra.  Throws if validation fails.
FiniteAlgebra plonka_sum_algebras(const DirectedSystemOfAlgebras& sys);

/// Same sum on the algebra side; designated set is the union of the
/// members' designated sets.
Matrix plonka_sum_matrices(const DirectedSystemOfMatrices& sys);

/// Disjointness of member universes is enforced mechanically: when any two
/// members share a label, every label is prefixed with its index element
/// ("i.x") and homs and designated sets are rewritten to match.  Systems
/// that are already disjoint are returned unchanged.
DirectedSystemOfMatrices make_disjoint(DirectedSystemOfMatrices sys);

/// The two-element directed system {m, trivial} with the collapse
/// homomorphism onto the one-point matrix over kOmega.
DirectedSystemOfMatrices omega_extension_system(const Matrix& m);

/// Direct construction of the sum of omega_extension_system(m): universe
/// gains the contaminating element, every operation with it among its
/// arguments returns it, nullary operations keep their base value, and it
/// is designated.
Matrix adjoin_contaminating(const Matrix& m);

}  // namespace vilogic
