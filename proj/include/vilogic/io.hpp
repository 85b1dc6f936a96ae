#pragma once

#include <string>
#include <vector>

#include "vilogic/companions.hpp"
#include "vilogic/hilbert.hpp"
#include "vilogic/plonka.hpp"

namespace vilogic {

// Text formats.  Stores emit a canonical form; loading a stored text gives
// back an equal object, and storing again reproduces the text byte for
// byte.  Lines starting with '#' and blank lines are ignored on load.

// Algebras and matrices:
//   language: & 2 | 2 ~ 1
//   universe: 1 1/2 0
//   designated: 1 1/2        (matrices only)
//   table ~: 0 1/2 1
//   table &:
//     1 1/2 0
//     ...rows per leading argument, entries are element labels...
std::string store_algebra(const FiniteAlgebra& a);
std::string store_matrix(const Matrix& m);
FiniteAlgebra load_algebra(const std::string& text);
Matrix load_matrix(const std::string& text);

// Directed systems of matrices: an index block, one hom line per pair
// i <= j (identities may be omitted on input), and one matrix block per
// index element.
std::string store_directed_system(const DirectedSystemOfMatrices& sys);
DirectedSystemOfMatrices load_directed_system(const std::string& text);

// Hilbert systems:
//   system: minimal
//   language: & 2 | 2
//   axiom A1: a -> (b -> a)
//   rule R1 restrict: a & b / a
std::string store_hilbert_system(const HilbertSystem& s);
HilbertSystem load_hilbert_system(const std::string& text);

// Proof scripts: optional hypotheses line, then numbered lines with a
// bracketed justification: [hyp], [ax A1 a=p, b=q] (bindings optional;
// inferred by matching when absent), or [MP 1 2] with 1-based indices.
std::string store_proof(const Proof& p);
Proof load_proof(const std::string& text, const HilbertSystem& s);

// Instance batches: one instance per line, semicolon-separated premises,
// the |- separator, then the conclusion.
Instance parse_instance(const std::string& line, const Language& lang);
std::vector<Instance> load_instances(const std::string& text, const Language& lang);
std::string print_instance(const Instance& inst);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace vilogic
