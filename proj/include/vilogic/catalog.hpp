#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vilogic/companions.hpp"
#include "vilogic/hilbert.hpp"
#include "vilogic/matrix.hpp"
#include "vilogic/plonka.hpp"

namespace vilogic {

// The built-in languages.
const Language& lattice_language();   // & |
const Language& rm3_language();       // & | -> ~
const Language& ipc_language();       // & | -> ~ 0 1
const Language& prerough_language();  // & | -> ~ I C 0 1

enum class CatalogKind { matrix, system };

/// A checked-in object: a matrix (with its algebra) or a Hilbert system,
/// under a stable id, with a one-line description.
struct CatalogEntry {
  std::string id;
  CatalogKind kind;
  std::optional<Matrix> matrix;
  std::optional<HilbertSystem> system;
  std::string note;

  const FiniteAlgebra& algebra() const;
  const Matrix& as_matrix() const;
  const HilbertSystem& as_system() const;
};

/// Looks up a built-in entry; throws on unknown ids.
/// Matrix ids: B2, H3, M3, PS3, prerough3 and their omega extensions
/// B2w, H3w, M3w, PS3w, prerough3w.  System ids: minimal, minimal-re,
/// ipc, hipwk, hprl, hprl-re, rm3, lps3.
const CatalogEntry& catalog_get(const std::string& id);

std::vector<std::string> catalog_ids();

/// True iff a fresh contradiction {p, ~p} entails a fresh q in `m`.
bool probe_ecq(const Matrix& m);

/// True iff the conjunctive contradiction p & ~p entails a fresh q.
bool probe_land_ecq(const Matrix& m);

/// True iff ~(p & ~p) is a tautology of `m`.
bool probe_lnc(const Matrix& m);

enum class Paraconsistency { not_paraconsistent, weakly, strongly };
std::string to_string(Paraconsistency p);

/// not paraconsistent when ECQ holds; weakly when only ECQ fails; strongly
/// when LNC fails too.
Paraconsistency classify_paraconsistency(const Matrix& m);

struct DeductionInstance {
  FormulaSet context;
  Formula antecedent;
  Formula consequent;
};

struct DeductionReportRow {
  DeductionInstance instance;
  bool premise_entails;       // context + antecedent entails consequent
  bool implication_entailed;  // context entails antecedent -> consequent
  bool dt_holds;              // premise side implies implication side
  bool converse_holds;        // implication side implies premise side
  bool var_inclusion;         // var(antecedent) within var(consequent)
  std::optional<Valuation> implication_witness;  // when the implication fails
};

/// Evaluates both deduction-theorem directions per instance over `m`.
std::vector<DeductionReportRow> probe_deduction(const Matrix& m,
                                                const std::vector<DeductionInstance>& instances);

}  // namespace vilogic
