#pragma once
/**
 * @file report.hpp
 * @brief Deterministic serialization of the algebra's tables.
 *
 * Every export here is byte-stable across runs: the basis order is fixed,
 * object keys are emitted in a fixed order, pairs are sorted, and rationals
 * render as "p/q" (or just "p" when the denominator is 1).  JSON is the
 * canonical machine format; CSV mirrors the commutation and Killing tables
 * for spreadsheet audit.  The implementation keeps the JSON library out of
 * this header so installed consumers need only the core headers.
 */

#include "octoe6/jordan.hpp"
#include "octoe6/structure.hpp"

#include <string>
#include <vector>

namespace octoe6 {

// =========================================================================
// Structure-constant table
// =========================================================================

/// One nonzero commutator row: [e_i, e_j] = sum_k c * e_k with i < j and
/// terms sorted by k.
struct TableEntry {
  int i = 0;
  int j = 0;
  std::vector<BracketTerm> terms;

  [[nodiscard]] friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

/// Snapshot of the full table: basis names in index order plus every
/// nonvanishing bracket, pairs sorted lexicographically.
struct StructureTable {
  std::vector<std::string> basis_names;
  std::vector<TableEntry> brackets;

  [[nodiscard]] friend bool operator==(const StructureTable&, const StructureTable&) = default;
};

/// The canonical in-memory snapshot of the algebra's table.
[[nodiscard]] StructureTable structure_table(const Algebra& alg);

/// JSON form: {"basis":[{"index":k,"name":s},...],
///             "brackets":[{"i":..,"j":..,"terms":[{"k":..,"c":"p/q"},...]},...]}
/// with i < j only; pairs whose bracket vanishes are omitted.
[[nodiscard]] std::string to_json(const StructureTable& table);

/// CSV form with header "i,j,k,c", one row per nonzero term, same order.
[[nodiscard]] std::string to_csv(const StructureTable& table);

/// Parses the JSON form back. Throws std::invalid_argument on malformed
/// input (wrong shape, unsorted pairs, bad rationals, index range errors).
[[nodiscard]] StructureTable table_from_json(const std::string& text);

/// Parses the CSV form back (the CSV carries no basis names). Throws
/// std::invalid_argument on malformed input.
[[nodiscard]] std::vector<TableEntry> brackets_from_csv(const std::string& text);

// =========================================================================
// Killing form
// =========================================================================

/// One diagonal Killing entry K(e_k, e_k); the off-diagonal entries vanish
/// identically (verified at algebra construction).
struct KillingEntry {
  int index = 0;
  std::string name;
  Rational value;
};

[[nodiscard]] std::vector<KillingEntry> killing_diagonal(const Algebra& alg);

/// JSON form: {"killing":[{"index":..,"name":..,"value":"p"},...],
///             "signature":{"negative":52,"positive":26,"zero":0}}.
[[nodiscard]] std::string killing_json(const Algebra& alg);

/// CSV form with header "index,name,value".
[[nodiscard]] std::string killing_csv(const Algebra& alg);

/// Aligned human-readable listing ending in a one-line signature summary.
[[nodiscard]] std::string killing_text(const Algebra& alg);

// =========================================================================
// Basis listing
// =========================================================================

/// JSON form: {"basis":[{"index":..,"name":..,"kind":"rotation"|"boost"},...]}.
[[nodiscard]] std::string basis_json(const Algebra& alg);

/// CSV form with header "index,name,kind".
[[nodiscard]] std::string basis_csv(const Algebra& alg);

/// Aligned human-readable listing.
[[nodiscard]] std::string basis_text(const Algebra& alg);

// =========================================================================
// Octonion multiplication table
// =========================================================================

/// JSON form: {"units":[...],"products":[[...8 signed unit names...],...]}.
[[nodiscard]] std::string octonion_table_json();

/// CSV form with header "p,q,product", rows in row-major unit order.
[[nodiscard]] std::string octonion_table_csv();

/// The classic 8x8 grid with row/column unit headers.
[[nodiscard]] std::string octonion_table_text();

// =========================================================================
// Jordan elements
// =========================================================================

/// JSON form: {"d":["p","q","r"],"x1":[8 rationals],"x2":[...],"x3":[...]}.
[[nodiscard]] std::string to_json(const JordanElement<Rational>& X);

/// Parses the JSON form back; throws std::invalid_argument on malformed input.
[[nodiscard]] JordanElement<Rational> jordan_from_json(const std::string& text);

}  // namespace octoe6
