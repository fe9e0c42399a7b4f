#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toddpoly/genera.hpp"
#include "toddpoly/numbers.hpp"
#include "toddpoly/series.hpp"
#include "toddpoly/symfunc.hpp"

namespace toddpoly {

using Json = nlohmann::ordered_json;

enum class Format { text, json, latex, csv };

std::optional<Format> format_from_string(const std::string& s);

// ---------------------------------------------------------------------------
// Small pieces shared by every emitter. Determinism rules:
//   * JSON and CSV always list partitions in canonical order (the order of
//     PartitionMap iteration).
//   * text and latex follow the typography of the classical tables: Todd
//     polynomials and f/g/m expansions run in reverse canonical order
//     (c_1-heavy terms first), L-polynomials and matrices in canonical order.
// ---------------------------------------------------------------------------

/// "num/den", or just "num" for integers.
std::string rat_text(const Rat& q);

/// "\frac{num}{den}" (or "-\frac{num}{den}"), or just "num" for integers.
std::string rat_latex(const Rat& q);

/// [2,1]; the empty partition is [].
Json partition_json(const Partition& p);

/// "num" and "den" string fields appended to obj.
void put_rat_json(Json& obj, const Rat& q);

// How one term of a symmetric function is written in text/latex.
struct TermStyle {
  // false: subscripted basis element, e.g. "m_(2,1)" / "m_{(2,1)}".
  // true: product of indexed variables, e.g. "c_1^2c_4" (e-basis display
  // with Chern or Pontryagin letters).
  bool variable_product = false;
  std::string symbol;  // "m","e","h","p","f","g" or "c","p"
  bool ascending = true;  // reverse canonical term order (classical tables)
};

/// Signed sum like "-m_(2,1) - 2m_(3)" or "-c_1^4 + 4c_1^2c_2 + ... - c_4".
std::string symfn_text(const SymFn& sf, const TermStyle& style);
std::string symfn_latex(const SymFn& sf, const TermStyle& style);

/// {"degree": k, "basis": "m", "convention": "macdonald", "terms": [...]}.
Json symfn_json(const SymFn& sf);

/// Just the terms array of symfn_json, for embedding in other payloads.
Json symfn_terms_json(const SymFn& sf);

/// Lines "partition,num,den" under that header; partitions quoted.
std::string symfn_csv(const SymFn& sf);

/// The data lines of symfn_csv without the header; if row_prefix is
/// non-empty, it is prepended to every line followed by a comma.
std::string symfn_csv_rows(const SymFn& sf, const std::string& row_prefix);

// --- genus tables (todd / lgenus) ------------------------------------------

/// "T_4 = (-c_1^4 + 4c_1^2c_2 + 3c_2^2 + c_1c_3 - c_4)/720" plus a
/// "denominator: 720" line; display_basis selects the rendered coordinates
/// (the denominator is always the e-basis one carried by the table).
std::string genus_text(const GenusTable& t, Basis display_basis);

/// "\frac{1}{720}(-c_1^4+4c_1^2c_2+3c_2^2+c_1c_3-c_4)" (one line).
std::string genus_latex(const GenusTable& t, Basis display_basis);

Json genus_json(const GenusTable& t, Basis display_basis);
std::string genus_csv(const GenusTable& t, Basis display_basis);

/// Informational annotations; non-empty only for the degree-6 Todd table,
/// whose classical printing carries a known misprint.
std::vector<std::string> genus_notes(const GenusTable& t);

// --- basis command payloads -------------------------------------------------

struct BasisRow {
  Partition lambda;
  SymFn in_m;  // expansion of f_lambda or g_lambda in the monomial basis
};

std::string basis_rows_text(char which, const std::vector<BasisRow>& rows);
std::string basis_rows_latex(char which, const std::vector<BasisRow>& rows);
Json basis_rows_json(char which, int k, const std::vector<BasisRow>& rows);
std::string basis_rows_csv(const std::vector<BasisRow>& rows);

/// Informational annotation for the weight-4 g table, whose classical
/// printing carries a known misprint in the (3,1) row.
std::vector<std::string> basis_notes(char which, int k);

// --- coefficient matrix ------------------------------------------------------

std::string cmatrix_text(const CoeffMatrix& m);
std::string cmatrix_latex(const CoeffMatrix& m);
Json cmatrix_json(const CoeffMatrix& m);
std::string cmatrix_csv(const CoeffMatrix& m);

// --- numbers tables ----------------------------------------------------------

struct NumbersRow {
  int k = 0;
  std::vector<Rat> values;  // one per method, same order as methods
  PrimePowerMap factorization;  // only for integer-valued families
  bool agree = true;
};

struct NumbersTableView {
  std::string family;  // hirzebruch | ldenom | buchstaber | bernoulli
  bool integer_valued = true;
  std::vector<std::string> methods;
  std::vector<NumbersRow> rows;
  std::vector<std::string> notes;
};

std::string numbers_text(const NumbersTableView& t);
std::string numbers_latex(const NumbersTableView& t);
Json numbers_json(const NumbersTableView& t);
std::string numbers_csv(const NumbersTableView& t);

}  // namespace toddpoly
