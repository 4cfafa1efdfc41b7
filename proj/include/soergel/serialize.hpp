#pragma once

#include <string>

#include <json.hpp>

#include "soergel/categorify.hpp"
#include "soergel/kl_table.hpp"
#include "soergel/laurent.hpp"

namespace soergel {

using Json = nlohmann::ordered_json;

/// {"coeffs": {"<exponent>": c, ...}} in increasing exponent order.
/// Coefficients outside int64 are written as decimal strings.
Json laurent_to_json(const LaurentPoly& p);
/// Accepts integers or decimal strings as coefficients.
LaurentPoly laurent_from_json(const Json& j);

/// Columns y_word,x_word,poly_json,mu sorted by (l(x), x, l(y), y).
std::string kl_table_csv(const KLTable& table);
/// {"size": n, "pairs": p, "entries": [{"y","x","poly","mu"}, ...]} in the
/// same order as the CSV.
Json kl_table_json(const KLTable& table);

/// {"word": [1, 2, 1], "summands": [{"w": "1,2,1", "shift": 0, "mult": 1}, ...]}
Json sbim_class_json(const CoxeterSystem& sys, const Word& word, const SBimClass& c);

Json bigint_to_json(const BigInt& z);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

}  // namespace soergel
