#pragma once

#include "superschur/kostant.hpp"
#include "superschur/qalgebra.hpp"
#include "superschur/qfield.hpp"
#include "superschur/qreplift.hpp"
#include "superschur/replift.hpp"
#include "superschur/report.hpp"

#include <json.hpp>

#include <string>

namespace superschur {

using Json = nlohmann::ordered_json;

/// {"terms": [[exponent, "coefficient"], ...]} in increasing exponent order.
Json to_json(const LaurentPoly &p);
/// Throws std::invalid_argument on malformed input.
LaurentPoly laurent_from_json(const Json &j);
/// {"num": LaurentPoly, "den": LaurentPoly}
Json to_json(const RatFn &f);
RatFn ratfn_from_json(const Json &j);

Json to_json(const Weight &w);
Json to_json(const Root &r);
/// [[i, j, exponent], ...] over the nonzero entries.
Json to_json(const ExponentTable &t);
/// {"A": ..., "lambda": ..., "C": ..., "label": "..."}
Json to_json(const BasisElement &y);
Json to_json(const CheckResult &r);
Json to_json(const VerificationReport &r);
/// [[word, RatFn], ...]
Json to_json(const QExpr &x);
Json to_json(const Dims &dims, const IdentityInstance &inst, bool expand);

/// {"rows": N, "cols": N, "entries": [[r, c, "p/q"], ...]}
Json matrix_json(const RepMatrix &m);
/// Same layout with {"num", "den"} entries.
Json matrix_json(const QMatrix &m);
/// Dense comma-separated rows.
std::string matrix_csv(const RepMatrix &m);
std::string matrix_csv(const QMatrix &m);

/// Parses a classical monomial given as a JSON list of factors, applied left
/// to right:
///   ["e", i], ["f", i]          Chevalley generators
///   ["H", i], ["H", i, k]       H_i and binom(H_i, k)
///   ["x", i, j], ["x", i, j, k] divided power x_{e_i - e_j}^{(k)}
///   ["1", [l_1, ..., l_{m+n}]]  weight idempotent
/// Throws std::invalid_argument on anything else.
KostantMonomial monomial_from_json(const Dims &dims, const Json &j);

} // namespace superschur
