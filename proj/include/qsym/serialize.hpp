#pragma once

#include "json.hpp"
#include "qsym/identities.hpp"
#include "qsym/laurent_poly.hpp"
#include "qsym/ratfun.hpp"
#include "qsym/volkenborn.hpp"

namespace qsym {

/// Key order follows insertion, so serialized text is stable.
using Json = nlohmann::ordered_json;

/// [[exponent, "num/den"], ...] in ascending exponent order; [] for zero.
Json to_json(const LaurentPoly& p);
/// Inverse of to_json; throws DomainError on malformed input.
LaurentPoly laurent_from_json(const Json& j);

/// {"num": ..., "den": ...} of the canonical form.
Json to_json(const RatFun& f);
/// Throws DomainError on malformed input and DivisionByZero for a zero den.
RatFun ratfun_from_json(const Json& j);

/// Only the fields the identity uses.
Json to_json(const CheckParams& params);
/// {identity, params, holds, lhs?, rhs?}; the sides appear when the check
/// failed or `with_sides` is set.
Json to_json(const CheckReport& report, bool with_sides = false);

/// {family, params, p, q0, target, points: [[N, v], ...], monotone} with an
/// infinite valuation written as the string "inf".
Json to_json(const ConvergenceReport& report);

}  // namespace qsym
