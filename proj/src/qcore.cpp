#include "qsym/qcore.hpp"

#include <string>
#include <vector>

#include "qsym/errors.hpp"

namespace qsym {

BaseExp::BaseExp(std::int64_t w) : w_(w) {
  if (w < 1) {
    throw DomainError("bracket base exponent must be >= 1, got " + std::to_string(w));
  }
}

RatFun q_bracket(std::int64_t m, BaseExp w) {
  if (m == 0) {
    return RatFun();
  }
  const std::int64_t step = w.value();
  const std::int64_t len = m > 0 ? m : -m;
  check_exponent_span(step * (len - 1));
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(static_cast<std::size_t>(len));
  if (m > 0) {
    for (std::int64_t k = 0; k < len; ++k) {
      terms.emplace_back(step * k, Rational(1));
    }
  } else {
    // -q^{wm}(1 + q^w + ... + q^{w(-m-1)}) = -(q^{wm} + ... + q^{-w})
    for (std::int64_t k = m; k < 0; ++k) {
      terms.emplace_back(step * k, Rational(-1));
    }
  }
  return RatFun(LaurentPoly::from_terms(std::move(terms)));
}

RatFun q_factorial(std::int64_t r, BaseExp w) {
  if (r < 0) {
    throw DomainError("q-factorial needs r >= 0, got " + std::to_string(r));
  }
  RatFun acc(1);
  for (std::int64_t k = 2; k <= r; ++k) {
    acc *= q_bracket(k, w);
  }
  return acc;
}

RatFun q_binomial(std::int64_t m, std::int64_t r, BaseExp w) {
  if (r < 0) {
    throw DomainError("q-binomial needs r >= 0, got " + std::to_string(r));
  }
  RatFun acc(1);
  for (std::int64_t k = 0; k < r; ++k) {
    acc *= q_bracket(m - k, w);
    if (acc.is_zero()) {
      return acc;
    }
  }
  return acc / q_factorial(r, w);
}

}  // namespace qsym
