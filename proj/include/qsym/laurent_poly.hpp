#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qsym/detail/int_poly.hpp"
#include "qsym/rational.hpp"

namespace qsym {

/// Finitely supported map from integer exponents of q to nonzero rational
/// coefficients, stored as a vector sorted by ascending exponent.
class LaurentPoly {
 public:
  using Term = std::pair<std::int64_t, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// c * q^e
  static LaurentPoly monomial(const Rational& c, std::int64_t e);
  /// Accepts terms in any order; equal exponents are merged and zero
  /// coefficients dropped.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Exponent bounds; both undefined for the zero polynomial.
  std::int64_t min_exponent() const { return terms_.front().first; }
  std::int64_t max_exponent() const { return terms_.back().first; }
  Rational coefficient(std::int64_t e) const;

  /// Multiplies by q^k.
  LaurentPoly shifted(std::int64_t k) const;
  /// Substitutes q -> q^w (w >= 1).
  LaurentPoly substituted(std::int64_t w) const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
  LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Exact value at q0. Throws PoleError when q0 = 0 and a negative exponent
  /// is present.
  Rational eval(const Rational& q0) const;

 private:
  std::vector<Term> terms_;
};

namespace detail {

/// q^shift * poly / den with poly[0] != 0 (or poly zero and shift 0), den > 0.
struct ScaledPoly {
  std::int64_t shift = 0;
  IntPoly poly;
  mpz_class den = 1;
};

ScaledPoly to_scaled(const LaurentPoly& p);
LaurentPoly from_scaled(std::int64_t shift, const IntPoly& poly, const mpz_class& den = 1);

}  // namespace detail
}  // namespace qsym
