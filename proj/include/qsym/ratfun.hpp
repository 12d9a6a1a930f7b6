#pragma once

#include <cstdint>
#include <string>

#include "qsym/detail/int_poly.hpp"
#include "qsym/laurent_poly.hpp"
#include "qsym/rational.hpp"

namespace qsym {

/// Element of Q(q): a quotient of two Laurent polynomials.
///
/// Internally a value is held as q^shift * N(q) / D(q) with integer
/// polynomials N, D whose constant terms are nonzero. Arithmetic always
/// returns the canonical form: gcd(N, D) = 1 over Q[q], the coefficients of
/// N and D jointly have content 1, and D has a positive leading coefficient.
/// Values built with unreduced() skip the gcd step until they are next used
/// in arithmetic or canonical() is called.
///
/// Equality is decided by cross-multiplication, so it never depends on the
/// gcd having been taken.
class RatFun {
 public:
  RatFun() = default;
  RatFun(const Rational& c);     // NOLINT(google-explicit-constructor)
  RatFun(long c);                // NOLINT(google-explicit-constructor)
  RatFun(const LaurentPoly& p);  // NOLINT(google-explicit-constructor)
  /// Canonicalizing constructor; throws DivisionByZero when `den` is zero.
  RatFun(const LaurentPoly& num, const LaurentPoly& den);

  /// num/den with common polynomial factors kept.
  static RatFun unreduced(const LaurentPoly& num, const LaurentPoly& den);
  /// q^k
  static RatFun q_power(std::int64_t k);

  LaurentPoly numerator() const;
  LaurentPoly denominator() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_canonical() const { return reduced_; }
  RatFun canonical() const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  /// Throws DivisionByZero when `b` is zero.
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& rhs) { return *this = *this + rhs; }
  RatFun& operator-=(const RatFun& rhs) { return *this = *this - rhs; }
  RatFun& operator*=(const RatFun& rhs) { return *this = *this * rhs; }
  RatFun& operator/=(const RatFun& rhs) { return *this = *this / rhs; }

  /// Throws DivisionByZero for the zero function.
  RatFun inverse() const;
  /// Integer power; a negative power of zero throws DivisionByZero.
  RatFun pow(std::int64_t exponent) const;
  /// Multiplies by q^k without any gcd work.
  RatFun times_q_power(std::int64_t k) const;

  /// a.num * b.den == b.num * a.den
  friend bool operator==(const RatFun& a, const RatFun& b);

  /// Exact value of the canonical form at q0; throws PoleError naming q0
  /// when its denominator vanishes there.
  Rational eval(const Rational& q0) const;
  /// Value of the canonical form at q = 1; throws PoleError for a genuine
  /// pole at 1.
  Rational limit_at_one() const;

  /// Ascending-exponent polynomial strings, "N/D", with "/1" omitted, e.g.
  /// "-1/(1+q)".
  std::string pretty() const;

 private:
  RatFun(std::int64_t shift, detail::IntPoly num, detail::IntPoly den, bool reduce);
  // Caller guarantees gcd(num, den) = 1 over Q[q]; content and shift are
  // still normalized.
  static RatFun assume_reduced(std::int64_t shift, detail::IntPoly num, detail::IntPoly den);

  std::int64_t shift_ = 0;
  detail::IntPoly num_;
  detail::IntPoly den_ = detail::IntPoly::constant(1);
  bool reduced_ = true;
};

/// Free-function spelling of RatFun equality.
inline bool ratfun_eq(const RatFun& a, const RatFun& b) { return a == b; }

/// Ascending-exponent rendering such as "1-q+2*q^3" or "q^-1"; "0" for zero.
std::string pretty(const LaurentPoly& p);

}  // namespace qsym
