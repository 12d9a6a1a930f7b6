#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace qsym {

#ifndef QSYM_MAX_EXPONENT_SPAN
#define QSYM_MAX_EXPONENT_SPAN 100000
#endif

/// Largest exponent span (max exponent - min exponent) any polynomial may
/// reach. Override at build time with -DQSYM_MAX_EXPONENT_SPAN=<n>.
inline constexpr std::int64_t kMaxExponentSpan = QSYM_MAX_EXPONENT_SPAN;

/// Throws ResourceError when `span` exceeds kMaxExponentSpan.
void check_exponent_span(std::int64_t span);

namespace detail {

/// Dense univariate polynomial over Z; coefficient i belongs to q^i. The top
/// coefficient is never zero (the zero polynomial has no coefficients).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  static IntPoly constant(const mpz_class& c);
  /// c * q^k
  static IntPoly monomial(const mpz_class& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const mpz_class& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& leading() const { return coeffs_.back(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Number of vanishing low-order coefficients (0 for the zero polynomial).
  std::size_t low_zeros() const;
  /// Divides by q^k; the k low coefficients must be zero.
  IntPoly shifted_down(std::size_t k) const;
  IntPoly shifted_up(std::size_t k) const;

  /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
  mpz_class content() const;
  /// Largest absolute coefficient.
  mpz_class max_norm() const;
  /// Exact division of every coefficient by `d`.
  IntPoly divided_by(const mpz_class& d) const;
  IntPoly scaled(const mpz_class& c) const;
  IntPoly operator-() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Content removed and sign normalized so the leading coefficient is positive.
IntPoly primitive_part(const IntPoly& a);

/// a / b when b divides a exactly over Z; nullopt otherwise. b must be nonzero.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

/// Primitive gcd over Q[q] normalized to positive leading coefficient.
/// gcd(0, 0) = 0. Uses the heuristic integer-evaluation gcd with a
/// primitive-remainder-sequence fallback.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Primitive remainder sequence Euclidean gcd; same normalization as gcd().
IntPoly gcd_euclid(const IntPoly& a, const IntPoly& b);

}  // namespace detail
}  // namespace qsym
