#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsym/rational.hpp"

namespace qsym {

/// p-adic valuation: an integer or +infinity (the valuation of zero).
class Valuation {
 public:
  explicit Valuation(std::int64_t v) : value_(v) {}
  static Valuation infinity() {
    Valuation v(0);
    v.infinite_ = true;
    return v;
  }

  bool is_infinite() const { return infinite_; }
  /// Throws DomainError for infinity.
  std::int64_t value() const;
  /// Decimal value, or "inf".
  std::string to_string() const;

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) {
      return a.infinite_ == b.infinite_ ? std::strong_ordering::equal
                                        : (a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less);
    }
    return a.value_ <=> b.value_;
  }

 private:
  std::int64_t value_;
  bool infinite_ = false;
};

bool is_prime(std::int64_t p);

/// v_p(num) - v_p(den); infinity for zero. Throws DomainError unless p is prime.
Valuation p_valuation(const Rational& r, std::int64_t p);

/// A prime p, a rational q0 close enough to 1 for the q-Volkenborn limit to
/// exist (v_p(1 - q0) >= 1, and >= 2 when p = 2), the largest level N and a
/// cap on the number of summands of a single Riemann sum.
class PadicContext {
 public:
  /// Throws DomainError when any of the conditions above fails.
  PadicContext(std::int64_t p, Rational q0, std::int64_t n_max, std::int64_t budget = kDefaultBudget);
  /// q0 = 1 + p for odd p and 5 for p = 2.
  PadicContext(std::int64_t p, std::int64_t n_max);

  static constexpr std::int64_t kDefaultBudget = 1'000'000;
  static Rational default_q0(std::int64_t p);

  std::int64_t p() const { return p_; }
  const Rational& q0() const { return q0_; }
  std::int64_t n_max() const { return n_max_; }
  std::int64_t budget() const { return budget_; }

 private:
  std::int64_t p_;
  Rational q0_;
  std::int64_t n_max_;
  std::int64_t budget_;
};

/// (1/[p^N]_{q0})^r sum_{y in [0,p^N)^r} [x + sum y]_{q0}^n q0^{sum y}.
/// Throws DomainError for N outside 1..n_max, n < 0 or r < 1, and
/// ResourceError when p^{rN} exceeds the budget. `threads` = 0 uses every
/// hardware thread; the value never depends on it.
Rational riemann_sum_multi(std::int64_t n, std::int64_t r, std::int64_t x, const PadicContext& ctx,
                           std::int64_t N, unsigned threads = 1);

/// As riemann_sum_multi with the extra weight q0^{sum_l (h-l) y_l}. Defined
/// for degenerate h as well.
Rational riemann_sum_weighted(std::int64_t n, std::int64_t h, std::int64_t r, std::int64_t x,
                              const PadicContext& ctx, std::int64_t N, unsigned threads = 1);

enum class Family { single, multi, weighted };

std::string_view family_name(Family f);
/// Throws DomainError for an unknown name.
Family family_from_name(std::string_view name);

struct FamilyParams {
  std::int64_t n = 0;
  std::int64_t r = 1;
  std::int64_t h = 1;  ///< used by the weighted family only
  std::int64_t x = 0;
};

struct ConvergencePoint {
  std::int64_t level;  ///< N
  Valuation valuation;
};

struct ConvergenceReport {
  Family family = Family::single;
  FamilyParams params;
  std::int64_t p = 0;
  Rational q0;
  std::string target;  ///< integrand and closed form, human readable
  std::vector<ConvergencePoint> points;  ///< N = 1..n_max
  bool monotone = false;  ///< valuations nondecreasing in N
};

/// v_p(S_N - closed form at q0) for N = 1..n_max. The single family is r = 1
/// (any other r throws DomainError); the weighted family throws
/// DegeneracyError at degenerate (n, h, r). A pole of the closed form at q0
/// raises PoleError.
ConvergenceReport convergence_report(Family family, const FamilyParams& params, const PadicContext& ctx,
                                     unsigned threads = 1);

}  // namespace qsym
