#pragma once

#include <cstdint>
#include <vector>

#include "qsym/qcore.hpp"
#include "qsym/ratfun.hpp"
#include "qsym/rational.hpp"

namespace qsym {

/// Parameters of beta^{(r)}_{n,q^w}(A/w). The argument is carried scaled by
/// the base exponent so that every power of q stays integral:
/// q^{w l (A/w)} = q^{l A}.
struct BetaQuery {
  std::int64_t n = 0;  ///< degree, >= 0
  std::int64_t r = 1;  ///< order, >= 1
  BaseExp w{1};
  std::int64_t arg = 0;  ///< scaled argument A
};

/// BetaQuery plus the weight parameter h of the (h, r) family.
struct WeightedBetaQuery {
  std::int64_t n = 0;
  std::int64_t h = 1;
  std::int64_t r = 1;
  BaseExp w{1};
  std::int64_t arg = 0;
};

/// True when j + h - k != 0 for all 0 <= j <= n, 0 <= k < r, i.e. h > r - 1
/// or h < -n.
bool is_nondegenerate(std::int64_t n, std::int64_t h, std::int64_t r);

/// Higher-order Carlitz q-Bernoulli polynomial
///   (1 - q^w)^{-n} sum_{l=0}^{n} C(n,l) (-1)^l q^{lA} ((l+1)/[l+1]_{q^w})^r.
/// Throws DomainError for n < 0 or r < 1.
RatFun beta_higher(const BetaQuery& query);

/// Carlitz q-Bernoulli number beta_{n,q} = beta_higher(n, 1, 1, 0).
RatFun beta_number(std::int64_t n);

/// Weighted family
///   (1 - q^w)^{-n} sum_{j=0}^{n} C(n,j) (-1)^j q^{jA}
///       prod_{k=0}^{r-1} (j+h-k)/[j+h-k]_{q^w}.
/// Throws DegeneracyError when some factor has j + h - k = 0; the value is
/// then not a rational function of q.
RatFun beta_weighted(const WeightedBetaQuery& query);

/// T_{n,i}^{(r)}(wlim | q^b) = sum_{j in [0,wlim)^r} [sum j]_{q^b}^{n-i} q^{b(i+1) sum j},
/// with [0]^0 = 1.
RatFun t_sum(std::int64_t n, std::int64_t i, std::int64_t r, std::int64_t wlim, BaseExp b);

/// T_{n,i}^{(h,r)}(wlim | q^b) =
///   sum_{j in [0,wlim)^r} [sum j]_{q^b}^{n-i} q^{b sum_l (i+h-l+1) j_l}.
RatFun t_sum_h(std::int64_t n, std::int64_t i, std::int64_t h, std::int64_t r, std::int64_t wlim,
               BaseExp b);

/// Classical Bernoulli numbers B_0..B_max from (B+1)^n - B_n = [n = 1].
std::vector<Rational> classical_bernoulli_numbers(std::int64_t max_index);

/// B_n^{(r)}(x): n! times the t^n coefficient of (t/(e^t-1))^r e^{xt}, by
/// exact power-series products. Independent of every q-expression.
Rational classical_bernoulli_higher(std::int64_t n, std::int64_t r, const Rational& x);

/// Ordinary binomial coefficient C(n, k) (0 outside 0 <= k <= n).
mpz_class binomial(std::int64_t n, std::int64_t k);

}  // namespace qsym
