#include "qsym/qbernoulli.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw DomainError(what);
  }
}

// (1 - q^w)^{-n}
RatFun inverse_power_of_one_minus(BaseExp w, std::int64_t n) {
  const RatFun one_minus(LaurentPoly(1) - LaurentPoly::monomial(Rational(1), w.value()));
  return one_minus.pow(-n);
}

// Visits every tuple in [0, wlim)^r in lexicographic order.
template <typename Visit>
void for_each_tuple(std::int64_t r, std::int64_t wlim, Visit&& visit) {
  std::vector<std::int64_t> j(static_cast<std::size_t>(r), 0);
  while (true) {
    visit(j);
    std::size_t pos = j.size();
    while (pos > 0) {
      --pos;
      if (++j[pos] < wlim) {
        break;
      }
      j[pos] = 0;
      if (pos == 0) {
        return;
      }
    }
    if (j.empty()) {
      return;
    }
  }
}

void check_t_sum_args(std::int64_t n, std::int64_t i, std::int64_t r, std::int64_t wlim) {
  require(0 <= i && i <= n, "T-sum needs 0 <= i <= n");
  require(r >= 1, "T-sum needs r >= 1");
  require(wlim >= 1, "T-sum needs w >= 1");
}

}  // namespace

mpz_class binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return c;
}

bool is_nondegenerate(std::int64_t n, std::int64_t h, std::int64_t r) { return h > r - 1 || h < -n; }

RatFun beta_higher(const BetaQuery& query) {
  require(query.n >= 0, "beta_higher needs n >= 0");
  require(query.r >= 1, "beta_higher needs r >= 1");
  RatFun sum;
  for (std::int64_t l = 0; l <= query.n; ++l) {
    mpz_class coeff = binomial(query.n, l);
    mpz_class lp1_pow;
    mpz_ui_pow_ui(lp1_pow.get_mpz_t(), static_cast<unsigned long>(l + 1),
                  static_cast<unsigned long>(query.r));
    coeff *= lp1_pow;
    if (l % 2 == 1) {
      coeff = -coeff;
    }
    const RatFun term = RatFun(Rational(coeff)) * q_bracket(l + 1, query.w).pow(-query.r);
    sum += term.times_q_power(l * query.arg);
  }
  return sum * inverse_power_of_one_minus(query.w, query.n);
}

RatFun beta_number(std::int64_t n) { return beta_higher(BetaQuery{n, 1, BaseExp(1), 0}); }

RatFun beta_weighted(const WeightedBetaQuery& query) {
  require(query.n >= 0, "beta_weighted needs n >= 0");
  require(query.r >= 1, "beta_weighted needs r >= 1");
  if (!is_nondegenerate(query.n, query.h, query.r)) {
    throw DegeneracyError("weighted closed form is degenerate at n=" + std::to_string(query.n) +
                          ", h=" + std::to_string(query.h) + ", r=" + std::to_string(query.r) +
                          ": a factor m/[m]_q has m = 0 (need h > r-1 or h < -n)");
  }
  RatFun sum;
  for (std::int64_t j = 0; j <= query.n; ++j) {
    mpz_class coeff = binomial(query.n, j);
    if (j % 2 == 1) {
      coeff = -coeff;
    }
    RatFun term{Rational(coeff)};
    for (std::int64_t k = 0; k < query.r; ++k) {
      const std::int64_t m = j + query.h - k;
      term *= RatFun(m) / q_bracket(m, query.w);
    }
    sum += term.times_q_power(j * query.arg);
  }
  return sum * inverse_power_of_one_minus(query.w, query.n);
}

RatFun t_sum(std::int64_t n, std::int64_t i, std::int64_t r, std::int64_t wlim, BaseExp b) {
  check_t_sum_args(n, i, r, wlim);
  std::map<std::int64_t, long> count_by_sum;
  for_each_tuple(r, wlim, [&](const std::vector<std::int64_t>& j) {
    std::int64_t s = 0;
    for (auto v : j) {
      s += v;
    }
    ++count_by_sum[s];
  });
  RatFun total;
  for (const auto& [s, count] : count_by_sum) {
    const RatFun term = q_bracket(s, b).pow(n - i) * RatFun(count);
    total += term.times_q_power(b.value() * (i + 1) * s);
  }
  return total;
}

RatFun t_sum_h(std::int64_t n, std::int64_t i, std::int64_t h, std::int64_t r, std::int64_t wlim,
               BaseExp b) {
  check_t_sum_args(n, i, r, wlim);
  std::map<std::pair<std::int64_t, std::int64_t>, long> count;
  for_each_tuple(r, wlim, [&](const std::vector<std::int64_t>& j) {
    std::int64_t s = 0;
    std::int64_t e = 0;
    for (std::size_t idx = 0; idx < j.size(); ++idx) {
      const auto l = static_cast<std::int64_t>(idx) + 1;
      s += j[idx];
      e += (i + h - l + 1) * j[idx];
    }
    ++count[{s, b.value() * e}];
  });
  RatFun total;
  for (const auto& [key, c] : count) {
    const auto& [s, e] = key;
    const RatFun term = q_bracket(s, b).pow(n - i) * RatFun(c);
    total += term.times_q_power(e);
  }
  return total;
}

std::vector<Rational> classical_bernoulli_numbers(std::int64_t max_index) {
  require(max_index >= 0, "Bernoulli index must be >= 0");
  // sum_{k<m+1} C(m+1, k) B_k = 0 for m >= 1.
  std::vector<Rational> b{Rational(1)};
  for (std::int64_t m = 1; m <= max_index; ++m) {
    Rational acc;
    for (std::int64_t k = 0; k < m; ++k) {
      acc += Rational(binomial(m + 1, k)) * b[static_cast<std::size_t>(k)];
    }
    b.push_back(-acc / Rational(m + 1));
  }
  return b;
}

Rational classical_bernoulli_higher(std::int64_t n, std::int64_t r, const Rational& x) {
  require(n >= 0, "classical_bernoulli_higher needs n >= 0");
  require(r >= 1, "classical_bernoulli_higher needs r >= 1");
  const auto len = static_cast<std::size_t>(n + 1);
  const auto bern = classical_bernoulli_numbers(n);
  std::vector<Rational> factorial(len, Rational(1));
  for (std::size_t k = 1; k < len; ++k) {
    factorial[k] = factorial[k - 1] * Rational(static_cast<long>(k));
  }
  // t/(e^t - 1) = sum B_m t^m / m!
  std::vector<Rational> base(len);
  for (std::size_t m = 0; m < len; ++m) {
    base[m] = bern[m] / factorial[m];
  }
  const auto truncated_product = [len](const std::vector<Rational>& a, const std::vector<Rational>& c) {
    std::vector<Rational> out(len);
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = 0; i + j < len; ++j) {
        out[i + j] += a[i] * c[j];
      }
    }
    return out;
  };
  std::vector<Rational> series = base;
  for (std::int64_t k = 1; k < r; ++k) {
    series = truncated_product(series, base);
  }
  std::vector<Rational> exp_xt(len);
  for (std::size_t k = 0; k < len; ++k) {
    exp_xt[k] = x.pow(static_cast<std::int64_t>(k)) / factorial[k];
  }
  series = truncated_product(series, exp_xt);
  return series[len - 1] * factorial[len - 1];
}

}  // namespace qsym
