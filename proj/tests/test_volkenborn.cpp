#include <vector>

#include "doctest.h"
#include "qsym/errors.hpp"
#include "qsym/qbernoulli.hpp"
#include "qsym/volkenborn.hpp"

using qsym::ConvergenceReport;
using qsym::Family;
using qsym::PadicContext;
using qsym::Rational;
using qsym::Valuation;

namespace {

Rational bracket_at(const Rational& q0, std::int64_t m) {
  if (q0 == Rational(1)) {
    return Rational(m);
  }
  return (Rational(1) - q0.pow(m)) / (Rational(1) - q0);
}

// Direct enumeration of every tuple in [0, p^N)^r, one summand at a time.
Rational brute_sum(std::int64_t n, std::int64_t h, std::int64_t r, std::int64_t x, const Rational& q0,
                   std::int64_t L, bool weighted) {
  Rational total;
  std::vector<std::int64_t> y(static_cast<std::size_t>(r), 0);
  for (;;) {
    std::int64_t s = 0, e = 0;
    for (std::int64_t l = 1; l <= r; ++l) {
      const std::int64_t yl = y[static_cast<std::size_t>(l - 1)];
      s += yl;
      e += (weighted ? (h - l) : 0) * yl + yl;
    }
    total += bracket_at(q0, x + s).pow(n) * q0.pow(e);
    std::int64_t pos = r - 1;
    while (pos >= 0 && ++y[static_cast<std::size_t>(pos)] == L) {
      y[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) {
      break;
    }
  }
  return total / bracket_at(q0, L).pow(r);
}

Rational beta_at(std::int64_t n, std::int64_t r, std::int64_t x, const Rational& q0) {
  return qsym::beta_higher({n, r, qsym::BaseExp(1), x}).eval(q0);
}

}  // namespace

TEST_CASE("p_valuation examples") {
  CHECK(qsym::p_valuation(Rational(3, 4), 2) == Valuation(-2));
  CHECK(qsym::p_valuation(Rational(50), 5) == Valuation(2));
  CHECK(qsym::p_valuation(Rational(0), 7).is_infinite());
  CHECK(qsym::p_valuation(Rational(7, 3), 5) == Valuation(0));
  CHECK_THROWS_AS(qsym::p_valuation(Rational(2), 6), qsym::DomainError);
  CHECK(Valuation(100) < Valuation::infinity());
  CHECK(Valuation::infinity().to_string() == "inf");
  CHECK_THROWS_AS(Valuation::infinity().value(), qsym::DomainError);
}

TEST_CASE("PadicContext validation") {
  CHECK(PadicContext(5, 4).q0() == Rational(6));
  CHECK(PadicContext(2, 4).q0() == Rational(5));
  CHECK_THROWS_AS(PadicContext(6, 3), qsym::DomainError);
  CHECK_THROWS_AS(PadicContext(1, 3), qsym::DomainError);
  CHECK_THROWS_AS(PadicContext(2, Rational(3), 3), qsym::DomainError);  // v_2(1-3) = 1 < 2
  CHECK_THROWS_AS(PadicContext(5, Rational(2), 3), qsym::DomainError);
  CHECK_THROWS_AS(PadicContext(5, Rational(6), 0), qsym::DomainError);
  CHECK_NOTHROW(PadicContext(3, Rational(1, 4), 2));  // 1 - 1/4 = 3/4
  CHECK_NOTHROW(PadicContext(3, Rational(1), 2));
}

TEST_CASE("riemann_sum_multi examples") {
  const PadicContext ctx5(5, 4);
  for (std::int64_t N = 1; N <= 4; ++N) {
    CHECK(qsym::riemann_sum_multi(0, 1, 0, ctx5, N) == Rational(1));
    CHECK(qsym::riemann_sum_multi(0, 2, 3, ctx5, std::min<std::int64_t>(N, 3)) == Rational(1));
  }
  const Rational b1 = beta_at(1, 1, 0, Rational(6));
  const Rational s1 = qsym::riemann_sum_multi(1, 1, 0, ctx5, 1);
  const Rational s2 = qsym::riemann_sum_multi(1, 1, 0, ctx5, 2);
  CHECK(s2 == brute_sum(1, 1, 1, 0, Rational(6), 25, false));
  CHECK(qsym::p_valuation(s2 - b1, 5) >= qsym::p_valuation(s1 - b1, 5));

  const PadicContext ctx3(3, 4);
  const Rational nine = qsym::riemann_sum_multi(1, 2, 0, ctx3, 1);
  CHECK(nine == brute_sum(1, 1, 2, 0, Rational(4), 3, false));
  CHECK(qsym::p_valuation(nine - beta_at(1, 2, 0, Rational(4)), 3) >= Valuation(1));

  CHECK_THROWS_AS(qsym::riemann_sum_multi(1, 1, 0, ctx5, 5), qsym::DomainError);
  CHECK_THROWS_AS(qsym::riemann_sum_multi(1, 0, 0, ctx5, 1), qsym::DomainError);
  const PadicContext tight(5, Rational(6), 4, 10'000);
  CHECK_THROWS_AS(qsym::riemann_sum_multi(1, 2, 0, tight, 3), qsym::ResourceError);
  CHECK_NOTHROW(qsym::riemann_sum_multi(1, 2, 0, tight, 2));
}

TEST_CASE("folded sums agree with brute-force enumeration") {
  const PadicContext ctx3(3, Rational(4), 3);
  const PadicContext ctx2(2, Rational(-3), 3);
  const PadicContext ctx_q(3, Rational(-1, 2), 3);  // 1 - (-1/2) = 3/2
  for (const PadicContext* ctx : {&ctx3, &ctx2, &ctx_q}) {
    const std::int64_t L = ctx->p() * ctx->p();
    for (std::int64_t r = 1; r <= 3; ++r) {
      for (std::int64_t n = 0; n <= 3; ++n) {
        for (std::int64_t x : {-2, 0, 1}) {
          CHECK(qsym::riemann_sum_multi(n, r, x, *ctx, 2) == brute_sum(n, 1, r, x, ctx->q0(), L, false));
          for (std::int64_t h : {-1, 0, 2, 3}) {
            CHECK(qsym::riemann_sum_weighted(n, h, r, x, *ctx, 2) == brute_sum(n, h, r, x, ctx->q0(), L, true));
          }
        }
      }
    }
  }
}

TEST_CASE("riemann_sum_weighted examples") {
  const PadicContext ctx(5, 3);
  for (std::int64_t N = 1; N <= 3; ++N) {
    CHECK(qsym::riemann_sum_weighted(2, 1, 1, 1, ctx, N) == qsym::riemann_sum_multi(2, 1, 1, ctx, N));
  }
  // n = 0, h = 2, r = 1: sum q^{2y} / [p^N]_q = [p^N]_{q^2} / [p^N]_q.
  const Rational q0 = ctx.q0();
  for (std::int64_t N = 1; N <= 3; ++N) {
    std::int64_t L = 1;
    for (std::int64_t k = 0; k < N; ++k) {
      L *= 5;
    }
    const Rational geometric = bracket_at(q0 * q0, L) / bracket_at(q0, L);
    CHECK(qsym::riemann_sum_weighted(0, 2, 1, 0, ctx, N) == geometric);
  }
  // Degenerate h still produces a sum.
  CHECK_NOTHROW(qsym::riemann_sum_weighted(1, 0, 1, 0, ctx, 2));
}

TEST_CASE("thread count does not change Riemann sums") {
  const PadicContext ctx(5, 3);
  for (unsigned t : {1U, 3U, 8U}) {
    CHECK(qsym::riemann_sum_multi(3, 2, 1, ctx, 2, t) == qsym::riemann_sum_multi(3, 2, 1, ctx, 2, 1));
    CHECK(qsym::riemann_sum_weighted(2, 3, 2, 0, ctx, 2, t) == qsym::riemann_sum_weighted(2, 3, 2, 0, ctx, 2, 1));
    CHECK(qsym::riemann_sum_multi(2, 1, 0, ctx, 3, t) == qsym::riemann_sum_multi(2, 1, 0, ctx, 3, 1));
  }
}

TEST_CASE("convergence_report examples") {
  const PadicContext ctx3(3, 3);
  ConvergenceReport zero = qsym::convergence_report(Family::multi, {0, 2, 1, 0}, ctx3);
  CHECK(zero.monotone);
  REQUIRE(zero.points.size() == 3);
  for (const auto& pt : zero.points) {
    CHECK(pt.valuation.is_infinite());
  }

  const PadicContext ctx5(5, 4);
  ConvergenceReport single = qsym::convergence_report(Family::single, {2, 1, 1, 0}, ctx5);
  CHECK(single.monotone);
  REQUIRE(single.points.size() == 4);
  CHECK(single.points.back().valuation >= Valuation(3));
  for (std::size_t k = 0; k < single.points.size(); ++k) {
    CHECK(single.points[k].level == static_cast<std::int64_t>(k + 1));
  }

  ConvergenceReport weighted = qsym::convergence_report(Family::weighted, {1, 1, 2, 0}, PadicContext(3, 3));
  CHECK(weighted.monotone);

  CHECK_THROWS_AS(qsym::convergence_report(Family::single, {2, 2, 1, 0}, ctx5), qsym::DomainError);
  CHECK_THROWS_AS(qsym::convergence_report(Family::weighted, {1, 1, 0, 0}, ctx5), qsym::DegeneracyError);
  CHECK(qsym::family_from_name("multi") == Family::multi);
  CHECK_THROWS_AS(qsym::family_from_name("double"), qsym::DomainError);
}

TEST_CASE("convergence over the tested families") {
  for (std::int64_t r = 1; r <= 2; ++r) {
    const PadicContext ctx(5, r == 1 ? 4 : 3);
    for (std::int64_t n = 0; n <= 3; ++n) {
      for (std::int64_t x = 0; x <= 1; ++x) {
        auto rep = qsym::convergence_report(r == 1 ? Family::single : Family::multi, {n, r, 1, x}, ctx);
        CHECK(rep.monotone);
        CHECK(rep.points.back().valuation >= Valuation(3));
        if (n == 0) {
          for (const auto& pt : rep.points) {
            CHECK(pt.valuation.is_infinite());
          }
        }
      }
    }
  }
}

TEST_CASE("shift consequence at finite level") {
  // q0 S_N([x+1]^n) - S_N([x]^n) approaches q0-1, 1, 0 for n = 0, 1, 2.
  const PadicContext ctx(5, 4);
  const Rational q0 = ctx.q0();
  const Rational limits[] = {q0 - Rational(1), Rational(1), Rational(0)};
  for (std::int64_t n = 0; n <= 2; ++n) {
    Valuation prev(-1000);
    for (std::int64_t N = 1; N <= 4; ++N) {
      const Rational d = q0 * qsym::riemann_sum_multi(n, 1, 1, ctx, N) - qsym::riemann_sum_multi(n, 1, 0, ctx, N);
      const Valuation v = qsym::p_valuation(d - limits[n], 5);
      CHECK(v >= prev);
      prev = v;
    }
    CHECK(prev >= Valuation(3));
  }
}
