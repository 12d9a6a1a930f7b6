#include "qsym/volkenborn.hpp"

#include <array>
#include <string>
#include <utility>

#include "qsym/detail/parallel.hpp"
#include "qsym/errors.hpp"
#include "qsym/qbernoulli.hpp"

namespace qsym {

namespace {

// Rationals over one common denominator, so inner loops stay in mpz.
struct ScaledTable {
  std::vector<mpz_class> num;
  mpz_class den = 1;
};

ScaledTable scale(const std::vector<Rational>& values) {
  ScaledTable t;
  for (const auto& v : values) {
    mpz_lcm(t.den.get_mpz_t(), t.den.get_mpz_t(), v.denominator().get_mpz_t());
  }
  t.num.reserve(values.size());
  for (const auto& v : values) {
    t.num.push_back(v.numerator() * (t.den / v.denominator()));
  }
  return t;
}

std::int64_t ipow_checked(std::int64_t base, std::int64_t exp, std::int64_t cap, const std::string& what) {
  std::int64_t acc = 1;
  for (std::int64_t k = 0; k < exp; ++k) {
    if (acc > cap / base) {
      throw ResourceError(what + " exceeds the summand budget " + std::to_string(cap));
    }
    acc *= base;
  }
  return acc;
}

// [m]_{q0} for m = start, start+1, ..., start+count-1.
std::vector<Rational> bracket_run(const Rational& q0, std::int64_t start, std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  if (q0 == Rational(1)) {
    for (std::size_t k = 0; k < count; ++k) {
      out.emplace_back(start + static_cast<std::int64_t>(k));
    }
    return out;
  }
  Rational cur = (Rational(1) - q0.pow(start)) / (Rational(1) - q0);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(cur);
    cur = Rational(1) + q0 * cur;  // [m+1] = 1 + q [m]
  }
  return out;
}

// q0^{e y} for y = 0..len-1.
std::vector<Rational> power_run(const Rational& q0, std::int64_t e, std::int64_t len) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(len));
  const Rational step = q0.pow(e);
  Rational cur(1);
  for (std::int64_t y = 0; y < len; ++y) {
    out.push_back(cur);
    cur *= step;
  }
  return out;
}

// (1/[L]^r) sum_{y in [0,L)^r} [x + sum y]^n prod_l q0^{e_l y_l}.
//
// The r-fold sum is folded one coordinate at a time from the innermost:
// F_r(s) = B(s), F_{l-1}(s) = sum_y Q_l(y) F_l(s + y), answer F_0(0). This is
// the same finite sum regrouped by distributivity, so the value is exact and
// the cost is O(r^2 L^2) instead of L^r.
Rational weighted_grid_sum(std::int64_t n, std::int64_t x, const std::vector<std::int64_t>& exps,
                           const PadicContext& ctx, std::int64_t N, unsigned threads) {
  if (n < 0) {
    throw DomainError("Riemann sum needs n >= 0, got " + std::to_string(n));
  }
  if (N < 1 || N > ctx.n_max()) {
    throw DomainError("level N must lie in 1.." + std::to_string(ctx.n_max()) + ", got " + std::to_string(N));
  }
  const auto r = static_cast<std::int64_t>(exps.size());
  const std::int64_t L = ipow_checked(ctx.p(), N, ctx.budget(), "p^N");
  ipow_checked(L, r, ctx.budget(), "grid size p^{rN}");

  const Rational& q0 = ctx.q0();
  const auto span = static_cast<std::size_t>(r * (L - 1) + 1);
  std::vector<Rational> integrand = bracket_run(q0, x, span);
  for (auto& v : integrand) {
    v = v.pow(n);
  }
  ScaledTable level = scale(integrand);

  constexpr std::size_t kBlocks = 16;
  for (std::int64_t l = r; l >= 1; --l) {
    const ScaledTable weight = scale(power_run(q0, exps[static_cast<std::size_t>(l - 1)], L));
    const auto out_len = static_cast<std::size_t>((l - 1) * (L - 1) + 1);
    // One task per (output slot, block of y); blocks keep single-slot
    // levels parallel. Partials are combined in index order.
    const std::size_t blocks = out_len >= kBlocks ? 1 : kBlocks;
    const auto ylen = static_cast<std::size_t>(L);
    const std::size_t chunk = (ylen + blocks - 1) / blocks;
    auto partial = detail::parallel_map<mpz_class>(out_len * blocks, threads, [&](std::size_t task) {
      const std::size_t s = task / blocks;
      const std::size_t b = task % blocks;
      mpz_class acc = 0;
      const std::size_t end = std::min(ylen, (b + 1) * chunk);
      for (std::size_t y = b * chunk; y < end; ++y) {
        mpz_addmul(acc.get_mpz_t(), weight.num[y].get_mpz_t(), level.num[s + y].get_mpz_t());
      }
      return acc;
    });
    ScaledTable next;
    next.num.assign(out_len, 0);
    for (std::size_t task = 0; task < partial.size(); ++task) {
      next.num[task / blocks] += partial[task];
    }
    next.den = level.den * weight.den;
    level = std::move(next);
  }

  const Rational total(level.num[0], level.den);
  const Rational norm = bracket_run(q0, L, 1).front();
  return total / norm.pow(r);
}

void require_order(std::int64_t r) {
  if (r < 1) {
    throw DomainError("Riemann sum needs r >= 1, got " + std::to_string(r));
  }
}

}  // namespace

std::int64_t Valuation::value() const {
  if (infinite_) {
    throw DomainError("valuation is infinite");
  }
  return value_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

bool is_prime(std::int64_t p) {
  if (p < 2) {
    return false;
  }
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

Valuation p_valuation(const Rational& r, std::int64_t p) {
  if (!is_prime(p)) {
    throw DomainError("p-adic valuation needs a prime, got " + std::to_string(p));
  }
  if (r.is_zero()) {
    return Valuation::infinity();
  }
  const mpz_class prime(static_cast<long>(p));
  mpz_class rest;
  const auto up = static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), r.numerator().get_mpz_t(), prime.get_mpz_t()));
  const auto down =
      static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), r.denominator().get_mpz_t(), prime.get_mpz_t()));
  return Valuation(up - down);
}

Rational PadicContext::default_q0(std::int64_t p) { return p == 2 ? Rational(5) : Rational(1 + p); }

PadicContext::PadicContext(std::int64_t p, Rational q0, std::int64_t n_max, std::int64_t budget)
    : p_(p), q0_(std::move(q0)), n_max_(n_max), budget_(budget) {
  if (!is_prime(p)) {
    throw DomainError("p must be prime, got " + std::to_string(p));
  }
  const std::int64_t need = p == 2 ? 2 : 1;
  const Valuation v = p_valuation(Rational(1) - q0_, p);
  if (v < Valuation(need)) {
    throw DomainError("q0 = " + q0_.to_string() + " violates v_p(1 - q0) >= " + std::to_string(need) +
                      " for p = " + std::to_string(p) + " (got " + v.to_string() + ")");
  }
  if (n_max < 1) {
    throw DomainError("N max must be >= 1, got " + std::to_string(n_max));
  }
  if (budget < 1) {
    throw DomainError("summand budget must be >= 1");
  }
}

PadicContext::PadicContext(std::int64_t p, std::int64_t n_max)
    : PadicContext(p, is_prime(p) ? default_q0(p) : Rational(0), n_max) {}

Rational riemann_sum_multi(std::int64_t n, std::int64_t r, std::int64_t x, const PadicContext& ctx,
                           std::int64_t N, unsigned threads) {
  require_order(r);
  return weighted_grid_sum(n, x, std::vector<std::int64_t>(static_cast<std::size_t>(r), 1), ctx, N, threads);
}

Rational riemann_sum_weighted(std::int64_t n, std::int64_t h, std::int64_t r, std::int64_t x,
                              const PadicContext& ctx, std::int64_t N, unsigned threads) {
  require_order(r);
  std::vector<std::int64_t> exps;
  for (std::int64_t l = 1; l <= r; ++l) {
    exps.push_back(h - l + 1);  // weight q^{(h-l) y} times the measure's q^y
  }
  return weighted_grid_sum(n, x, exps, ctx, N, threads);
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 3> kFamilies{{
    {Family::single, "single"},
    {Family::multi, "multi"},
    {Family::weighted, "weighted"},
}};

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [known, name] : kFamilies) {
    if (known == f) {
      return name;
    }
  }
  throw DomainError("unknown family value");
}

Family family_from_name(std::string_view name) {
  for (const auto& [f, known] : kFamilies) {
    if (known == name) {
      return f;
    }
  }
  throw DomainError("unknown family '" + std::string(name) + "' (expected single, multi or weighted)");
}

ConvergenceReport convergence_report(Family family, const FamilyParams& params, const PadicContext& ctx,
                                     unsigned threads) {
  const auto& [n, r, h, x] = params;
  if (family == Family::single && r != 1) {
    throw DomainError("the single family has r = 1, got r = " + std::to_string(r));
  }
  require_order(r);
  if (n < 0) {
    throw DomainError("convergence report needs n >= 0, got " + std::to_string(n));
  }

  ConvergenceReport rep;
  rep.family = family;
  rep.params = params;
  rep.p = ctx.p();
  rep.q0 = ctx.q0();

  const std::string nx = "n=" + std::to_string(n) + ", r=" + std::to_string(r);
  RatFun closed;
  if (family == Family::weighted) {
    closed = beta_weighted(WeightedBetaQuery{n, h, r, BaseExp(1), x});
    rep.target = "[x+y_1+...+y_r]_q^n q^{sum (h-l) y_l} -> beta_weighted(" + nx + ", h=" + std::to_string(h) +
                 ", x=" + std::to_string(x) + ")";
  } else {
    closed = beta_higher(BetaQuery{n, r, BaseExp(1), x});
    rep.target = "[x+y_1+...+y_r]_q^n -> beta_higher(" + nx + ", x=" + std::to_string(x) + ")";
  }
  Rational limit;
  try {
    limit = closed.eval(ctx.q0());
  } catch (const PoleError&) {
    throw PoleError("closed form " + rep.target + " has a pole at q0 = " + ctx.q0().to_string() +
                    ": denominator " + pretty(closed.denominator()) + " vanishes");
  }

  for (std::int64_t N = 1; N <= ctx.n_max(); ++N) {
    const Rational s = family == Family::weighted ? riemann_sum_weighted(n, h, r, x, ctx, N, threads)
                                                  : riemann_sum_multi(n, r, x, ctx, N, threads);
    rep.points.push_back(ConvergencePoint{N, p_valuation(s - limit, ctx.p())});
  }
  rep.monotone = true;
  for (std::size_t k = 1; k < rep.points.size(); ++k) {
    rep.monotone = rep.monotone && rep.points[k - 1].valuation <= rep.points[k].valuation;
  }
  return rep;
}

}  // namespace qsym
