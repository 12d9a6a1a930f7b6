#include "qsym/identities.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>

#include "qsym/detail/parallel.hpp"
#include "qsym/errors.hpp"
#include "qsym/qbernoulli.hpp"
#include "qsym/qcore.hpp"

namespace qsym {

namespace {

constexpr std::array<std::pair<Identity, std::string_view>, 9> kNames{{
    {Identity::recurrence, "recurrence"},
    {Identity::shift, "shift"},
    {Identity::expansion, "expansion"},
    {Identity::thm3, "thm3"},
    {Identity::thm4, "thm4"},
    {Identity::thm5, "thm5"},
    {Identity::thm6, "thm6"},
    {Identity::multiplication, "multiplication"},
    {Identity::limit_q1, "limit-q1"},
}};

void require_domain(bool ok, const std::string& what) {
  if (!ok) {
    throw DomainError(what);
  }
}

void require_guard(bool ok, const std::string& what) {
  if (!ok) {
    throw ResourceError("guard exceeded: " + what);
  }
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

void guard_n(std::int64_t n, const Guards& g) {
  require_domain(n >= 0, "n must be >= 0, got " + std::to_string(n));
  require_guard(n <= g.max_n, "n = " + std::to_string(n) + " > max_n = " + std::to_string(g.max_n));
}

void guard_r(std::int64_t r, const Guards& g) {
  require_domain(r >= 1, "r must be >= 1, got " + std::to_string(r));
  require_guard(r <= g.max_r, "r = " + std::to_string(r) + " > max_r = " + std::to_string(g.max_r));
}

void guard_w(std::int64_t w, const char* name, const Guards& g) {
  require_domain(w >= 1, std::string(name) + " must be >= 1, got " + std::to_string(w));
  require_guard(w <= g.max_w,
                std::string(name) + " = " + std::to_string(w) + " > max_w = " + std::to_string(g.max_w));
}

void guard_x(std::int64_t x, const Guards& g) {
  require_guard(abs64(x) <= g.max_abs_x,
                "|x| = " + std::to_string(abs64(x)) + " > max_abs_x = " + std::to_string(g.max_abs_x));
}

void guard_h(std::int64_t h, const Guards& g) {
  require_guard(abs64(h) <= g.max_abs_h,
                "|h| = " + std::to_string(abs64(h)) + " > max_abs_h = " + std::to_string(g.max_abs_h));
}

void require_nondegenerate(std::int64_t n, std::int64_t h, std::int64_t r) {
  if (!is_nondegenerate(n, h, r)) {
    throw DegeneracyError("weighted family is degenerate at n = " + std::to_string(n) + ", h = " +
                          std::to_string(h) + ", r = " + std::to_string(r) + " (needs h > r - 1 or h < -n)");
  }
}

CheckReport make_report(Identity id, CheckParams params, RatFun lhs, RatFun rhs) {
  CheckReport rep;
  rep.identity = id;
  rep.params = params;
  rep.holds = lhs == rhs;
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  return rep;
}

RatFun bracket_pow(std::int64_t w, std::int64_t e) { return q_bracket(w).pow(e); }

RatFun from_mpz(const mpz_class& z) { return RatFun(Rational(z)); }

// Right side shared by the recurrence and the shift identity.
RatFun delta_rhs(std::int64_t n) {
  if (n == 0) {
    return RatFun(LaurentPoly::monomial(Rational(1), 1) - LaurentPoly(1));
  }
  return RatFun(n == 1 ? 1 : 0);
}

// Number of tuples j in [0, w)^r with j_1 + ... + j_r = s, indexed by s.
std::vector<mpz_class> tuple_sum_counts(std::int64_t r, std::int64_t w) {
  std::vector<mpz_class> counts{1};
  for (std::int64_t k = 0; k < r; ++k) {
    std::vector<mpz_class> next(counts.size() + static_cast<std::size_t>(w - 1));
    for (std::size_t s = 0; s < counts.size(); ++s) {
      for (std::int64_t j = 0; j < w; ++j) {
        next[s + static_cast<std::size_t>(j)] += counts[s];
      }
    }
    counts = std::move(next);
  }
  return counts;
}

// [wa]^{n-r} sum_{j in [0,wa)^r} q^{wb sum j} beta^{(r)}_{n,q^{wa}}(A = wa wb x + wb sum j)
RatFun thm3_side(std::int64_t n, std::int64_t r, std::int64_t wa, std::int64_t wb, std::int64_t x) {
  const auto counts = tuple_sum_counts(r, wa);
  RatFun sum;
  for (std::size_t s = 0; s < counts.size(); ++s) {
    const auto ss = static_cast<std::int64_t>(s);
    const RatFun beta = beta_higher(BetaQuery{n, r, BaseExp(wa), wa * wb * x + wb * ss});
    sum += (from_mpz(counts[s]) * beta).times_q_power(wb * ss);
  }
  return bracket_pow(wa, n - r) * sum;
}

// sum_i C(n,i) [wa]^{n-i} [wb]^{i-r} beta^{(r)}_{i,q^{wb}}(A = wa wb x) T^{(r)}_{n,i}(wb | q^{wa})
RatFun thm4_side(std::int64_t n, std::int64_t r, std::int64_t wa, std::int64_t wb, std::int64_t x,
                 bool mutate) {
  RatFun sum;
  for (std::int64_t i = 0; i <= n; ++i) {
    RatFun term = from_mpz(binomial(n, i)) * bracket_pow(wa, n - i) * bracket_pow(wb, i - r) *
                  beta_higher(BetaQuery{i, r, BaseExp(wb), wa * wb * x}) * t_sum(n, i, r, wb, BaseExp(wa));
    if (mutate && i == 0) {
      term = term.times_q_power(1);
    }
    sum += term;
  }
  return sum;
}

// [wa]^{n-r} sum_j q^{wb sum_l (h-l+1) j_l} beta^{(h,r)}_{n,q^{wa}}(A = wa wb x + wb sum j)
RatFun thm5_side(std::int64_t n, std::int64_t h, std::int64_t r, std::int64_t wa, std::int64_t wb,
                 std::int64_t x) {
  // Tuples grouped by (sum j, sum (h-l+1) j_l).
  std::map<std::pair<std::int64_t, std::int64_t>, mpz_class> groups{{{0, 0}, 1}};
  for (std::int64_t l = 1; l <= r; ++l) {
    std::map<std::pair<std::int64_t, std::int64_t>, mpz_class> next;
    for (const auto& [key, count] : groups) {
      for (std::int64_t j = 0; j < wa; ++j) {
        next[{key.first + j, key.second + (h - l + 1) * j}] += count;
      }
    }
    groups = std::move(next);
  }
  RatFun sum;
  for (const auto& [key, count] : groups) {
    const RatFun beta = beta_weighted(WeightedBetaQuery{n, h, r, BaseExp(wa), wa * wb * x + wb * key.first});
    sum += (from_mpz(count) * beta).times_q_power(wb * key.second);
  }
  return bracket_pow(wa, n - r) * sum;
}

// sum_i C(n,i) [wb]^{n-i} [wa]^{i-r} beta^{(h,r)}_{i,q^{wa}}(A = wa wb x) T^{(h,r)}_{n,i}(wa | q^{wb})
RatFun thm6_side(std::int64_t n, std::int64_t h, std::int64_t r, std::int64_t wa, std::int64_t wb,
                 std::int64_t x) {
  RatFun sum;
  for (std::int64_t i = 0; i <= n; ++i) {
    sum += from_mpz(binomial(n, i)) * bracket_pow(wb, n - i) * bracket_pow(wa, i - r) *
           beta_weighted(WeightedBetaQuery{i, h, r, BaseExp(wa), wa * wb * x}) *
           t_sum_h(n, i, h, r, wa, BaseExp(wb));
  }
  return sum;
}

void guard_pair(std::int64_t n, std::int64_t r, std::int64_t w1, std::int64_t w2, std::int64_t x,
                const Guards& g) {
  guard_n(n, g);
  guard_r(r, g);
  guard_w(w1, "w1", g);
  guard_w(w2, "w2", g);
  guard_x(x, g);
}

}  // namespace

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> ids = [] {
    std::vector<Identity> v;
    for (const auto& [id, name] : kNames) {
      v.push_back(id);
    }
    return v;
  }();
  return ids;
}

std::string_view identity_name(Identity id) {
  for (const auto& [known, name] : kNames) {
    if (known == id) {
      return name;
    }
  }
  throw DomainError("unknown identity value");
}

Identity identity_from_name(std::string_view name) {
  for (const auto& [id, known] : kNames) {
    if (known == name) {
      return id;
    }
  }
  throw DomainError("unknown identity '" + std::string(name) + "'");
}

CheckReport check_recurrence(std::int64_t n, const CheckOptions& opts) {
  guard_n(n, opts.guards);
  RatFun sum;
  for (std::int64_t l = 0; l <= n; ++l) {
    sum += (from_mpz(binomial(n, l)) * beta_number(l)).times_q_power(l);
  }
  RatFun lhs = sum.times_q_power(1) - beta_number(n);
  return make_report(Identity::recurrence, CheckParams{n, {}, {}, {}, {}, {}}, std::move(lhs), delta_rhs(n));
}

CheckReport check_shift(std::int64_t n, const CheckOptions& opts) {
  guard_n(n, opts.guards);
  RatFun lhs = beta_higher(BetaQuery{n, 1, BaseExp(1), 1}).times_q_power(1) - beta_number(n);
  return make_report(Identity::shift, CheckParams{n, {}, {}, {}, {}, {}}, std::move(lhs), delta_rhs(n));
}

CheckReport check_expansion(std::int64_t n, std::int64_t x, const CheckOptions& opts) {
  guard_n(n, opts.guards);
  guard_x(x, opts.guards);
  RatFun lhs = beta_higher(BetaQuery{n, 1, BaseExp(1), x});
  const RatFun bx = q_bracket(x);
  RatFun rhs;
  for (std::int64_t l = 0; l <= n; ++l) {
    rhs += (from_mpz(binomial(n, l)) * beta_number(l) * bx.pow(n - l)).times_q_power(l * x);
  }
  return make_report(Identity::expansion, CheckParams{n, {}, {}, {}, {}, x}, std::move(lhs), std::move(rhs));
}

CheckReport check_limit_q1(std::int64_t n, std::int64_t r, std::int64_t x, const CheckOptions& opts) {
  guard_n(n, opts.guards);
  guard_r(r, opts.guards);
  guard_x(x, opts.guards);
  RatFun lhs(beta_higher(BetaQuery{n, r, BaseExp(1), x}).limit_at_one());
  RatFun rhs(classical_bernoulli_higher(n, r, Rational(x)));
  return make_report(Identity::limit_q1, CheckParams{n, r, {}, {}, {}, x}, std::move(lhs), std::move(rhs));
}

CheckReport check_thm3(std::int64_t n, std::int64_t r, std::int64_t w1, std::int64_t w2, std::int64_t x,
                       const CheckOptions& opts) {
  guard_pair(n, r, w1, w2, x, opts.guards);
  return make_report(Identity::thm3, CheckParams{n, r, {}, w1, w2, x}, thm3_side(n, r, w1, w2, x),
                     thm3_side(n, r, w2, w1, x));
}

CheckReport check_thm4(std::int64_t n, std::int64_t r, std::int64_t w1, std::int64_t w2, std::int64_t x,
                       const CheckOptions& opts) {
  guard_pair(n, r, w1, w2, x, opts.guards);
  const bool mutate = opts.mutation == Mutation::thm4_lhs_exponent;
  return make_report(Identity::thm4, CheckParams{n, r, {}, w1, w2, x}, thm4_side(n, r, w1, w2, x, mutate),
                     thm4_side(n, r, w2, w1, x, false));
}

CheckReport check_thm5(std::int64_t n, std::int64_t h, std::int64_t r, std::int64_t w1, std::int64_t w2,
                       std::int64_t x, const CheckOptions& opts) {
  guard_pair(n, r, w1, w2, x, opts.guards);
  guard_h(h, opts.guards);
  require_nondegenerate(n, h, r);
  return make_report(Identity::thm5, CheckParams{n, r, h, w1, w2, x}, thm5_side(n, h, r, w1, w2, x),
                     thm5_side(n, h, r, w2, w1, x));
}

CheckReport check_thm6(std::int64_t n, std::int64_t h, std::int64_t r, std::int64_t w1, std::int64_t w2,
                       std::int64_t x, const CheckOptions& opts) {
  guard_pair(n, r, w1, w2, x, opts.guards);
  guard_h(h, opts.guards);
  require_nondegenerate(n, h, r);
  return make_report(Identity::thm6, CheckParams{n, r, h, w1, w2, x}, thm6_side(n, h, r, w1, w2, x),
                     thm6_side(n, h, r, w2, w1, x));
}

CheckReport check_multiplication(std::int64_t n, std::int64_t r, std::int64_t w1, std::int64_t x,
                                 const CheckOptions& opts) {
  guard_n(n, opts.guards);
  guard_r(r, opts.guards);
  guard_w(w1, "w1", opts.guards);
  guard_x(x, opts.guards);
  RatFun lhs = beta_higher(BetaQuery{n, r, BaseExp(1), w1 * x});
  const auto counts = tuple_sum_counts(r, w1);
  RatFun sum;
  for (std::size_t s = 0; s < counts.size(); ++s) {
    const auto ss = static_cast<std::int64_t>(s);
    sum += (from_mpz(counts[s]) * beta_higher(BetaQuery{n, r, BaseExp(w1), w1 * x + ss})).times_q_power(ss);
  }
  RatFun rhs = bracket_pow(w1, n - r) * sum;
  return make_report(Identity::multiplication, CheckParams{n, r, {}, w1, {}, x}, std::move(lhs),
                     std::move(rhs));
}

namespace {

bool uses(Identity id, char field) {
  switch (field) {
    case 'n':
      return true;
    case 'r':
      return id == Identity::limit_q1 || id == Identity::thm3 || id == Identity::thm4 || id == Identity::thm5 ||
             id == Identity::thm6 || id == Identity::multiplication;
    case 'h':
      return id == Identity::thm5 || id == Identity::thm6;
    case 'a':  // w1
      return id == Identity::thm3 || id == Identity::thm4 || id == Identity::thm5 || id == Identity::thm6 ||
             id == Identity::multiplication;
    case 'b':  // w2
      return id == Identity::thm3 || id == Identity::thm4 || id == Identity::thm5 || id == Identity::thm6;
    case 'x':
      return id != Identity::recurrence && id != Identity::shift;
    default:
      return false;
  }
}

// Values a range contributes, or a single empty slot when unused.
std::vector<std::optional<std::int64_t>> axis(const IntRange& range, bool used) {
  std::vector<std::optional<std::int64_t>> v;
  if (!used) {
    v.emplace_back();
    return v;
  }
  for (std::int64_t k = range.lo; k <= range.hi; ++k) {
    v.emplace_back(k);
  }
  return v;
}

void validate_range(const IntRange& range, const char* name) {
  if (range.empty()) {
    throw DomainError(std::string("sweep range for ") + name + " is empty");
  }
}

void validate_sweep(const SweepConfig& cfg) {
  require_domain(!cfg.identities.empty(), "sweep needs at least one identity");
  const Guards& g = cfg.guards;
  bool any_r = false, any_h = false, any_w1 = false, any_w2 = false, any_x = false;
  for (Identity id : cfg.identities) {
    any_r = any_r || uses(id, 'r');
    any_h = any_h || uses(id, 'h');
    any_w1 = any_w1 || uses(id, 'a');
    any_w2 = any_w2 || uses(id, 'b');
    any_x = any_x || uses(id, 'x');
  }
  validate_range(cfg.n, "n");
  guard_n(cfg.n.lo, g);
  guard_n(cfg.n.hi, g);
  if (any_r) {
    validate_range(cfg.r, "r");
    guard_r(cfg.r.lo, g);
    guard_r(cfg.r.hi, g);
  }
  if (any_h) {
    validate_range(cfg.h, "h");
    guard_h(cfg.h.lo, g);
    guard_h(cfg.h.hi, g);
  }
  if (any_w1) {
    validate_range(cfg.w1, "w1");
    guard_w(cfg.w1.lo, "w1", g);
    guard_w(cfg.w1.hi, "w1", g);
  }
  if (any_w2) {
    validate_range(cfg.w2, "w2");
    guard_w(cfg.w2.lo, "w2", g);
    guard_w(cfg.w2.hi, "w2", g);
  }
  if (any_x) {
    validate_range(cfg.x, "x");
    guard_x(cfg.x.lo, g);
    guard_x(cfg.x.hi, g);
  }
}

CheckReport run_point(Identity id, const CheckParams& p, const CheckOptions& opts) {
  switch (id) {
    case Identity::recurrence:
      return check_recurrence(p.n, opts);
    case Identity::shift:
      return check_shift(p.n, opts);
    case Identity::expansion:
      return check_expansion(p.n, *p.x, opts);
    case Identity::limit_q1:
      return check_limit_q1(p.n, *p.r, *p.x, opts);
    case Identity::thm3:
      return check_thm3(p.n, *p.r, *p.w1, *p.w2, *p.x, opts);
    case Identity::thm4:
      return check_thm4(p.n, *p.r, *p.w1, *p.w2, *p.x, opts);
    case Identity::thm5:
      return check_thm5(p.n, *p.h, *p.r, *p.w1, *p.w2, *p.x, opts);
    case Identity::thm6:
      return check_thm6(p.n, *p.h, *p.r, *p.w1, *p.w2, *p.x, opts);
    case Identity::multiplication:
      return check_multiplication(p.n, *p.r, *p.w1, *p.x, opts);
  }
  throw DomainError("unknown identity value");
}

}  // namespace

std::vector<CheckParams> sweep_points(const SweepConfig& cfg, Identity id) {
  std::vector<CheckParams> points;
  const bool weighted = uses(id, 'h');
  for (const auto& n : axis(cfg.n, true)) {
    for (const auto& r : axis(cfg.r, uses(id, 'r'))) {
      for (const auto& h : axis(cfg.h, weighted)) {
        if (weighted && !is_nondegenerate(*n, *h, *r)) {
          continue;
        }
        for (const auto& w1 : axis(cfg.w1, uses(id, 'a'))) {
          for (const auto& w2 : axis(cfg.w2, uses(id, 'b'))) {
            for (const auto& x : axis(cfg.x, uses(id, 'x'))) {
              points.push_back(CheckParams{*n, r, h, w1, w2, x});
            }
          }
        }
      }
    }
  }
  return points;
}

std::vector<CheckReport> sweep(const SweepConfig& cfg) {
  validate_sweep(cfg);
  std::vector<std::pair<Identity, CheckParams>> tasks;
  for (Identity id : cfg.identities) {
    for (auto& p : sweep_points(cfg, id)) {
      tasks.emplace_back(id, std::move(p));
    }
  }
  const CheckOptions opts{cfg.guards, cfg.mutation};
  return detail::parallel_map<CheckReport>(tasks.size(), cfg.threads, [&](std::size_t i) {
    return run_point(tasks[i].first, tasks[i].second, opts);
  });
}

}  // namespace qsym
