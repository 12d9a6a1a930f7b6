#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsym/ratfun.hpp"

namespace qsym {

enum class Identity { recurrence, shift, expansion, thm3, thm4, thm5, thm6, multiplication, limit_q1 };

/// Every identity in declaration order.
const std::vector<Identity>& all_identities();
/// Wire name, e.g. "limit-q1".
std::string_view identity_name(Identity id);
/// Throws DomainError for an unknown name.
Identity identity_from_name(std::string_view name);

/// Parameters of one check. Fields an identity does not use stay empty.
struct CheckParams {
  std::int64_t n = 0;
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> h;
  std::optional<std::int64_t> w1;
  std::optional<std::int64_t> w2;
  std::optional<std::int64_t> x;

  friend bool operator==(const CheckParams&, const CheckParams&) = default;
};

struct CheckReport {
  Identity identity = Identity::recurrence;
  CheckParams params;
  RatFun lhs;
  RatFun rhs;
  bool holds = false;
};

/// Size limits on checker arguments; r-fold sums grow like w^r.
struct Guards {
  std::int64_t max_n = 12;
  std::int64_t max_r = 4;
  std::int64_t max_w = 6;
  std::int64_t max_abs_x = 4;
  std::int64_t max_abs_h = 8;
};

/// Test-only perturbations that must make the verifier report failures.
enum class Mutation {
  none,
  /// Multiplies the i = 0 summand of the thm4 left side by q.
  thm4_lhs_exponent,
};

struct CheckOptions {
  Guards guards;
  Mutation mutation = Mutation::none;
};

// Each checker builds both sides from closed forms. Out-of-domain arguments
// throw DomainError; arguments beyond the guards throw ResourceError.

/// q * sum_l C(n,l) q^l beta_l - beta_n against q-1 (n=0), 1 (n=1), 0.
CheckReport check_recurrence(std::int64_t n, const CheckOptions& opts = {});
/// q * beta_n(1) - beta_n against the same three cases.
CheckReport check_shift(std::int64_t n, const CheckOptions& opts = {});
/// beta_n(x) against sum_l C(n,l) q^{lx} beta_l [x]^{n-l}.
CheckReport check_expansion(std::int64_t n, std::int64_t x, const CheckOptions& opts = {});
/// Value at q = 1 of beta^{(r)}_n(x) against the classical B_n^{(r)}(x).
CheckReport check_limit_q1(std::int64_t n, std::int64_t r, std::int64_t x, const CheckOptions& opts = {});
CheckReport check_thm3(std::int64_t n, std::int64_t r, std::int64_t w1, std::int64_t w2, std::int64_t x,
                       const CheckOptions& opts = {});
CheckReport check_thm4(std::int64_t n, std::int64_t r, std::int64_t w1, std::int64_t w2, std::int64_t x,
                       const CheckOptions& opts = {});
/// Throws DegeneracyError when (n, h, r) is degenerate.
CheckReport check_thm5(std::int64_t n, std::int64_t h, std::int64_t r, std::int64_t w1, std::int64_t w2,
                       std::int64_t x, const CheckOptions& opts = {});
CheckReport check_thm6(std::int64_t n, std::int64_t h, std::int64_t r, std::int64_t w1, std::int64_t w2,
                       std::int64_t x, const CheckOptions& opts = {});
/// beta^{(r)}_n(w1 x) against the w1-fold splitting into base q^{w1}.
CheckReport check_multiplication(std::int64_t n, std::int64_t r, std::int64_t w1, std::int64_t x,
                                 const CheckOptions& opts = {});

/// Inclusive integer range; lo > hi is empty.
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool empty() const { return lo > hi; }
};

struct SweepConfig {
  IntRange n{0, 3};
  IntRange r{1, 2};
  IntRange h{1, 4};
  IntRange w1{1, 3};
  IntRange w2{1, 3};
  IntRange x{0, 1};
  std::vector<Identity> identities = all_identities();
  Guards guards;
  /// Worker threads; 0 picks the hardware count.
  unsigned threads = 1;
  Mutation mutation = Mutation::none;
};

/// Runs the selected checkers over the Cartesian grid of the ranges each one
/// uses. Reports come back grouped by identity (in the order given), then in
/// lexicographic parameter order, independent of `threads`. Degenerate
/// (n, h, r) points are skipped for thm5/thm6. Throws ResourceError when a
/// range leaves the guards and DomainError for an empty range or selection.
std::vector<CheckReport> sweep(const SweepConfig& cfg);

/// Parameter tuples that sweep would visit for one identity, in order.
std::vector<CheckParams> sweep_points(const SweepConfig& cfg, Identity id);

}  // namespace qsym
