#include "qsym/detail/int_poly.hpp"

#include <algorithm>
#include <iterator>
#include <string>
#include <utility>

#include "qsym/errors.hpp"

namespace qsym {

void check_exponent_span(std::int64_t span) {
  if (span > kMaxExponentSpan) {
    throw ResourceError("exponent span " + std::to_string(span) + " exceeds the limit of " +
                        std::to_string(kMaxExponentSpan));
  }
}

namespace detail {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t k) {
  check_exponent_span(static_cast<std::int64_t>(k));
  std::vector<mpz_class> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

std::size_t IntPoly::low_zeros() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) {
    ++k;
  }
  return k == coeffs_.size() ? 0 : k;
}

IntPoly IntPoly::shifted_down(std::size_t k) const {
  if (k == 0 || is_zero()) {
    return *this;
  }
  return IntPoly(std::vector<mpz_class>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

IntPoly IntPoly::shifted_up(std::size_t k) const {
  if (k == 0 || is_zero()) {
    return *this;
  }
  check_exponent_span(static_cast<std::int64_t>(coeffs_.size() + k));
  std::vector<mpz_class> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) {
      break;
    }
  }
  return g;
}

mpz_class IntPoly::max_norm() const {
  mpz_class m = 0;
  for (const auto& c : coeffs_) {
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) {
      m = abs(c);
    }
  }
  return m;
}

IntPoly IntPoly::divided_by(const mpz_class& d) const {
  if (d == 1) {
    return *this;
  }
  std::vector<mpz_class> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::scaled(const mpz_class& c) const {
  if (c == 1) {
    return *this;
  }
  std::vector<mpz_class> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    v[i] = coeffs_[i] * c;
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) {
    c = -c;
  }
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<mpz_class> v = big.coeffs_;
  for (std::size_t i = 0; i < small.size(); ++i) {
    v[i] += small.coeffs_[i];
  }
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> v = a.coeffs_;
  if (v.size() < b.size()) {
    v.resize(b.size());
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    v[i] -= b.coeffs_[i];
  }
  return IntPoly(std::move(v));
}

namespace {

// Kronecker substitution: evaluates at 2^bits, multiplies the two integers,
// and reads the product coefficients back as balanced base-2^bits digits.
mpz_class pack(const std::vector<mpz_class>& c, std::size_t lo, std::size_t hi, unsigned long bits) {
  if (hi - lo == 1) {
    return c[lo];
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  mpz_class high = pack(c, mid, hi, bits);
  mpz_mul_2exp(high.get_mpz_t(), high.get_mpz_t(), bits * (mid - lo));
  return high + pack(c, lo, mid, bits);
}

void unpack(mpz_class value, std::vector<mpz_class>& out, std::size_t lo, std::size_t hi,
            unsigned long bits) {
  if (hi - lo == 1) {
    out[lo] = std::move(value);
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const unsigned long low_bits = bits * (mid - lo);
  mpz_class low;
  mpz_fdiv_r_2exp(low.get_mpz_t(), value.get_mpz_t(), low_bits);
  if (mpz_tstbit(low.get_mpz_t(), low_bits - 1) != 0) {
    mpz_class full;
    mpz_setbit(full.get_mpz_t(), low_bits);
    low -= full;
  }
  mpz_class high = value - low;
  mpz_tdiv_q_2exp(high.get_mpz_t(), high.get_mpz_t(), low_bits);
  unpack(std::move(low), out, lo, mid, bits);
  unpack(std::move(high), out, mid, hi, bits);
}

constexpr std::size_t kKroneckerThreshold = 24;

}  // namespace

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  const std::size_t n = a.size() + b.size() - 1;
  check_exponent_span(static_cast<std::int64_t>(n) - 1);
  if (std::min(a.size(), b.size()) >= kKroneckerThreshold) {
    const std::size_t len_bits = mpz_sizeinbase(mpz_class(std::min(a.size(), b.size())).get_mpz_t(), 2);
    const unsigned long bits = static_cast<unsigned long>(
        mpz_sizeinbase(a.max_norm().get_mpz_t(), 2) + mpz_sizeinbase(b.max_norm().get_mpz_t(), 2) +
        len_bits + 2);
    const mpz_class product = pack(a.coeffs_, 0, a.size(), bits) * pack(b.coeffs_, 0, b.size(), bits);
    std::vector<mpz_class> v(n);
    unpack(product, v, 0, n, bits);
    return IntPoly(std::move(v));
  }
  std::vector<mpz_class> v(n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(v));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  // Horner on the numerator with the denominator powers folded in.
  const mpz_class& p = x.get_num();
  const mpz_class& d = x.get_den();
  mpz_class acc = 0;
  mpz_class dpow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= p;
    acc += *it * dpow;
    if (std::next(it) != coeffs_.rend()) {
      dpow *= d;
    }
  }
  mpq_class r(acc, dpow);
  r.canonicalize();
  return r;
}

IntPoly primitive_part(const IntPoly& a) {
  if (a.is_zero()) {
    return a;
  }
  mpz_class c = a.content();
  if (sgn(a.leading()) < 0) {
    c = -c;
  }
  return a.divided_by(c);
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) {
    throw DivisionByZero("polynomial division by zero");
  }
  if (a.is_zero()) {
    return IntPoly{};
  }
  if (a.degree() < b.degree()) {
    return std::nullopt;
  }
  if (b[0] != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) {
    return std::nullopt;
  }
  const std::size_t db = b.size() - 1;
  std::vector<mpz_class> rem = a.coeffs();
  std::vector<mpz_class> quot(a.size() - db);
  const mpz_class& lc = b.leading();
  for (std::size_t i = a.size(); i-- > db;) {
    if (rem[i] == 0) {
      continue;
    }
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lc.get_mpz_t())) {
      return std::nullopt;
    }
    mpz_class& qi = quot[i - db];
    mpz_divexact(qi.get_mpz_t(), rem[i].get_mpz_t(), lc.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(rem[i - db + j].get_mpz_t(), qi.get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) {
      return std::nullopt;
    }
  }
  return IntPoly(std::move(quot));
}

namespace {

IntPoly pseudo_remainder(IntPoly r, const IntPoly& b) {
  const mpz_class& lc = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    const mpz_class lead = r.leading();
    const mpz_class g = gcd(lead, lc);
    r = r.scaled(mpz_class(lc / g)) - b.shifted_up(shift).scaled(mpz_class(lead / g));
  }
  return r;
}

IntPoly from_balanced_digits(mpz_class value, const mpz_class& base) {
  std::vector<mpz_class> digits;
  const mpz_class half = base / 2;
  while (value != 0) {
    mpz_class d;
    mpz_fdiv_r(d.get_mpz_t(), value.get_mpz_t(), base.get_mpz_t());
    if (d > half) {
      d -= base;
    }
    value -= d;
    mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), base.get_mpz_t());
    digits.push_back(std::move(d));
  }
  return IntPoly(std::move(digits));
}

constexpr double kHeuristicBitBudget = 8.0e6;

}  // namespace

IntPoly gcd_euclid(const IntPoly& a, const IntPoly& b) {
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.degree() < y.degree()) {
    std::swap(x, y);
  }
  while (!y.is_zero()) {
    IntPoly r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(x);
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) {
    return primitive_part(b);
  }
  if (b.is_zero()) {
    return primitive_part(a);
  }
  if (a.is_constant() || b.is_constant()) {
    return IntPoly::constant(1);
  }
  const IntPoly x = primitive_part(a);
  const IntPoly y = primitive_part(b);
  if (x == y) {
    return x;
  }
  if (x.degree() <= y.degree() && divide_exact(y, x).has_value()) {
    return x;
  }
  if (y.degree() < x.degree() && divide_exact(x, y).has_value()) {
    return y;
  }
  mpz_class xi = 2 * std::min(x.max_norm(), y.max_norm()) + 29;
  const auto max_deg = static_cast<double>(std::max(x.degree(), y.degree()));
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (static_cast<double>(mpz_sizeinbase(xi.get_mpz_t(), 2)) * max_deg > kHeuristicBitBudget) {
      break;
    }
    const mpz_class g = ::gcd(x.eval(xi), y.eval(xi));
    IntPoly candidate = primitive_part(from_balanced_digits(g, xi));
    if (!candidate.is_zero() && divide_exact(x, candidate) && divide_exact(y, candidate)) {
      return candidate;
    }
    xi = xi * 73794 / 27011;
  }
  return gcd_euclid(x, y);
}

}  // namespace detail
}  // namespace qsym
