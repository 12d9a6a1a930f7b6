#include "qsym/laurent_poly.hpp"

#include <algorithm>
#include <string>

#include "qsym/errors.hpp"

namespace qsym {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (!c.is_zero()) {
    terms_.emplace_back(0, c);
  }
}

LaurentPoly LaurentPoly::monomial(const Rational& c, std::int64_t e) {
  LaurentPoly p;
  if (!c.is_zero()) {
    p.terms_.emplace_back(e, c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) {
        p.terms_.pop_back();
      }
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.is_zero()) {
    check_exponent_span(p.max_exponent() - p.min_exponent());
  }
  return p;
}

Rational LaurentPoly::coefficient(std::int64_t e) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, std::int64_t x) { return t.first < x; });
  return it != terms_.end() && it->first == e ? it->second : Rational();
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) {
    t.first += k;
  }
  return p;
}

LaurentPoly LaurentPoly::substituted(std::int64_t w) const {
  if (w < 1) {
    throw DomainError("substitution q -> q^w needs w >= 1");
  }
  LaurentPoly p = *this;
  for (auto& t : p.terms_) {
    t.first *= w;
  }
  if (!p.is_zero()) {
    check_exponent_span(p.max_exponent() - p.min_exponent());
  }
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) {
    t.second = -t.second;
  }
  return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      r.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      r.terms_.push_back(*j++);
    } else {
      Rational c = i->second + j->second;
      if (!c.is_zero()) {
        r.terms_.emplace_back(i->first, std::move(c));
      }
      ++i;
      ++j;
    }
  }
  if (!r.is_zero()) {
    check_exponent_span(r.max_exponent() - r.min_exponent());
  }
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  const auto x = detail::to_scaled(a);
  const auto y = detail::to_scaled(b);
  return detail::from_scaled(x.shift + y.shift, x.poly * y.poly, x.den * y.den);
}

Rational LaurentPoly::eval(const Rational& q0) const {
  if (is_zero()) {
    return {};
  }
  if (q0.is_zero()) {
    if (min_exponent() < 0) {
      throw PoleError("Laurent polynomial with negative exponents evaluated at q = 0");
    }
    return coefficient(0);
  }
  const auto s = detail::to_scaled(*this);
  Rational v(s.poly.eval(q0.raw()));
  v *= q0.pow(s.shift);
  return v / Rational(s.den);
}

namespace detail {

ScaledPoly to_scaled(const LaurentPoly& p) {
  ScaledPoly out;
  if (p.is_zero()) {
    return out;
  }
  mpz_class den = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
  }
  out.shift = p.min_exponent();
  const auto span = static_cast<std::size_t>(p.max_exponent() - p.min_exponent());
  std::vector<mpz_class> coeffs(span + 1);
  for (const auto& [e, c] : p.terms()) {
    auto& slot = coeffs[static_cast<std::size_t>(e - out.shift)];
    if (den == 1) {
      slot = c.numerator();
    } else {
      mpz_divexact(slot.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
      slot *= c.numerator();
    }
  }
  out.poly = IntPoly(std::move(coeffs));
  out.den = den;
  return out;
}

LaurentPoly from_scaled(std::int64_t shift, const IntPoly& poly, const mpz_class& den) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly[i] != 0) {
      terms.emplace_back(shift + static_cast<std::int64_t>(i),
                         den == 1 ? Rational(poly[i]) : Rational(poly[i], den));
    }
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace detail
}  // namespace qsym
