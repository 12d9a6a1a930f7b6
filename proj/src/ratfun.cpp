#include "qsym/ratfun.hpp"

#include <cstdlib>
#include <utility>

#include "qsym/errors.hpp"

namespace qsym {

using detail::IntPoly;

namespace {

struct Parts {
  std::int64_t shift;
  IntPoly num;
  IntPoly den;
};

// Strips powers of q into the shift and, when requested, cancels the
// polynomial gcd; always removes the joint integer content and makes the
// denominator's leading coefficient positive.
void normalize(Parts& p, bool reduce) {
  if (p.num.is_zero()) {
    p = Parts{0, IntPoly{}, IntPoly::constant(1)};
    return;
  }
  if (const auto k = p.num.low_zeros(); k > 0) {
    p.num = p.num.shifted_down(k);
    p.shift += static_cast<std::int64_t>(k);
  }
  if (const auto k = p.den.low_zeros(); k > 0) {
    p.den = p.den.shifted_down(k);
    p.shift -= static_cast<std::int64_t>(k);
  }
  if (reduce && !p.den.is_constant()) {
    const IntPoly g = detail::gcd(p.num, p.den);
    if (g.degree() > 0) {
      p.num = *detail::divide_exact(p.num, g);
      p.den = *detail::divide_exact(p.den, g);
    }
  }
  mpz_class c = gcd(p.num.content(), p.den.content());
  if (sgn(p.den.leading()) < 0) {
    c = -c;
  }
  if (c != 1) {
    p.num = p.num.divided_by(c);
    p.den = p.den.divided_by(c);
  }
}

IntPoly ipow(IntPoly base, std::uint64_t e) {
  IntPoly acc = IntPoly::constant(1);
  while (e > 0) {
    if ((e & 1U) != 0) {
      acc = acc * base;
    }
    e >>= 1U;
    if (e > 0) {
      base = base * base;
    }
  }
  return acc;
}

std::string term_string(const Rational& c, std::int64_t e, bool first) {
  std::string out;
  Rational mag = c;
  if (c.sign() < 0) {
    out += "-";
    mag = -c;
  } else if (!first) {
    out += "+";
  }
  const bool unit = mag == Rational(1);
  if (e == 0) {
    out += mag.to_string();
    return out;
  }
  if (!unit) {
    out += mag.to_string() + "*";
  }
  out += "q";
  if (e != 1) {
    out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string pretty(const LaurentPoly& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    out += term_string(c, e, first);
    first = false;
  }
  return out;
}

RatFun::RatFun(std::int64_t shift, IntPoly num, IntPoly den, bool reduce) {
  if (den.is_zero()) {
    throw DivisionByZero("rational function with zero denominator");
  }
  Parts p{shift, std::move(num), std::move(den)};
  normalize(p, reduce);
  shift_ = p.shift;
  num_ = std::move(p.num);
  den_ = std::move(p.den);
  reduced_ = reduce || den_.is_constant();
}

RatFun::RatFun(const Rational& c)
    : RatFun(0, IntPoly::constant(c.numerator()), IntPoly::constant(c.denominator()), true) {}

RatFun::RatFun(long c) : RatFun(Rational(c)) {}

RatFun::RatFun(const LaurentPoly& p) : RatFun(p, LaurentPoly(1)) {}

namespace {

Parts parts_of(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) {
    throw DivisionByZero("rational function with zero denominator");
  }
  auto n = detail::to_scaled(num);
  auto d = detail::to_scaled(den);
  // (q^sn N / cn) / (q^sd D / cd) = q^(sn-sd) (N cd) / (D cn)
  return Parts{n.shift - d.shift, n.poly.scaled(d.den), d.poly.scaled(n.den)};
}

}  // namespace

RatFun::RatFun(const LaurentPoly& num, const LaurentPoly& den) {
  auto p = parts_of(num, den);
  *this = RatFun(p.shift, std::move(p.num), std::move(p.den), true);
}

RatFun RatFun::unreduced(const LaurentPoly& num, const LaurentPoly& den) {
  auto p = parts_of(num, den);
  return RatFun(p.shift, std::move(p.num), std::move(p.den), false);
}

RatFun RatFun::assume_reduced(std::int64_t shift, IntPoly num, IntPoly den) {
  RatFun r(shift, std::move(num), std::move(den), false);
  r.reduced_ = true;
  return r;
}

RatFun RatFun::q_power(std::int64_t k) { return RatFun(1).times_q_power(k); }

LaurentPoly RatFun::numerator() const { return detail::from_scaled(shift_, num_); }

LaurentPoly RatFun::denominator() const { return detail::from_scaled(0, den_); }

RatFun RatFun::canonical() const {
  if (reduced_) {
    return *this;
  }
  return RatFun(shift_, num_, den_, true);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::times_q_power(std::int64_t k) const {
  RatFun r = *this;
  if (!r.is_zero()) {
    r.shift_ += k;
  }
  return r;
}

RatFun operator+(const RatFun& x, const RatFun& y) {
  if (!x.reduced_ || !y.reduced_) {
    return x.canonical() + y.canonical();
  }
  if (x.is_zero()) {
    return y;
  }
  if (y.is_zero()) {
    return x;
  }
  const std::int64_t s = std::min(x.shift_, y.shift_);
  const IntPoly n1 = x.num_.shifted_up(static_cast<std::size_t>(x.shift_ - s));
  const IntPoly n2 = y.num_.shifted_up(static_cast<std::size_t>(y.shift_ - s));
  if (x.den_ == y.den_) {
    return RatFun(s, n1 + n2, x.den_, true);
  }
  // Henrici: for reduced inputs only g can share factors with the sum.
  const IntPoly g = detail::gcd(x.den_, y.den_);
  if (g.degree() <= 0) {
    IntPoly t = n1 * y.den_ + n2 * x.den_;
    return RatFun::assume_reduced(s, std::move(t), x.den_ * y.den_);
  }
  const IntPoly dx = *detail::divide_exact(x.den_, g);
  const IntPoly dy = *detail::divide_exact(y.den_, g);
  IntPoly t = n1 * dy + n2 * dx;
  IntPoly den = x.den_ * dy;
  if (!t.is_zero()) {
    const IntPoly g2 = detail::gcd(t, g);
    if (g2.degree() > 0) {
      t = *detail::divide_exact(t, g2);
      den = *detail::divide_exact(den, g2);
    }
  }
  return RatFun::assume_reduced(s, std::move(t), std::move(den));
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& x, const RatFun& y) {
  if (!x.reduced_ || !y.reduced_) {
    return x.canonical() * y.canonical();
  }
  if (x.is_zero() || y.is_zero()) {
    return RatFun();
  }
  const IntPoly g1 = detail::gcd(x.num_, y.den_);
  const IntPoly g2 = detail::gcd(y.num_, x.den_);
  const auto cut = [](const IntPoly& p, const IntPoly& g) {
    return g.degree() > 0 ? *detail::divide_exact(p, g) : p;
  };
  return RatFun::assume_reduced(x.shift_ + y.shift_, cut(x.num_, g1) * cut(y.num_, g2),
                        cut(x.den_, g2) * cut(y.den_, g1));
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun RatFun::inverse() const {
  if (is_zero()) {
    throw DivisionByZero("inverse of the zero rational function");
  }
  return reduced_ ? assume_reduced(-shift_, den_, num_) : RatFun(-shift_, den_, num_, false);
}

RatFun RatFun::pow(std::int64_t exponent) const {
  if (exponent < 0) {
    return inverse().pow(-exponent);
  }
  if (exponent == 0) {
    return RatFun(1);
  }
  if (!reduced_) {
    return canonical().pow(exponent);
  }
  if (is_zero()) {
    return RatFun();
  }
  const auto e = static_cast<std::uint64_t>(exponent);
  RatFun r = *this;
  r.shift_ = shift_ * exponent;
  r.num_ = ipow(num_, e);
  r.den_ = ipow(den_, e);
  return r;
}

bool operator==(const RatFun& a, const RatFun& b) {
  if (a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_) {
    return true;
  }
  // Both constant terms of N*D' are nonzero, so the shifts must agree.
  if (a.is_zero() || b.is_zero()) {
    return a.is_zero() && b.is_zero();
  }
  return a.shift_ == b.shift_ && a.num_ * b.den_ == b.num_ * a.den_;
}

Rational RatFun::eval(const Rational& q0) const {
  if (!reduced_) {
    return canonical().eval(q0);
  }
  if (is_zero()) {
    return {};
  }
  const Rational d(den_.eval(q0.raw()));
  if (d.is_zero()) {
    throw PoleError("rational function has a pole at q = " + q0.to_string());
  }
  if (q0.is_zero() && shift_ < 0) {
    throw PoleError("rational function has a pole at q = 0");
  }
  Rational v(num_.eval(q0.raw()));
  v *= q0.pow(shift_);
  return v / d;
}

Rational RatFun::limit_at_one() const { return eval(Rational(1)); }

std::string RatFun::pretty() const {
  const LaurentPoly n = numerator();
  const std::string ns = qsym::pretty(n);
  if (den_.is_constant() && den_[0] == 1) {
    return ns;
  }
  const LaurentPoly d = denominator();
  const auto wrap = [](const LaurentPoly& p, const std::string& s) {
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(n, ns) + "/" + wrap(d, qsym::pretty(d));
}

}  // namespace qsym
