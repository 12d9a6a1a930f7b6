#include <random>

#include "doctest.h"
#include "qsym/detail/int_poly.hpp"
#include "qsym/errors.hpp"
#include "qsym/laurent_poly.hpp"
#include "qsym/ratfun.hpp"
#include "qsym/rational.hpp"
#include "test_support.hpp"

using qsym::LaurentPoly;
using qsym::Rational;
using qsym::RatFun;

namespace {

LaurentPoly q(std::int64_t e = 1) { return LaurentPoly::monomial(Rational(1), e); }

}  // namespace

TEST_CASE("rational normal form") {
  const Rational a(mpz_class(6), mpz_class(-4));
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(Rational(mpz_class(0), mpz_class(7)).denominator() == 1);
  CHECK(Rational::parse("-10/4") == Rational(mpz_class(-5), mpz_class(2)));
  CHECK(Rational::parse("12").to_string() == "12");
  CHECK_THROWS_AS(Rational::parse("1/0"), qsym::DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("x/2"), qsym::DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), qsym::DivisionByZero);
  CHECK(Rational(mpz_class(2), mpz_class(3)).pow(-2) == Rational(mpz_class(9), mpz_class(4)));
}

TEST_CASE("laurent polynomial invariants") {
  const LaurentPoly p = LaurentPoly::from_terms({{3, Rational(2)}, {-1, Rational(1)}, {3, Rational(-2)}});
  REQUIRE(p.terms().size() == 1);
  CHECK(p.min_exponent() == -1);
  CHECK((p - p).is_zero());
  CHECK((q() + 1) * (q() - 1) == q(2) - 1);
  CHECK(q(-1).eval(Rational(2)) == Rational(mpz_class(1), mpz_class(2)));
  CHECK_THROWS_AS(q(-1).eval(Rational(0)), qsym::PoleError);
  CHECK((q() + 1).substituted(3) == q(3) + 1);
}

TEST_CASE("ring_ops examples") {
  CHECK((RatFun(q() + 1) + RatFun(-q() - 1)).is_zero());
  const RatFun one_minus_q(LaurentPoly(1) - q());
  CHECK(one_minus_q.inverse() * one_minus_q == RatFun(1));
  CHECK((one_minus_q.inverse() * one_minus_q).numerator() == LaurentPoly(1));

  const RatFun r = RatFun::unreduced(LaurentPoly(1) - q(2), LaurentPoly(1) - q()) + RatFun(0);
  CHECK(r.is_canonical());
  CHECK(r.numerator() == q() + 1);
  CHECK(r.denominator() == LaurentPoly(1));

  CHECK_THROWS_AS(RatFun(0).pow(-1), qsym::DivisionByZero);
  CHECK_THROWS_AS(RatFun(1) / RatFun(0), qsym::DivisionByZero);
  CHECK(RatFun(0).pow(0) == RatFun(1));
}

TEST_CASE("ratfun_eq examples") {
  const RatFun a = RatFun::unreduced(LaurentPoly(1) - q(2), LaurentPoly(1) - q());
  CHECK_FALSE(a.is_canonical());
  CHECK(qsym::ratfun_eq(a, RatFun(q() + 1)));
  CHECK_FALSE(qsym::ratfun_eq(RatFun(LaurentPoly(1), LaurentPoly(1) - q()),
                              RatFun(LaurentPoly(1), LaurentPoly(1) - q(2))));
  CHECK(RatFun(0) == RatFun::unreduced(LaurentPoly(0), q() + 3));
}

TEST_CASE("canonical form layout") {
  // (2q^-1 + 2) / (4q^2 + 4q) = 1/(2 q^2), with q^-2 pushed into num
  const RatFun f(LaurentPoly(2) + 2 * q(-1), 4 * q(2) + 4 * q());
  CHECK(f.denominator() == LaurentPoly(2));
  CHECK(f.numerator() == q(-2));
  // rational coefficients cleared jointly, leading den coefficient positive
  const RatFun g(LaurentPoly(Rational(mpz_class(1), mpz_class(2))), -q() - 1);
  CHECK(g.numerator() == LaurentPoly(-1));
  CHECK(g.denominator() == 2 * q() + 2);
}

TEST_CASE("eval_rational and limit_at_one") {
  CHECK(RatFun(q() + 1).eval(Rational(6)) == Rational(7));
  const RatFun pole(LaurentPoly(1), LaurentPoly(1) - q());
  CHECK_THROWS_AS(pole.eval(Rational(1)), qsym::PoleError);
  CHECK_THROWS_WITH(pole.eval(Rational(1)), doctest::Contains("q = 1"));
  CHECK(RatFun::unreduced(LaurentPoly(1) - q(2), LaurentPoly(1) - q()).limit_at_one() == Rational(2));
  CHECK_THROWS_AS(pole.limit_at_one(), qsym::PoleError);
  // -1/(1+q): the n = 1 Carlitz number written out by hand
  const RatFun beta1(LaurentPoly(-1), q() + 1);
  CHECK(beta1.eval(Rational(6)) == Rational(mpz_class(-1), mpz_class(7)));
  CHECK(beta1.limit_at_one() == Rational(mpz_class(-1), mpz_class(2)));
}

TEST_CASE("pretty printing") {
  CHECK(RatFun(LaurentPoly(-1), q() + 1).pretty() == "-1/(1+q)");
  CHECK(RatFun(1).pretty() == "1");
  CHECK(RatFun(Rational(mpz_class(1), mpz_class(6))).pretty() == "1/6");
  CHECK(RatFun(-q(-1)).pretty() == "-q^-1");
  CHECK(RatFun(LaurentPoly(1) - q() + 2 * q(3)).pretty() == "1-q+2*q^3");
  CHECK(RatFun(q(2) + q(), LaurentPoly(1) - q(3)).pretty() == "(-q-q^2)/(-1+q^3)");
}

TEST_CASE("exponent span guard") {
  CHECK_THROWS_AS(q(qsym::kMaxExponentSpan + 1) + q(0), qsym::ResourceError);
  const RatFun big(q(60000) + 1);
  CHECK_THROWS_AS(big * big, qsym::ResourceError);
}

TEST_CASE("heuristic gcd agrees with the remainder-sequence gcd") {
  auto gen = qsym_test::rng(11);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> deg(0, 9);
  const auto random_poly = [&] {
    std::vector<mpz_class> c(static_cast<std::size_t>(deg(gen) + 1));
    for (auto& x : c) {
      x = coeff(gen);
    }
    return qsym::detail::IntPoly(std::move(c));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto common = random_poly();
    const auto a = random_poly() * common;
    const auto b = random_poly() * common;
    const auto g = qsym::detail::gcd(a, b);
    CHECK(g == qsym::detail::gcd_euclid(a, b));
    if (!g.is_zero()) {
      CHECK(qsym::detail::divide_exact(a, g).has_value());
      CHECK(qsym::detail::divide_exact(b, g).has_value());
    }
  }
}

TEST_CASE("Kronecker and schoolbook products agree") {
  auto gen = qsym_test::rng(12);
  std::uniform_int_distribution<long> coeff(-1000000, 1000000);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<mpz_class> a(40 + static_cast<std::size_t>(trial));
    std::vector<mpz_class> b(30);
    for (auto& x : a) x = coeff(gen);
    for (auto& x : b) x = coeff(gen);
    a.back() = 1;
    b.back() = -1;
    const auto prod = qsym::detail::IntPoly(a) * qsym::detail::IntPoly(b);
    std::vector<mpz_class> naive(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) naive[i + j] += a[i] * b[j];
    CHECK(prod == qsym::detail::IntPoly(naive));
  }
}

TEST_CASE("ring axioms on random rational functions") {
  auto gen = qsym_test::rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const RatFun a = qsym_test::random_ratfun(gen);
    const RatFun b = qsym_test::random_ratfun(gen);
    const RatFun c = qsym_test::random_ratfun(gen);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RatFun(0));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == RatFun(1));
      CHECK(a.pow(-2) * a.pow(3) == a);
    }
  }
}

TEST_CASE("ratfun_eq is an equivalence and canonicalization is idempotent") {
  auto gen = qsym_test::rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    const RatFun a = qsym_test::random_ratfun(gen);
    const RatFun a2 = RatFun::unreduced(a.numerator() * (q() + 2), a.denominator() * (q() + 2));
    const RatFun a3 = a.canonical();
    CHECK(a == a);
    CHECK(a == a2);
    CHECK(a2 == a);
    CHECK(a2 == a3);
    CHECK(a == a3);
    CHECK(a3.canonical().numerator() == a3.numerator());
    CHECK(a3.canonical().denominator() == a3.denominator());
    CHECK(a3.is_canonical());
    const RatFun b = qsym_test::random_ratfun(gen);
    if (a == b) {
      CHECK(a.canonical().numerator() == b.canonical().numerator());
    }
  }
}

TEST_CASE("evaluation is a ring homomorphism off the poles") {
  auto gen = qsym_test::rng(15);
  const Rational points[] = {Rational(2), Rational(-3), Rational(mpz_class(5), mpz_class(7))};
  for (int trial = 0; trial < 60; ++trial) {
    const RatFun a = qsym_test::random_ratfun(gen);
    const RatFun b = qsym_test::random_ratfun(gen);
    for (const auto& x : points) {
      try {
        const Rational ea = a.eval(x);
        const Rational eb = b.eval(x);
        CHECK((a + b).eval(x) == ea + eb);
        CHECK((a * b).eval(x) == ea * eb);
        CHECK((a - b).eval(x) == ea - eb);
      } catch (const qsym::PoleError&) {
        // x is a pole of a or b
      }
    }
  }
}
