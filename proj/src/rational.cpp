#include "qsym/rational.hpp"

#include <utility>

#include "qsym/errors.hpp"

namespace qsym {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw DivisionByZero("rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto parse_int = [&](std::string_view part) {
    if (part.empty()) {
      throw DomainError("malformed rational: '" + std::string(text) + "'");
    }
    std::string_view digits = part;
    if (digits.front() == '-' || digits.front() == '+') {
      digits.remove_prefix(1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
      throw DomainError("malformed rational: '" + std::string(text) + "'");
    }
    std::string s(part.front() == '+' ? part.substr(1) : part);
    return mpz_class(s, 10);
  };
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text));
  }
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw DivisionByZero("division of a rational by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::pow(std::int64_t exponent) const {
  if (exponent < 0) {
    if (is_zero()) {
      throw DivisionByZero("negative power of zero");
    }
    return Rational(1) / pow(-exponent);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) {
    return numerator().get_str();
  }
  return numerator().get_str() + "/" + denominator().get_str();
}

}  // namespace qsym
