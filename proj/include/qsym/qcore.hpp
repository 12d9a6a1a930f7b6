#pragma once

#include <cstdint>

#include "qsym/ratfun.hpp"

namespace qsym {

/// Exponent w of a bracket base q^w; always >= 1.
class BaseExp {
 public:
  /// Throws DomainError for w < 1.
  explicit BaseExp(std::int64_t w);
  std::int64_t value() const { return w_; }
  friend bool operator==(BaseExp a, BaseExp b) { return a.w_ == b.w_; }

 private:
  std::int64_t w_;
};

/// [m]_{q^w} = (1 - q^{wm}) / (1 - q^w). A polynomial for m >= 0 and
/// -q^{wm} [-m]_{q^w} for m < 0.
RatFun q_bracket(std::int64_t m, BaseExp w = BaseExp(1));

/// [1]_{q^w} [2]_{q^w} ... [r]_{q^w}; 1 for r = 0.
RatFun q_factorial(std::int64_t r, BaseExp w = BaseExp(1));

/// [m]_{q^w} [m-1]_{q^w} ... [m-r+1]_{q^w} / [r]_{q^w}!
RatFun q_binomial(std::int64_t m, std::int64_t r, BaseExp w = BaseExp(1));

}  // namespace qsym
