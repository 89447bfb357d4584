#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace wrapsurg {

using Integer = mpz_class;

enum class ErrorCode {
  ZeroZero,
  InfinityInput,
  NotAKnot,
  NotLengthOne,
  NoPretzelSurface,
  NotATorusKnot,
  InconsistentCrossCheck,
  Parse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Floor of a / b for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
/// a mod b in [0, |b|).
Integer floor_mod(const Integer& a, const Integer& b);

/// An extended rational p/q, the slope of a curve on a torus in a fixed
/// meridian-longitude basis. Always stored reduced with q >= 0; the meridian
/// is the unique value with q == 0 and is stored as 1/0.
class Slope {
 public:
  Slope() : p_(0), q_(1) {}
  Slope(Integer p, Integer q);
  Slope(long p)  // NOLINT(google-explicit-constructor)
      : p_(p), q_(1) {}

  static Slope meridian() { return Slope(1, 0); }

  const Integer& p() const noexcept { return p_; }
  const Integer& q() const noexcept { return q_; }

  bool is_meridian() const noexcept { return q_ == 0; }
  bool is_zero() const noexcept { return p_ == 0; }
  bool is_finite() const noexcept { return q_ != 0; }

  /// Integer part, rounding toward negative infinity. Finite slopes only.
  Integer floor() const;
  /// this - floor(this), in [0, 1).
  Slope frac() const;

  Slope operator-() const;
  Slope reciprocal() const;

  friend Slope operator+(const Slope& a, const Slope& b);
  friend Slope operator-(const Slope& a, const Slope& b) { return a + (-b); }
  friend Slope operator*(const Slope& a, const Slope& b);
  friend Slope operator/(const Slope& a, const Slope& b) {
    return a * b.reciprocal();
  }
  Slope& operator+=(const Slope& o) { return *this = *this + o; }

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  /// Finite slopes by value; the meridian sorts after every finite slope.
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

  std::string str() const;

 private:
  Integer p_;
  Integer q_;
};

Slope make_slope(const Integer& p, const Integer& q);

/// Geometric intersection number |p_r q_s - p_s q_r|.
Integer distance(const Slope& r, const Slope& s);

bool is_integral(const Slope& r);
bool is_half_integral(const Slope& r);

/// a0 + 1/(a1 + 1/(a2 + ...)). A zero partial denominator yields the
/// meridian at that level, so e.g. {0, 0} evaluates to 1/0.
Slope evaluate_continued_fraction(std::span<const Integer> terms);

/// Euclidean expansion: a0 = floor, every later term >= 1 and the last
/// term >= 2 when there is more than one. Throws InfinityInput on 1/0.
std::vector<Integer> expand(const Slope& t);

/// Accepts `p/q`, `p`, or `inf`; sign only on the numerator.
Slope parse_slope(std::string_view text);

}  // namespace wrapsurg
