#include "wrapsurg/slopes.hpp"

#include <cctype>

namespace wrapsurg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroZero: return "ZeroZero";
    case ErrorCode::InfinityInput: return "InfinityInput";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::NotLengthOne: return "NotLengthOne";
    case ErrorCode::NoPretzelSurface: return "NoPretzelSurface";
    case ErrorCode::NotATorusKnot: return "NotATorusKnot";
    case ErrorCode::InconsistentCrossCheck: return "InconsistentCrossCheck";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer floor_mod(const Integer& a, const Integer& b) {
  Integer out;
  mpz_mod(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Slope::Slope(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) {
    throw Error(ErrorCode::ZeroZero, "slope 0/0 is undefined");
  }
  if (q_ == 0) {
    p_ = 1;
    return;
  }
  if (q_ < 0) {
    p_ = -p_;
    q_ = -q_;
  }
  Integer g = gcd(p_, q_);
  if (g != 1) {
    p_ /= g;
    q_ /= g;
  }
}

Slope make_slope(const Integer& p, const Integer& q) { return Slope(p, q); }

Integer Slope::floor() const {
  if (is_meridian()) {
    throw Error(ErrorCode::InfinityInput, "floor of 1/0");
  }
  return floor_div(p_, q_);
}

Slope Slope::frac() const {
  if (is_meridian()) {
    throw Error(ErrorCode::InfinityInput, "fractional part of 1/0");
  }
  return Slope(floor_mod(p_, q_), q_);
}

Slope Slope::operator-() const {
  if (is_meridian()) return *this;
  return Slope(-p_, q_);
}

Slope Slope::reciprocal() const { return Slope(q_, p_); }

Slope operator+(const Slope& a, const Slope& b) {
  if (a.is_meridian() || b.is_meridian()) return Slope::meridian();
  return Slope(a.p_ * b.q_ + b.p_ * a.q_, a.q_ * b.q_);
}

Slope operator*(const Slope& a, const Slope& b) {
  if (a.is_meridian() || b.is_meridian()) {
    if (a.is_zero() || b.is_zero()) {
      throw Error(ErrorCode::ZeroZero, "0 * 1/0 is undefined");
    }
    return Slope::meridian();
  }
  return Slope(a.p_ * b.p_, a.q_ * b.q_);
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  if (a.is_meridian() || b.is_meridian()) {
    return a.is_meridian() <=> b.is_meridian();
  }
  int c = cmp(a.p_ * b.q_, b.p_ * a.q_);
  return c <=> 0;
}

std::string Slope::str() const {
  if (is_meridian()) return "inf";
  if (q_ == 1) return p_.get_str();
  return p_.get_str() + "/" + q_.get_str();
}

Integer distance(const Slope& r, const Slope& s) {
  Integer d = r.p() * s.q() - s.p() * r.q();
  return abs(d);
}

bool is_integral(const Slope& r) { return r.q() == 1; }
bool is_half_integral(const Slope& r) { return r.q() == 2; }

Slope evaluate_continued_fraction(std::span<const Integer> terms) {
  if (terms.empty()) {
    throw Error(ErrorCode::Parse, "empty continued fraction");
  }
  // Fold from the innermost term outward; 1/0 propagates as infinity.
  Slope value = Slope(terms.back(), 1);
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    value = Slope(*it, 1) + value.reciprocal();
  }
  return value;
}

std::vector<Integer> expand(const Slope& t) {
  if (t.is_meridian()) {
    throw Error(ErrorCode::InfinityInput, "cannot expand 1/0");
  }
  std::vector<Integer> terms;
  Integer p = t.p();
  Integer q = t.q();
  while (q != 0) {
    Integer a = floor_div(p, q);
    terms.push_back(a);
    Integer rem = p - a * q;
    p = q;
    q = rem;
  }
  return terms;
}

namespace {

bool parse_integer(std::string_view s, bool allow_sign, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  std::string digits(s);
  if (digits[0] == '+') digits.erase(0, 1);
  out = Integer(digits, 10);
  return true;
}

}  // namespace

Slope parse_slope(std::string_view text) {
  if (text == "inf") return Slope::meridian();
  auto slash = text.find('/');
  Integer p;
  Integer q = 1;
  bool ok;
  if (slash == std::string_view::npos) {
    ok = parse_integer(text, true, p);
  } else {
    ok = parse_integer(text.substr(0, slash), true, p) &&
         parse_integer(text.substr(slash + 1), false, q);
  }
  if (!ok) {
    throw Error(ErrorCode::Parse, "malformed slope '" + std::string(text) + "'");
  }
  if (p == 0 && q == 0) {
    throw Error(ErrorCode::ZeroZero, "slope 0/0 is undefined");
  }
  return Slope(p, q);
}

}  // namespace wrapsurg
