#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wrapsurg/tangles.hpp"

namespace wrapsurg {

/// K^a(t1, ..., tk): a Montesinos tangle in the solid torus whose top and
/// bottom endpoints are joined by two strings running around the torus.
/// With a = 0 the strings join NW-SW and NE-SE; with a = 1 they cross once
/// and join NW-SE and NE-SW.
class WrappedKnot {
 public:
  int a() const noexcept { return a_; }
  const MontesinosTangle& tangle() const noexcept { return tangle_; }
  std::string str() const;

  friend bool operator==(const WrappedKnot&, const WrappedKnot&) = default;

 private:
  friend WrappedKnot make_wrapped(int a, MontesinosTangle T);
  WrappedKnot(int a, MontesinosTangle T) : a_(a), tangle_(std::move(T)) {}

  int a_;
  MontesinosTangle tangle_;
};

/// Throws NotAKnot when the closure has more than one component.
WrappedKnot make_wrapped(int a, MontesinosTangle T);

/// Parses `K0[...]` / `K1[...]`.
WrappedKnot parse_knot(std::string_view text);

/// Number of components of the closure of T by the a-type wrap strings.
int closure_components(int a, const MontesinosTangle& T);

/// Oriented traversal of the closure. Tangle i < k is the i-th entry; tangle
/// k is the wrap region. `enters[i][e]` is true when the traversal enters
/// tangle i at endpoint e.
struct OrientedClosure {
  int components = 0;
  std::vector<std::array<bool, 4>> enters;
};

OrientedClosure trace_closure(int a, const MontesinosTangle& T);

int winding_number(const WrappedKnot& K);
int wrapping_number(const WrappedKnot& K);

/// Image K_n of K under n right-hand full twists of the solid torus.
struct TwistedImage {
  Integer n;
  /// Montesinos knot M(t1, ..., tk, 1/(a+2n)) when a + 2n != 0.
  std::vector<Slope> montesinos_entries;
  /// a + 2n == 0: the closure collapses to a connected sum of 2-bridge
  /// knots N(-1/t_i); the fractions are listed here.
  bool degenerate_two_bridge = false;
  std::vector<Slope> two_bridge_summands;
  bool unknotted = false;
};

TwistedImage twist(const WrappedKnot& K, const Integer& n);

/// r_n = r + n * wind(K)^2; the meridian is fixed.
Slope transport_slope(const WrappedKnot& K, const Slope& r, const Integer& n);

/// 2-bridge fraction 1/((a + 2n) + q/p) of K_n for K = K^a(p/q). The a = 1
/// case extends the a = 0 formula by the extra half twist.
Slope two_bridge_fraction(const WrappedKnot& K, const Integer& n);
Slope two_bridge_fraction(int a, const Slope& t, const Integer& n);

/// Representative of T of shape [1/q1, 1/q2] (|qi| >= 2) or [m] reachable by
/// integer shifts and zero deletion, which leave slopes unchanged.
std::optional<MontesinosTangle> pretzel_representative(const MontesinosTangle& T);

/// Boundary slope of the pretzel surface: twice the signed twist count of
/// every band whose two strands run parallel.
Slope pretzel_slope(const WrappedKnot& K);

}  // namespace wrapsurg
