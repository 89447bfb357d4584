#pragma once

#include <string>
#include <vector>

#include "wrapsurg/slopes.hpp"

namespace wrapsurg {

/// Branch set M(r1, ..., rk) for the double branched cover. An entry 1/0
/// makes the link a connected sum and the cover reducible.
struct MontesinosLink {
  std::vector<Slope> entries;
  std::string str() const;
};

struct Fiber {
  Integer alpha;  // >= 2
  Integer beta;   // 0 < beta < alpha
  friend bool operator==(const Fiber&, const Fiber&) = default;
  friend bool operator<(const Fiber& x, const Fiber& y) {
    return x.alpha != y.alpha ? x.alpha < y.alpha : x.beta < y.beta;
  }
};

/// Seifert data over S^2: integer part e plus fibers with fractions in (0,1),
/// fibers kept sorted.
struct SeifertInvariants {
  Integer e;
  std::vector<Fiber> fibers;

  static SeifertInvariants from_fractions(const std::vector<Slope>& fractions);
  SeifertInvariants reversed() const;
  std::vector<Integer> indices() const;
  /// |H_1| = |prod(alpha) * (e + sum beta/alpha)|; 0 means infinite.
  Integer homology_order() const;
  std::string str() const;

  friend bool operator==(const SeifertInvariants&, const SeifertInvariants&) = default;
};

struct SFSClass {
  enum class Kind {
    SmallSeifert,  // exactly three singular fibers
    Seifert,       // four or more singular fibers
    Lens,          // at most two singular fibers, finite |H_1| > 1
    Reducible,
    S3,
  };
  Kind kind;
  SeifertInvariants invariants;  // meaningful for every kind but Reducible
  Integer lens_order = 0;        // |H_1| for Lens

  std::string str() const;
};

const char* to_string(SFSClass::Kind kind);

SFSClass classify_seifert(const SeifertInvariants& inv);

SFSClass dbc_montesinos(const MontesinosLink& L);

/// u/v surgery on the (p, q) torus knot. The surgered manifold fibers with
/// the filling core as a fiber of index |u - pqv|.
SFSClass moser(const Integer& p, const Integer& q, const Slope& r);

/// K_n(7+4n) and K_n(6+4n) for the (-2, 3, 2n+1) pretzel knot K_n.
MontesinosLink cor23(const Integer& n, int base);

/// Equality up to fiber order and orientation reversal.
bool sfs_equal(const SFSClass& x, const SFSClass& y);

}  // namespace wrapsurg
