#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wrapsurg/seifert.hpp"
#include "wrapsurg/wrapped.hpp"

namespace wrapsurg {

struct ToroidalCertificate {
  enum class Source {
    PretzelSurface,    // closed-up once-punctured torus or Klein bottle
    WhiteheadSlope,    // r in {0, 4} on the Whitehead knot
    Case4SeifertPiece, // r = 6: torus bounding a Seifert piece with fibers {2,4}
    Case4KleinBottle,  // r = 8: torus bounding a twisted I-bundle over the Klein bottle
  };
  Source source;
  Slope slope;                        // in the input knot's coordinates
  std::vector<Integer> piece_indices; // Case4SeifertPiece only
  std::string description() const;
};

const char* to_string(ToroidalCertificate::Source s);

struct SurgeryClassification {
  enum class Kind {
    TrivialFilling,
    NonHyperbolicKnot,
    Hyperbolic,
    Toroidal,
    SmallSeifert,
    Reducible,
  };
  Kind kind = Kind::Hyperbolic;
  std::optional<ToroidalCertificate> toroidal;
  /// Two singular fiber indices for SmallSeifert; empty when the indices are
  /// not determined (Whitehead slopes 1, 2, 3).
  std::vector<Integer> seifert_indices;
  /// Which exceptional family matched (1-4), 0 for none.
  int family = 0;
  std::vector<std::string> notes;

  /// Same verdict, family, certificate source and fiber indices.
  bool same_verdict(const SurgeryClassification& o) const;
};

const char* to_string(SurgeryClassification::Kind k);

/// The knot's equivalence-class representative with the slope map into it.
struct CanonicalKnot {
  WrappedKnot knot;
  Canonical canonical;
  SlopeMap map;
  int wind;
};

CanonicalKnot canonical_knot(const WrappedKnot& K);

/// Case numbers that match the representative, tested independently of the
/// precedence order used by classify().
std::vector<int> matching_families(const WrappedKnot& K);

SurgeryClassification classify(const WrappedKnot& K, const Slope& r);

std::vector<std::pair<Slope, SurgeryClassification>> exceptional_slopes(const WrappedKnot& K);

struct FamilyPrediction {
  enum class Kind {
    ToroidalCofinite,        // toroidal for all n with |n - n0| > 1
    SeifertOrReducibleAll,   // every K_n(r_n) reducible or Seifert with q1, q2
    HyperbolicInterior,      // K_n(r_n) hyperbolic for all but finitely many n
    NotApplicable,           // trivial filling or non-hyperbolic knot
  };
  Kind kind;
  std::optional<Integer> n0;
  std::vector<Integer> indices;  // q1, q2 when known
  std::string str() const;
};

const char* to_string(FamilyPrediction::Kind k);

FamilyPrediction predict_s3_family(const WrappedKnot& K, const Slope& r);

/// K_n(r_n) for the knots where it is known in closed form; nullopt when
/// unknown.
std::optional<SFSClass> surgery_in_s3(const WrappedKnot& K, const Slope& r, const Integer& n);

}  // namespace wrapsurg
