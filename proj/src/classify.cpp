#include "wrapsurg/classify.hpp"

#include <algorithm>

namespace wrapsurg {

std::string ToroidalCertificate::description() const {
  switch (source) {
    case Source::PretzelSurface:
      return "pretzel surface closes up to a Klein bottle or nonseparating torus at slope " +
             slope.str();
    case Source::WhiteheadSlope:
      return "Whitehead knot toroidal slope " + slope.str();
    case Source::Case4SeifertPiece:
      return "essential torus bounding a Seifert piece with singular fibers of indices 2 and 4";
    case Source::Case4KleinBottle:
      return "essential torus bounding a twisted I-bundle over the Klein bottle";
  }
  return "";
}

const char* to_string(ToroidalCertificate::Source s) {
  switch (s) {
    case ToroidalCertificate::Source::PretzelSurface: return "PretzelSurface";
    case ToroidalCertificate::Source::WhiteheadSlope: return "WhiteheadSlope";
    case ToroidalCertificate::Source::Case4SeifertPiece: return "Case4SeifertPiece";
    case ToroidalCertificate::Source::Case4KleinBottle: return "Case4KleinBottle";
  }
  return "?";
}

const char* to_string(SurgeryClassification::Kind k) {
  switch (k) {
    case SurgeryClassification::Kind::TrivialFilling: return "TrivialFilling";
    case SurgeryClassification::Kind::NonHyperbolicKnot: return "NonHyperbolicKnot";
    case SurgeryClassification::Kind::Hyperbolic: return "Hyperbolic";
    case SurgeryClassification::Kind::Toroidal: return "Toroidal";
    case SurgeryClassification::Kind::SmallSeifert: return "SmallSeifert";
    case SurgeryClassification::Kind::Reducible: return "Reducible";
  }
  return "?";
}

bool SurgeryClassification::same_verdict(const SurgeryClassification& o) const {
  if (kind != o.kind || family != o.family || seifert_indices != o.seifert_indices) {
    return false;
  }
  if (toroidal.has_value() != o.toroidal.has_value()) return false;
  if (toroidal && (toroidal->source != o.toroidal->source ||
                   toroidal->piece_indices != o.toroidal->piece_indices)) {
    return false;
  }
  return true;
}

const char* to_string(FamilyPrediction::Kind k) {
  switch (k) {
    case FamilyPrediction::Kind::ToroidalCofinite: return "ToroidalCofinite";
    case FamilyPrediction::Kind::SeifertOrReducibleAll: return "SeifertOrReducibleAll";
    case FamilyPrediction::Kind::HyperbolicInterior: return "HyperbolicInterior";
    case FamilyPrediction::Kind::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::string FamilyPrediction::str() const {
  std::string out = to_string(kind);
  if (kind == Kind::ToroidalCofinite) {
    out += n0 ? "(n0=" + n0->get_str() + ")" : "(n0 unknown, at most 3 exceptions)";
  }
  if (kind == Kind::SeifertOrReducibleAll) {
    if (indices.empty()) {
      out += "(indices unspecified)";
    } else {
      out += "(" + indices[0].get_str() + "," + indices[1].get_str() + ")";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

const WrappedKnot& case4_reference() {
  static const WrappedKnot k = make_wrapped(1, MontesinosTangle({Slope(-1, 2), Slope(1, 3)}));
  return k;
}

const CanonicalKnot& case4_canonical() {
  static const CanonicalKnot c = canonical_knot(case4_reference());
  return c;
}

bool is_case4(const CanonicalKnot& c) {
  const auto& ref = case4_canonical();
  return c.knot.a() == ref.knot.a() &&
         c.canonical.representative == ref.canonical.representative;
}

bool is_case1(const CanonicalKnot& c) {
  const auto& rep = c.canonical.representative;
  return c.knot.a() == 0 && rep.size() == 1 && rep.entries()[0] == Slope(2);
}

bool is_case2(const CanonicalKnot& c) {
  const auto& rep = c.canonical.representative;
  if (c.canonical.degenerate || rep.size() != 1) return false;
  const Slope& t = rep.entries()[0];
  return is_integral(t) && t > Slope(2);
}

bool is_case3(const CanonicalKnot& c) {
  const auto& rep = c.canonical.representative;
  if (rep.size() != 2) return false;
  auto pretzel = pretzel_representative(rep);
  if (!pretzel || pretzel->size() != 2) return false;
  Integer q1 = pretzel->entries()[0].p() * pretzel->entries()[0].q();
  Integer q2 = pretzel->entries()[1].p() * pretzel->entries()[1].q();
  // {q1, q2} = {-2, 3} or {2, -3} is the excluded knot.
  bool excluded = (q1 * q2 == -6) && (abs(q1) == 2 || abs(q2) == 2);
  return !excluded;
}

struct Exceptional {
  Slope slope;  // canonical coordinates
  SurgeryClassification verdict;
};

SurgeryClassification toroidal(ToroidalCertificate::Source src, const Slope& s, int family) {
  SurgeryClassification c;
  c.kind = SurgeryClassification::Kind::Toroidal;
  c.toroidal = ToroidalCertificate{src, s, {}};
  c.family = family;
  return c;
}

SurgeryClassification small_seifert(std::vector<Integer> indices, int family) {
  SurgeryClassification c;
  c.kind = SurgeryClassification::Kind::SmallSeifert;
  c.seifert_indices = std::move(indices);
  c.family = family;
  return c;
}

// Exceptional set of the representative, in canonical coordinates. Slopes in
// certificates are canonical here and rewritten by the caller.
std::vector<Exceptional> canonical_exceptional(const CanonicalKnot& c, int family) {
  using Src = ToroidalCertificate::Source;
  std::vector<Exceptional> out;
  switch (family) {
    case 1:
      for (int r = 0; r <= 4; ++r) {
        if (r == 0 || r == 4) {
          out.push_back({Slope(r), toroidal(Src::WhiteheadSlope, Slope(r), 1)});
        } else {
          out.push_back({Slope(r), small_seifert({}, 1)});
        }
      }
      break;
    case 2:
    case 3: {
      WrappedKnot rep = make_wrapped(c.knot.a(), c.canonical.representative);
      Slope s = pretzel_slope(rep);
      out.push_back({s, toroidal(Src::PretzelSurface, s, family)});
      break;
    }
    case 4: {
      const auto& ref = case4_canonical();
      auto at = [&](int r) { return ref.map(Slope(r), ref.wind); };
      auto six = toroidal(Src::Case4SeifertPiece, at(6), 4);
      six.toroidal->piece_indices = {2, 4};
      out.push_back({at(6), six});
      out.push_back({at(7), small_seifert({3, 5}, 4)});
      out.push_back({at(8), toroidal(Src::Case4KleinBottle, at(8), 4)});
      break;
    }
    default: break;
  }
  return out;
}

// K_n(r + n w^2) is K_ref,m(r_ref + m w^2) up to mirroring, with the S^3
// slopes related by the overall sign s. Solves for m.
Integer reference_index(const CanonicalKnot& c, const Slope& r, const Slope& r_ref,
                        const Integer& n) {
  const auto& ref = case4_canonical();
  int s = c.map.sign * ref.map.sign;
  Integer w2 = c.wind * c.wind;
  Slope m = (Slope(s) * (r + Slope(n * w2, 1)) - r_ref) / Slope(w2, 1);
  return m.p();
}

Integer knot_index(const CanonicalKnot& c, const Slope& r, const Slope& r_ref,
                   const Integer& m) {
  const auto& ref = case4_canonical();
  int s = c.map.sign * ref.map.sign;
  Integer w2 = c.wind * c.wind;
  Slope n = (Slope(s) * (r_ref + Slope(m * w2, 1)) - r) / Slope(w2, 1);
  return n.p();
}

Slope reference_slope(const CanonicalKnot& c, const Slope& r) {
  const auto& ref = case4_canonical();
  return ref.map.inverse(c.map(r, c.wind), ref.wind);
}

int family_of(const CanonicalKnot& c) {
  if (c.canonical.degenerate) return -1;
  if (is_case4(c)) return 4;
  if (is_case1(c)) return 1;
  if (is_case2(c)) return 2;
  if (is_case3(c)) return 3;
  return 0;
}

void add_notes(const CanonicalKnot& c, int family, SurgeryClassification& out) {
  const auto& rep = c.canonical.representative;
  if (c.knot.a() == 1 && rep.size() == 1 && rep.entries()[0] == Slope(2)) {
    out.notes.push_back(
        "K1[2]: equivalence with the Whitehead knot K0[2] is not reachable by the "
        "listed moves; classified as a knot of its own");
  }
  if (family == 2) {
    WrappedKnot k = make_wrapped(c.knot.a(), rep);
    Slope expected = c.knot.a() == 0 ? Slope(0) : Slope(2) * rep.entries()[0];
    if (pretzel_slope(k) != expected) {
      out.notes.push_back("traced pretzel slope " + pretzel_slope(k).str() +
                          " disagrees with expected " + expected.str() +
                          " (wind " + std::to_string(c.wind) + ")");
    }
  }
}

}  // namespace

CanonicalKnot canonical_knot(const WrappedKnot& K) {
  Canonical c = canonicalize(K.tangle());
  int wind = winding_number(K);
  SlopeMap map = slope_map(c.moves, K.a());
  return CanonicalKnot{K, std::move(c), map, wind};
}

std::vector<int> matching_families(const WrappedKnot& K) {
  CanonicalKnot c = canonical_knot(K);
  std::vector<int> out;
  if (c.canonical.degenerate) return out;
  if (is_case1(c)) out.push_back(1);
  if (is_case2(c)) out.push_back(2);
  if (is_case3(c)) out.push_back(3);
  if (is_case4(c)) out.push_back(4);
  return out;
}

SurgeryClassification classify(const WrappedKnot& K, const Slope& r) {
  SurgeryClassification out;
  if (r.is_meridian()) {
    out.kind = SurgeryClassification::Kind::TrivialFilling;
    return out;
  }
  CanonicalKnot c = canonical_knot(K);
  int family = family_of(c);
  if (family < 0) {
    out.kind = SurgeryClassification::Kind::NonHyperbolicKnot;
    return out;
  }
  Slope rc = c.map(r, c.wind);
  for (auto& ex : canonical_exceptional(c, family)) {
    if (ex.slope == rc) {
      out = std::move(ex.verdict);
      if (out.toroidal) out.toroidal->slope = r;
      break;
    }
  }
  add_notes(c, family, out);
  if (out.kind != SurgeryClassification::Kind::Hyperbolic && !is_integral(r)) {
    throw std::logic_error("exceptional verdict at non-integral slope " + r.str());
  }
  return out;
}

std::vector<std::pair<Slope, SurgeryClassification>> exceptional_slopes(const WrappedKnot& K) {
  CanonicalKnot c = canonical_knot(K);
  int family = family_of(c);
  std::vector<std::pair<Slope, SurgeryClassification>> out;
  if (family <= 0) return out;
  for (auto& ex : canonical_exceptional(c, family)) {
    Slope r = c.map.inverse(ex.slope, c.wind);
    if (ex.verdict.toroidal) ex.verdict.toroidal->slope = r;
    add_notes(c, family, ex.verdict);
    out.emplace_back(r, std::move(ex.verdict));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

FamilyPrediction predict_s3_family(const WrappedKnot& K, const Slope& r) {
  using Kind = SurgeryClassification::Kind;
  SurgeryClassification v = classify(K, r);
  FamilyPrediction out{FamilyPrediction::Kind::NotApplicable, std::nullopt, {}};
  switch (v.kind) {
    case Kind::Hyperbolic:
      out.kind = FamilyPrediction::Kind::HyperbolicInterior;
      break;
    case Kind::SmallSeifert:
      out.kind = FamilyPrediction::Kind::SeifertOrReducibleAll;
      out.indices = v.seifert_indices;
      break;
    case Kind::Toroidal:
      if (v.toroidal->source == ToroidalCertificate::Source::Case4SeifertPiece) {
        // K_n(6 + 4n) is Seifert fibered for every n.
        out.kind = FamilyPrediction::Kind::SeifertOrReducibleAll;
        out.indices = v.toroidal->piece_indices;
      } else {
        out.kind = FamilyPrediction::Kind::ToroidalCofinite;
        if (v.toroidal->source == ToroidalCertificate::Source::Case4KleinBottle) {
          // K_0, K_1, K_2 are torus knots, so the window is centred at 1.
          CanonicalKnot c = canonical_knot(K);
          out.n0 = knot_index(c, r, reference_slope(c, r), 1);
        }
      }
      break;
    default: break;
  }
  return out;
}

std::optional<SFSClass> surgery_in_s3(const WrappedKnot& K, const Slope& r, const Integer& n) {
  CanonicalKnot c = canonical_knot(K);
  if (family_of(c) != 4 || r.is_meridian()) return std::nullopt;
  Slope r_ref = reference_slope(c, r);
  if (r_ref != Slope(6) && r_ref != Slope(7)) return std::nullopt;
  Integer n_ref = reference_index(c, r, r_ref, n);
  int base = r_ref == Slope(6) ? 6 : 7;
  SFSClass result = dbc_montesinos(cor23(n_ref, base));

  // K_0, K_1, K_2 are the (2,5), (3,4), (3,5) torus knots.
  static const int torus[3][2] = {{2, 5}, {3, 4}, {3, 5}};
  if (n_ref >= 0 && n_ref <= 2) {
    const auto& pq = torus[n_ref.get_si()];
    SFSClass check = moser(pq[0], pq[1], r_ref + Slope(4 * n_ref, 1));
    if (!sfs_equal(result, check)) {
      throw Error(ErrorCode::InconsistentCrossCheck,
                  "double branched cover " + result.str() + " vs torus knot surgery " +
                      check.str());
    }
  }
  // A mirrored knot gives the same manifold with the opposite orientation.
  if (c.map.sign * case4_canonical().map.sign < 0 &&
      result.kind != SFSClass::Kind::Reducible) {
    result.invariants = result.invariants.reversed();
  }
  return result;
}

}  // namespace wrapsurg
