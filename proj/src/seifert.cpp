#include "wrapsurg/seifert.hpp"

#include <algorithm>

namespace wrapsurg {

std::string MontesinosLink::str() const {
  std::string out = "M[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out += (i ? "," : "") + entries[i].str();
  }
  return out + "]";
}

SeifertInvariants SeifertInvariants::from_fractions(const std::vector<Slope>& fractions) {
  SeifertInvariants inv;
  inv.e = 0;
  for (const auto& f : fractions) {
    inv.e += f.floor();
    Slope part = f.frac();
    if (!part.is_zero()) inv.fibers.push_back({part.q(), part.p()});
  }
  std::sort(inv.fibers.begin(), inv.fibers.end());
  return inv;
}

SeifertInvariants SeifertInvariants::reversed() const {
  SeifertInvariants out;
  out.e = -e - static_cast<long>(fibers.size());
  for (const auto& f : fibers) out.fibers.push_back({f.alpha, f.alpha - f.beta});
  std::sort(out.fibers.begin(), out.fibers.end());
  return out;
}

std::vector<Integer> SeifertInvariants::indices() const {
  std::vector<Integer> out;
  for (const auto& f : fibers) out.push_back(f.alpha);
  std::sort(out.begin(), out.end());
  return out;
}

Integer SeifertInvariants::homology_order() const {
  Slope euler(e, 1);
  Integer prod = 1;
  for (const auto& f : fibers) {
    euler += Slope(f.beta, f.alpha);
    prod *= f.alpha;
  }
  // prod * euler is an integer.
  Integer num = euler.p() * prod;
  return abs(Integer(num / euler.q()));
}

std::string SeifertInvariants::str() const {
  std::string out = "(e=" + e.get_str() + ";";
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    out += (i ? "," : " ") + fibers[i].beta.get_str() + "/" + fibers[i].alpha.get_str();
  }
  return out + ")";
}

const char* to_string(SFSClass::Kind kind) {
  switch (kind) {
    case SFSClass::Kind::SmallSeifert: return "SmallSeifert";
    case SFSClass::Kind::Seifert: return "Seifert";
    case SFSClass::Kind::Lens: return "Lens";
    case SFSClass::Kind::Reducible: return "Reducible";
    case SFSClass::Kind::S3: return "S3";
  }
  return "?";
}

std::string SFSClass::str() const {
  std::string out = to_string(kind);
  if (kind == Kind::Lens) out += "(order " + lens_order.get_str() + ")";
  if (kind == Kind::SmallSeifert || kind == Kind::Seifert) out += invariants.str();
  return out;
}

SFSClass classify_seifert(const SeifertInvariants& inv) {
  SFSClass out{SFSClass::Kind::SmallSeifert, inv, 0};
  if (inv.fibers.size() >= 4) {
    out.kind = SFSClass::Kind::Seifert;
  } else if (inv.fibers.size() <= 2) {
    Integer order = inv.homology_order();
    if (order == 0) {
      out.kind = SFSClass::Kind::Reducible;  // S^2 x S^1
    } else if (order == 1) {
      out.kind = SFSClass::Kind::S3;
    } else {
      out.kind = SFSClass::Kind::Lens;
      out.lens_order = order;
    }
  }
  return out;
}

SFSClass dbc_montesinos(const MontesinosLink& L) {
  for (const auto& r : L.entries) {
    if (r.is_meridian()) return SFSClass{SFSClass::Kind::Reducible, {}, 0};
  }
  return classify_seifert(SeifertInvariants::from_fractions(L.entries));
}

SFSClass moser(const Integer& p, const Integer& q, const Slope& r) {
  if (abs(p) < 2 || abs(q) < 2 || gcd(p, q) != 1) {
    throw Error(ErrorCode::NotATorusKnot,
                "(" + p.get_str() + "," + q.get_str() + ") is not a nontrivial torus knot");
  }
  if (r.is_meridian()) return SFSClass{SFSClass::Kind::S3, {}, 0};
  const Integer& u = r.p();
  const Integer& v = r.q();
  Integer alpha = u - p * q * v;
  if (alpha == 0) return SFSClass{SFSClass::Kind::Reducible, {}, 0};
  // S^3 fibers with exceptional fibers b1/p, b2/q where q*b1 + p*b2 = 1;
  // in the basis (meridian, fiber) the filling slope adds the fiber v/alpha.
  Integer g, b1, b2;
  mpz_gcdext(g.get_mpz_t(), b1.get_mpz_t(), b2.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  return classify_seifert(SeifertInvariants::from_fractions(
      {Slope(b1, p), Slope(b2, q), Slope(v, alpha)}));
}

MontesinosLink cor23(const Integer& n, int base) {
  if (base == 7) return {{Slope(-1, 3), Slope(3, 5), Slope(1, n - 2)}};
  if (base == 6) return {{Slope(1, 2), Slope(-1, 4), Slope(2, 2 * n - 5)}};
  throw Error(ErrorCode::Parse, "surgery family base must be 6 or 7");
}

bool sfs_equal(const SFSClass& x, const SFSClass& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case SFSClass::Kind::Reducible:
    case SFSClass::Kind::S3: return true;
    case SFSClass::Kind::Lens: return x.lens_order == y.lens_order;
    case SFSClass::Kind::SmallSeifert:
    case SFSClass::Kind::Seifert:
      return x.invariants == y.invariants || x.invariants == y.invariants.reversed();
  }
  return false;
}

}  // namespace wrapsurg
