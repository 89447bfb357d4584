#include "wrapsurg/wrapped.hpp"

#include <cstdlib>

namespace wrapsurg {

namespace {

constexpr int NW = 0, NE = 1, SW = 2, SE = 3;

Connectivity wrap_connectivity(int a) {
  Connectivity c;
  if (a == 0) {
    c.partner = {SW, SE, NW, NE};
  } else {
    c.partner = {SE, SW, NE, NW};
  }
  return c;
}

}  // namespace

std::string WrappedKnot::str() const {
  return "K" + std::to_string(a_) + tangle_.str();
}

int closure_components(int a, const MontesinosTangle& T) {
  Connectivity c = compose(montesinos_connectivity(T), wrap_connectivity(a));
  // Numerator closure joins NW-NE and SW-SE.
  int outer = c.pairing() == Pairing::TopToTop ? 2 : 1;
  return outer + c.closed_loops;
}

WrappedKnot make_wrapped(int a, MontesinosTangle T) {
  if (a != 0 && a != 1) {
    throw Error(ErrorCode::Parse, "wrap type must be 0 or 1");
  }
  int comps = closure_components(a, T);
  if (comps != 1) {
    throw Error(ErrorCode::NotAKnot, "K" + std::to_string(a) + T.str() +
                                         " closes to a " + std::to_string(comps) +
                                         "-component link");
  }
  return WrappedKnot(a, std::move(T));
}

WrappedKnot parse_knot(std::string_view text) {
  if (text.size() < 4 || text[0] != 'K' || (text[1] != '0' && text[1] != '1')) {
    throw Error(ErrorCode::Parse,
                "knot must look like K0[...] or K1[...]: '" + std::string(text) + "'");
  }
  return make_wrapped(text[1] - '0', parse_tangle(text.substr(2)));
}

OrientedClosure trace_closure(int a, const MontesinosTangle& T) {
  const std::size_t k = T.size();
  const std::size_t count = k + 1;
  std::vector<int> inner(4 * count), glue(4 * count);
  for (std::size_t i = 0; i < count; ++i) {
    Connectivity c = i < k ? trace(RationalTangle(T.entries()[i])) : wrap_connectivity(a);
    for (int e = 0; e < 4; ++e) inner[4 * i + e] = static_cast<int>(4 * i) + c.partner[e];
  }
  auto node = [](std::size_t i, int e) { return static_cast<int>(4 * i) + e; };
  for (std::size_t i = 0; i + 1 < count; ++i) {
    glue[node(i, NE)] = node(i + 1, NW);
    glue[node(i + 1, NW)] = node(i, NE);
    glue[node(i, SE)] = node(i + 1, SW);
    glue[node(i + 1, SW)] = node(i, SE);
  }
  glue[node(0, NW)] = node(k, NE);
  glue[node(k, NE)] = node(0, NW);
  glue[node(0, SW)] = node(k, SE);
  glue[node(k, SE)] = node(0, SW);

  OrientedClosure out;
  out.enters.assign(count, {});
  std::vector<bool> seen(4 * count, false);
  for (std::size_t start = 0; start < 4 * count; ++start) {
    if (seen[start]) continue;
    ++out.components;
    int x = static_cast<int>(start);
    do {
      int y = inner[x];
      seen[x] = seen[y] = true;
      out.enters[x / 4][x % 4] = true;
      out.enters[y / 4][y % 4] = false;
      x = glue[y];
    } while (x != static_cast<int>(start));
  }
  return out;
}

int winding_number(const WrappedKnot& K) {
  auto oc = trace_closure(K.a(), K.tangle());
  const auto& wrap = oc.enters.back();
  // A wrap strand entered from the top runs down through the meridian disk.
  int signed_count = (wrap[NW] ? 1 : -1) + (wrap[NE] ? 1 : -1);
  return std::abs(signed_count);
}

int wrapping_number(const WrappedKnot& K) {
  if (normalize(K.tangle()).degenerate && winding_number(K) == 0) return 0;
  return 2;
}

TwistedImage twist(const WrappedKnot& K, const Integer& n) {
  TwistedImage img;
  img.n = n;
  Integer b = K.a() + 2 * n;
  if (b != 0) {
    img.montesinos_entries.assign(K.tangle().entries().begin(), K.tangle().entries().end());
    img.montesinos_entries.push_back(Slope(1, b));
    return img;
  }
  img.degenerate_two_bridge = true;
  img.unknotted = true;
  for (const auto& t : K.tangle().entries()) {
    Slope f = -t.reciprocal();
    img.two_bridge_summands.push_back(f);
    if (abs(f.p()) != 1) img.unknotted = false;
  }
  return img;
}

Slope transport_slope(const WrappedKnot& K, const Slope& r, const Integer& n) {
  if (r.is_meridian()) return r;
  int w = winding_number(K);
  return r + Slope(n * w * w, 1);
}

Slope two_bridge_fraction(const WrappedKnot& K, const Integer& n) {
  if (K.tangle().size() != 1) {
    throw Error(ErrorCode::NotLengthOne, "2-bridge fraction needs a single rational tangle");
  }
  return two_bridge_fraction(K.a(), K.tangle().entries()[0], n);
}

Slope two_bridge_fraction(int a, const Slope& t, const Integer& n) {
  return (Slope(a + 2 * n, 1) + t.reciprocal()).reciprocal();
}

std::optional<MontesinosTangle> pretzel_representative(const MontesinosTangle& T) {
  NormalForm nf = normalize(T);
  if (nf.fracs.empty()) {
    return MontesinosTangle({Slope(nf.e0, 1)});
  }
  if (nf.fracs.size() != 2) return std::nullopt;
  // Each entry is f_i or f_i - 1; the integer parts must total e0.
  for (int c0 = 0; c0 >= -1; --c0) {
    for (int c1 = 0; c1 >= -1; --c1) {
      if (Integer(c0 + c1) != nf.e0) continue;
      Slope s0 = nf.fracs[0] + Slope(c0);
      Slope s1 = nf.fracs[1] + Slope(c1);
      auto unit = [](const Slope& s) { return abs(s.p()) == 1 && s.q() >= 2; };
      if (unit(s0) && unit(s1)) return MontesinosTangle({s0, s1});
    }
  }
  return std::nullopt;
}

Slope pretzel_slope(const WrappedKnot& K) {
  auto rep = pretzel_representative(K.tangle());
  if (!rep) {
    throw Error(ErrorCode::NoPretzelSurface,
                K.str() + " is not of the form K^a(1/q1,1/q2) or K^a(m)");
  }
  auto oc = trace_closure(K.a(), *rep);
  Integer total = 0;
  const std::size_t k = rep->size();
  if (k == 1) {
    // Integer tangle: a horizontal band whose strands run left to right.
    const auto& band = oc.enters[0];
    if (band[NW] == band[SW]) total += rep->entries()[0].p();
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      const auto& band = oc.enters[i];
      if (band[NW] == band[NE]) {
        // 1/q: a vertical band with q half twists.
        const Slope& e = rep->entries()[i];
        total += e.p() * e.q();
      }
    }
  }
  const auto& wrap = oc.enters[k];
  if (wrap[NW] == wrap[NE]) total += K.a();
  return Slope(2 * total, 1);
}

}  // namespace wrapsurg
