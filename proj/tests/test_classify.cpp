#include <doctest.h>

#include "support.hpp"
#include "wrapsurg/classify.hpp"

using namespace wrapsurg;
using testing::Sampler;
using Kind = SurgeryClassification::Kind;
using Src = ToroidalCertificate::Source;

namespace {

WrappedKnot K(const char* text) { return parse_knot(text); }

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<std::pair<long, Kind>> table(const WrappedKnot& k) {
  std::vector<std::pair<long, Kind>> out;
  for (const auto& [r, c] : exceptional_slopes(k)) {
    REQUIRE(is_integral(r));
    out.emplace_back(r.p().get_si(), c.kind);
  }
  return out;
}

}  // namespace

TEST_CASE("Whitehead knot") {
  auto W = K("K0[2]");
  CHECK(classify(W, Slope(3)).kind == Kind::SmallSeifert);
  CHECK(classify(W, Slope(0)).kind == Kind::Toroidal);
  CHECK(classify(W, Slope(0)).toroidal->source == Src::WhiteheadSlope);
  CHECK(classify(W, Slope(5)).kind == Kind::Hyperbolic);
  CHECK(classify(W, Slope(1, 2)).kind == Kind::Hyperbolic);
  CHECK(table(W) == std::vector<std::pair<long, Kind>>{{0, Kind::Toroidal},
                                                       {1, Kind::SmallSeifert},
                                                       {2, Kind::SmallSeifert},
                                                       {3, Kind::SmallSeifert},
                                                       {4, Kind::Toroidal}});
}

TEST_CASE("the (-2,3) knot") {
  auto P = K("K1[-1/2,1/3]");
  auto seven = classify(P, Slope(7));
  CHECK(seven.kind == Kind::SmallSeifert);
  CHECK(seven.seifert_indices == ints({3, 5}));
  CHECK(classify(P, Slope(5)).kind == Kind::Hyperbolic);
  auto six = classify(P, Slope(6));
  REQUIRE(six.toroidal);
  CHECK(six.toroidal->source == Src::Case4SeifertPiece);
  CHECK(six.toroidal->piece_indices == ints({2, 4}));
  auto eight = classify(P, Slope(8));
  REQUIRE(eight.toroidal);
  CHECK(eight.toroidal->source == Src::Case4KleinBottle);
  CHECK(table(P) == std::vector<std::pair<long, Kind>>{
                        {6, Kind::Toroidal}, {7, Kind::SmallSeifert}, {8, Kind::Toroidal}});
}

TEST_CASE("mirror of the (-2,3) knot") {
  // Mirroring K^1 moves slopes by r -> -r + 4, so 7 goes to -3.
  auto M = K("K1[1/2,-1/3]");
  auto c = classify(M, Slope(-3));
  CHECK(c.kind == Kind::SmallSeifert);
  CHECK(c.seifert_indices == ints({3, 5}));
  CHECK(classify(M, Slope(-7)).kind == Kind::Hyperbolic);
  CHECK(table(M) == std::vector<std::pair<long, Kind>>{
                        {-4, Kind::Toroidal}, {-3, Kind::SmallSeifert}, {-2, Kind::Toroidal}});
  CHECK(classify(M, Slope(-2)).toroidal->source == Src::Case4SeifertPiece);
}

TEST_CASE("knots without exceptional surgeries") {
  for (const char* k : {"K0[7/3]", "K1[7/2]", "K1[-1/2,2/5]", "K1[1/2,1/3,1/5]"}) {
    CAPTURE(k);
    CHECK(exceptional_slopes(K(k)).empty());
  }
  CHECK(classify(K("K1[7/2]"), Slope(4)).kind == Kind::Hyperbolic);
  CHECK(classify(K("K0[7/3]"), Slope(4)).kind == Kind::Hyperbolic);
  CHECK(classify(K("K1[-1/2,2/5]"), Slope(8)).kind == Kind::Hyperbolic);
}

TEST_CASE("integer and pretzel families") {
  CHECK(table(K("K0[3]")) == std::vector<std::pair<long, Kind>>{{0, Kind::Toroidal}});
  CHECK(table(K("K1[4]")) == std::vector<std::pair<long, Kind>>{{8, Kind::Toroidal}});
  CHECK(table(K("K0[1/3,1/5]")) == std::vector<std::pair<long, Kind>>{{16, Kind::Toroidal}});
  auto c = classify(K("K0[5]"), Slope(0));
  CHECK(c.family == 2);
  CHECK(c.toroidal->source == Src::PretzelSurface);
  CHECK(c.notes.empty());
  // Length-one knots reach t > 1 by the twist move; slopes move with wind^2.
  CHECK(table(K("K0[3/7]")) == std::vector<std::pair<long, Kind>>{{4, Kind::Toroidal}});
}

TEST_CASE("trivial filling and degenerate knots") {
  CHECK(classify(K("K0[2]"), Slope::meridian()).kind == Kind::TrivialFilling);
  CHECK(classify(K("K1[-1/2]"), Slope(7)).kind == Kind::NonHyperbolicKnot);
  CHECK(classify(K("K0[0]"), Slope(1)).kind == Kind::NonHyperbolicKnot);
  CHECK(classify(K("K0[1/3]"), Slope(1)).kind == Kind::NonHyperbolicKnot);
  CHECK(exceptional_slopes(K("K0[1/3]")).empty());
}

TEST_CASE("K1[2] carries a note") {
  auto c = classify(K("K1[2]"), Slope(4));
  CHECK_FALSE(c.notes.empty());
}

TEST_CASE("family predictions") {
  auto P = K("K1[-1/2,1/3]");
  auto seven = predict_s3_family(P, Slope(7));
  CHECK(seven.kind == FamilyPrediction::Kind::SeifertOrReducibleAll);
  CHECK(seven.indices == ints({3, 5}));
  CHECK(predict_s3_family(P, Slope(5)).kind == FamilyPrediction::Kind::HyperbolicInterior);
  auto eight = predict_s3_family(P, Slope(8));
  CHECK(eight.kind == FamilyPrediction::Kind::ToroidalCofinite);
  CHECK(eight.n0 == Integer(1));
  auto six = predict_s3_family(P, Slope(6));
  CHECK(six.kind == FamilyPrediction::Kind::SeifertOrReducibleAll);
  CHECK(six.indices == ints({2, 4}));
  auto pretzel = predict_s3_family(K("K0[1/3,1/5]"), Slope(16));
  CHECK(pretzel.kind == FamilyPrediction::Kind::ToroidalCofinite);
  CHECK_FALSE(pretzel.n0);
  CHECK(predict_s3_family(P, Slope::meridian()).kind == FamilyPrediction::Kind::NotApplicable);
  // The mirror's torus knots sit at n = -3, -2, -1.
  CHECK(predict_s3_family(K("K1[1/2,-1/3]"), Slope(-4)).n0 == Integer(-2));
}

TEST_CASE("surgeries in S^3") {
  auto P = K("K1[-1/2,1/3]");
  CHECK(surgery_in_s3(P, Slope(7), 2)->kind == SFSClass::Kind::Reducible);
  CHECK(surgery_in_s3(P, Slope(7), 3)->kind == SFSClass::Kind::Lens);
  CHECK(surgery_in_s3(P, Slope(6), 3)->kind == SFSClass::Kind::Lens);
  CHECK(surgery_in_s3(P, Slope(7), 3)->lens_order == 19);
  CHECK(surgery_in_s3(P, Slope(6), 3)->lens_order == 18);
  CHECK_FALSE(surgery_in_s3(P, Slope(8), 3));
  CHECK_FALSE(surgery_in_s3(K("K0[2]"), Slope(1), 3));
  // K1[1/2,-1/3] twisted n times is the mirror of the reference twisted -n-1 times.
  auto M = K("K1[1/2,-1/3]");
  for (long n = -6; n <= 6; ++n) {
    auto x = surgery_in_s3(M, Slope(-3), n);
    auto y = surgery_in_s3(P, Slope(7), -n - 1);
    REQUIRE(x);
    REQUIRE(y);
    CHECK(sfs_equal(*x, *y));
    auto u = surgery_in_s3(M, Slope(-2), n);
    auto v = surgery_in_s3(P, Slope(6), -n - 1);
    CHECK(sfs_equal(*u, *v));
  }
}

TEST_CASE("classification is invariant under moves") {
  Sampler s(31);
  int checked = 0;
  while (checked < 400) {
    auto k = s.knot(static_cast<std::size_t>(s.uniform(1, 3)), 20);
    if (!k) continue;
    Move m = s.move(k->tangle());
    WrappedKnot moved = make_wrapped(k->a(), apply_move(k->tangle(), m));
    SlopeMap map = slope_map(std::span<const Move>(&m, 1), k->a());
    int w = winding_number(*k);
    CHECK(winding_number(moved) == w);
    for (long r = -12; r <= 12; ++r) {
      auto x = classify(*k, Slope(r));
      auto y = classify(moved, map(Slope(r), w));
      CHECK(x.same_verdict(y));
    }
    ++checked;
  }
}

TEST_CASE("at most one family matches") {
  for (long p1 = -6; p1 <= 6; ++p1) {
    for (long q1 = 1; q1 <= 6; ++q1) {
      for (long p2 = -6; p2 <= 6; ++p2) {
        for (long q2 = 1; q2 <= 6; ++q2) {
          MontesinosTangle T{Slope(p1, q1), Slope(p2, q2)};
          for (int a : {0, 1}) {
            if (closure_components(a, T) != 1) continue;
            CHECK(matching_families(make_wrapped(a, T)).size() <= 1);
          }
        }
      }
    }
  }
}
