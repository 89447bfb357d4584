#include <doctest.h>

#include <map>

#include "support.hpp"
#include "wrapsurg/tangles.hpp"

using namespace wrapsurg;
using testing::Sampler;

namespace {

// Pairing oracle from tangle algebra, independent of strand tracing: adding
// an integer n applies n horizontal half twists (swapping NE and SE), and
// t -> 1/t rotates and mirrors (swapping TopToTop and LeftToLeft).
Pairing algebraic_pairing(const Slope& t) {
  auto terms = expand(t);
  Pairing p = Pairing::TopToTop;  // the 0 tangle
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!first) {
      if (p == Pairing::TopToTop) {
        p = Pairing::LeftToLeft;
      } else if (p == Pairing::LeftToLeft) {
        p = Pairing::TopToTop;
      }
    }
    first = false;
    if (mpz_odd_p(it->get_mpz_t())) {
      if (p == Pairing::TopToTop) {
        p = Pairing::Cross;
      } else if (p == Pairing::Cross) {
        p = Pairing::TopToTop;
      }
    }
  }
  return p;
}

MontesinosTangle from_normal_form(const NormalForm& nf) {
  if (nf.fracs.empty()) return MontesinosTangle({Slope(nf.e0, 1)});
  std::vector<Slope> e = nf.fracs;
  e[0] += Slope(nf.e0, 1);
  return MontesinosTangle(std::move(e));
}

}  // namespace

TEST_CASE("parse_tangle") {
  CHECK(parse_tangle("[-1/2,1/3]") == MontesinosTangle({Slope(-1, 2), Slope(1, 3)}));
  CHECK(parse_tangle("[2]").str() == "[2]");
  for (const char* bad : {"", "[]", "[1/0]", "[inf]", "1/2", "[1/2", "[1/2,]", "[,1]"}) {
    CHECK_THROWS_AS(parse_tangle(bad), Error);
  }
}

TEST_CASE("normalize examples") {
  auto nf = normalize({Slope(-1, 2), Slope(1, 3)});
  CHECK(nf.e0 == -1);
  CHECK(nf.fracs == std::vector<Slope>{Slope(1, 2), Slope(1, 3)});
  CHECK(nf.sum() == Slope(-1, 6));
  CHECK_FALSE(nf.degenerate);

  auto zero = normalize({Slope(0)});
  CHECK(zero.e0 == 0);
  CHECK(zero.fracs.empty());
  CHECK(zero.degenerate);

  // 1/t = 7/2 reduces mod 2 to 3/2, then by mirror to 1/2.
  auto two_sevenths = normalize({Slope(2, 7)});
  REQUIRE(two_sevenths.length_one);
  CHECK(two_sevenths.length_one->t == Slope(2));
  CHECK_FALSE(two_sevenths.degenerate);

  CHECK(normalize({Slope(1, 5)}).degenerate);
  CHECK(normalize({Slope(-1, 4)}).degenerate);
  CHECK_FALSE(normalize({Slope(2)}).degenerate);
}

TEST_CASE("normalize preserves the sum and is idempotent") {
  Sampler s(1);
  for (int i = 0; i < 500; ++i) {
    auto T = s.tangle(static_cast<std::size_t>(s.uniform(1, 3)), 20);
    NormalForm nf = normalize(T);
    CHECK(nf.sum() == T.sum());
    for (const auto& f : nf.fracs) CHECK((Slope(0) < f && f < Slope(1)));
    NormalForm again = normalize(from_normal_form(nf));
    CHECK(again.e0 == nf.e0);
    CHECK(again.fracs == nf.fracs);
    Canonical c = canonicalize(T);
    CHECK(canonicalize(c.representative).representative == c.representative);
  }
}

TEST_CASE("pairing anchors") {
  CHECK(pairing(RationalTangle(Slope(0))) == Pairing::TopToTop);
  CHECK(pairing(RationalTangle(Slope(1))) == Pairing::Cross);
  // Three vertical half twists: odd/odd parity, the same class as 1/1.
  CHECK(pairing(RationalTangle(Slope(1, 3))) == Pairing::Cross);
  CHECK(pairing(RationalTangle(Slope(1, 2))) == Pairing::LeftToLeft);
  CHECK(pairing(RationalTangle(Slope(2))) == Pairing::TopToTop);
  CHECK_THROWS_AS(RationalTangle(Slope::meridian()), Error);
}

TEST_CASE("traced pairing matches the algebraic oracle") {
  for (long p = -30; p <= 30; ++p) {
    for (long q = 1; q <= 30; ++q) {
      Slope t(p, q);
      CHECK(pairing(RationalTangle(t)) == algebraic_pairing(t));
    }
  }
}

TEST_CASE("pairing depends only on parity") {
  Sampler s(2);
  std::map<std::pair<bool, bool>, std::optional<Pairing>> seen;
  for (int i = 0; i < 200; ++i) {
    Slope t = s.slope(1000);
    Connectivity c = trace(RationalTangle(t));
    CHECK(c.closed_loops == 0);
    std::pair<bool, bool> cls{mpz_odd_p(t.p().get_mpz_t()) != 0,
                              mpz_odd_p(t.q().get_mpz_t()) != 0};
    auto& slot = seen[cls];
    if (!slot) slot = c.pairing();
    CHECK(*slot == c.pairing());
  }
  CHECK(seen.size() == 3);
}

TEST_CASE("montesinos pairing under moves") {
  Sampler s(3);
  for (int i = 0; i < 300; ++i) {
    auto T = s.tangle(static_cast<std::size_t>(s.uniform(2, 3)), 20);
    Move m = s.move(T);
    auto U = apply_move(T, m);
    bool even = m.kind != Move::Kind::Shift ||
                std::all_of(m.deltas.begin(), m.deltas.end(),
                            [](const Integer& d) { return mpz_even_p(d.get_mpz_t()) != 0; });
    if (even) {
      CHECK(montesinos_pairing(U) == montesinos_pairing(T));
    }
    // Whatever the move, the pairing agrees with composing traced entries.
    Connectivity acc = trace(RationalTangle(U.entries()[0]));
    for (std::size_t j = 1; j < U.size(); ++j) {
      acc = compose(acc, trace(RationalTangle(U.entries()[j])));
    }
    CHECK(acc.pairing() == montesinos_pairing(U));
  }
}

TEST_CASE("moves and their inverses") {
  Sampler s(4);
  for (int i = 0; i < 300; ++i) {
    auto T = s.tangle(static_cast<std::size_t>(s.uniform(1, 3)), 20);
    Move m = s.move(T);
    CHECK(apply_move(apply_move(T, m), m.inverse()) == T);
  }
}

TEST_CASE("equivalence examples") {
  MontesinosTangle ref{Slope(-1, 2), Slope(1, 3)};
  CHECK(equivalent(ref, {Slope(1, 3), Slope(-1, 2)}).equivalent);
  CHECK(equivalent(ref, {Slope(1, 2), Slope(-2, 3)}).equivalent);
  CHECK(equivalent(ref, {Slope(0), Slope(-1, 2), Slope(1, 3)}).equivalent);
  auto mirror = equivalent(ref, {Slope(1, 2), Slope(-1, 3)});
  CHECK(mirror.equivalent);
  CHECK(mirror.mirrored);
  CHECK_FALSE(equivalent(ref, {Slope(-1, 2), Slope(2, 5)}).equivalent);
  CHECK(equivalent({Slope(2, 7)}, {Slope(2)}).equivalent);
  CHECK(equivalent({Slope(2, 7)}, {Slope(2, 3)}).equivalent);
  // Different pairings, so no move sequence connects them.
  CHECK_FALSE(equivalent({Slope(2, 7)}, {Slope(7, 2)}).equivalent);
  CHECK_FALSE(equivalent({Slope(2)}, {Slope(3)}).equivalent);
}

TEST_CASE("equivalence is an equivalence relation with valid witnesses") {
  Sampler s(5);
  for (int i = 0; i < 300; ++i) {
    auto T1 = s.tangle(static_cast<std::size_t>(s.uniform(1, 3)), 20);
    auto T2 = T1;
    for (int j = 0; j < 3; ++j) T2 = apply_move(T2, s.move(T2));
    auto T3 = T2;
    for (int j = 0; j < 3; ++j) T3 = apply_move(T3, s.move(T3));

    auto e11 = equivalent(T1, T1);
    CHECK(e11.equivalent);
    auto e12 = equivalent(T1, T2);
    auto e21 = equivalent(T2, T1);
    auto e13 = equivalent(T1, T3);
    CHECK(e12.equivalent);
    CHECK(e21.equivalent);
    CHECK(e13.equivalent);
    CHECK(apply_moves(T1, e12.witness) == T2);
    CHECK(apply_moves(T2, e21.witness) == T1);
    CHECK(apply_moves(T1, e13.witness) == T3);

    // Unrelated pairs: the relation is still symmetric.
    auto U = s.tangle(static_cast<std::size_t>(s.uniform(1, 3)), 20);
    auto a = equivalent(T1, U);
    auto b = equivalent(U, T1);
    CHECK(a.equivalent == b.equivalent);
    if (a.equivalent) CHECK(apply_moves(T1, a.witness) == U);
  }
}

TEST_CASE("slope map of moves") {
  std::vector<Move> moves{Move::twist_by(2), Move::mirror(), Move::twist_by(-1)};
  SlopeMap m0 = slope_map(moves, 0);
  CHECK(m0.sign == -1);
  CHECK(m0.twist_offset == -3);
  SlopeMap m1 = slope_map(moves, 1);
  CHECK(m1.twist_offset == -2);
  for (long r = -5; r <= 5; ++r) {
    CHECK(m1.inverse(m1(Slope(r), 2), 2) == Slope(r));
  }
  CHECK(m1(Slope::meridian(), 2).is_meridian());
}
