#pragma once

#include <optional>
#include <random>
#include <vector>

#include <doctest.h>

#include "wrapsurg/wrapped.hpp"

namespace wrapsurg::testing {

/// Fixed-seed source of random slopes, tangles and knots.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = 20240611) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// p/q with |p| <= bound and 1 <= q <= bound.
  Slope slope(long bound) { return Slope(uniform(-bound, bound), uniform(1, bound)); }

  MontesinosTangle tangle(std::size_t k, long bound) {
    std::vector<Slope> e;
    for (std::size_t i = 0; i < k; ++i) e.push_back(slope(bound));
    return MontesinosTangle(std::move(e));
  }

  /// A valid knot with k entries, or nullopt when neither closure is a knot.
  std::optional<WrappedKnot> knot(std::size_t k, long bound) {
    MontesinosTangle T = tangle(k, bound);
    int first = static_cast<int>(uniform(0, 1));
    for (int a : {first, 1 - first}) {
      if (closure_components(a, T) == 1) return make_wrapped(a, T);
    }
    return std::nullopt;
  }

  /// A random equivalence move applicable to T.
  Move move(const MontesinosTangle& T) {
    const auto e = T.entries();
    while (true) {
      switch (uniform(0, 5)) {
        case 0: {
          std::vector<Integer> d(e.size());
          Integer total = 0;
          for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            d[i] = uniform(-3, 3);
            total += d[i];
          }
          d.back() = -total;
          return Move::shift(std::move(d));
        }
        case 1: {
          Move m{Move::Kind::InsertZeros, {}, {}, 0};
          m.where.push_back(static_cast<std::size_t>(uniform(0, static_cast<long>(e.size()))));
          return m;
        }
        case 2: {
          Move m{Move::Kind::DeleteZeros, {}, {}, 0};
          for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i].is_zero() && m.where.size() + 1 < e.size()) m.where.push_back(i);
          }
          if (!m.where.empty()) return m;
          break;
        }
        case 3: return Move::reverse();
        case 4: return Move::mirror();
        case 5: {
          if (e.size() != 1 || e[0].is_zero()) break;
          long m = uniform(-3, 3);
          if (m == 0 || (e[0].reciprocal() + Slope(2 * m)).is_zero()) break;
          return Move::twist_by(m);
        }
      }
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace wrapsurg::testing

namespace doctest {
template <>
struct StringMaker<wrapsurg::Slope> {
  static String convert(const wrapsurg::Slope& s) { return s.str().c_str(); }
};
template <>
struct StringMaker<wrapsurg::MontesinosTangle> {
  static String convert(const wrapsurg::MontesinosTangle& t) { return t.str().c_str(); }
};
}  // namespace doctest
