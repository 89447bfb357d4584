#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wrapsurg/slopes.hpp"

namespace wrapsurg {

/// A rational tangle of finite slope.
class RationalTangle {
 public:
  explicit RationalTangle(Slope slope);
  const Slope& slope() const noexcept { return slope_; }
  friend bool operator==(const RationalTangle&, const RationalTangle&) = default;

 private:
  Slope slope_;
};

/// Horizontal sum T[t1, ..., tk] of rational tangles, k >= 1.
class MontesinosTangle {
 public:
  explicit MontesinosTangle(std::vector<Slope> entries);
  MontesinosTangle(std::initializer_list<Slope> entries)
      : MontesinosTangle(std::vector<Slope>(entries)) {}

  std::span<const Slope> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Slope sum() const;
  std::string str() const;

  friend bool operator==(const MontesinosTangle&, const MontesinosTangle&) = default;

 private:
  std::vector<Slope> entries_;
};

/// Parses `[t1,...,tk]`.
MontesinosTangle parse_tangle(std::string_view text);

// ---------------------------------------------------------------------------
// Connectivity

enum class Endpoint : int { NW = 0, NE = 1, SW = 2, SE = 3 };

enum class Pairing {
  TopToTop,    // NW-NE, SW-SE
  LeftToLeft,  // NW-SW, NE-SE
  Cross,       // NW-SE, NE-SW
};

const char* to_string(Pairing p);

/// Perfect matching on the four boundary points plus the number of closed
/// components lying inside the tangle.
struct Connectivity {
  std::array<int, 4> partner{};
  int closed_loops = 0;

  Pairing pairing() const;
};

/// The twist word of a rational tangle: start from the 0 tangle (or the 1/0
/// tangle) and apply horizontal / vertical twist runs in order.
struct TwistRun {
  bool horizontal;
  Integer count;
};
struct TwistWord {
  bool starts_vertical;  // base tangle 1/0 instead of 0
  std::vector<TwistRun> runs;
};

TwistWord twist_word(const Slope& t);

/// Strand tracing through the twist word.
Connectivity trace(const RationalTangle& t);
/// Horizontal sum: right endpoints of the left tangle glue to the left
/// endpoints of the right one.
Connectivity compose(const Connectivity& left, const Connectivity& right);

Pairing pairing(const RationalTangle& t);
Connectivity montesinos_connectivity(const MontesinosTangle& T);
Pairing montesinos_pairing(const MontesinosTangle& T);

// ---------------------------------------------------------------------------
// Equivalence moves

struct Move {
  enum class Kind { Shift, DeleteZeros, InsertZeros, Reverse, Mirror, Twist };
  Kind kind;
  std::vector<Integer> deltas;     // Shift: per-entry integer change, sum 0
  std::vector<std::size_t> where;  // DeleteZeros / InsertZeros positions
  Integer twist;                   // Twist: t -> 1/(2m + 1/t)

  static Move shift(std::vector<Integer> d);
  static Move reverse();
  static Move mirror();
  static Move twist_by(Integer m);

  Move inverse() const;
  std::string str() const;
};

MontesinosTangle apply_move(const MontesinosTangle& T, const Move& m);
MontesinosTangle apply_moves(const MontesinosTangle& T, std::span<const Move> moves);

/// Slope effect of a move sequence on K^a: r -> sign * r + twist_offset * wind^2.
/// Twist(m) adds m; mirroring K^a(t) gives K^a(-t) only after one more
/// meridional twist by -a, so a mirror maps offset o to a - o.
struct SlopeMap {
  int sign = 1;
  Integer twist_offset = 0;

  Slope operator()(const Slope& r, int wind) const;
  Slope inverse(const Slope& r, int wind) const;
};

SlopeMap slope_map(std::span<const Move> moves, int a);

// ---------------------------------------------------------------------------
// Normal forms

struct LengthOneForm {
  Slope t;  // canonical representative: t > 1, or 0 / 1 / 1/2 if degenerate
  bool degenerate = false;
};

struct NormalForm {
  Integer e0;
  std::vector<Slope> fracs;  // each strictly in (0, 1)
  bool degenerate = false;
  std::optional<LengthOneForm> length_one;

  Slope sum() const;
  std::string str() const;
};

NormalForm normalize(const MontesinosTangle& T);

/// Equivalence-class representative: the key is identical for equivalent
/// tangles, and `moves` carries the input to `representative`.
struct Canonical {
  MontesinosTangle representative;
  std::vector<Move> moves;
  bool mirrored = false;
  bool degenerate = false;
};

Canonical canonicalize(const MontesinosTangle& T);

struct Equivalence {
  bool equivalent = false;
  bool mirrored = false;
  std::vector<Move> witness;  // carries the first tangle to the second
};

Equivalence equivalent(const MontesinosTangle& T1, const MontesinosTangle& T2);

}  // namespace wrapsurg
