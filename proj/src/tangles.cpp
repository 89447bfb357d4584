#include "wrapsurg/tangles.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wrapsurg {

RationalTangle::RationalTangle(Slope slope) : slope_(std::move(slope)) {
  if (slope_.is_meridian()) {
    throw Error(ErrorCode::InfinityInput, "rational tangle of slope 1/0");
  }
}

MontesinosTangle::MontesinosTangle(std::vector<Slope> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw Error(ErrorCode::Parse, "Montesinos tangle needs at least one entry");
  }
  for (const auto& e : entries_) {
    if (e.is_meridian()) {
      throw Error(ErrorCode::InfinityInput, "tangle entry 1/0");
    }
  }
}

Slope MontesinosTangle::sum() const {
  Slope s;
  for (const auto& e : entries_) s += e;
  return s;
}

std::string MontesinosTangle::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += entries_[i].str();
  }
  return out + "]";
}

MontesinosTangle parse_tangle(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw Error(ErrorCode::Parse,
                "tangle must look like [t1,...,tk]: '" + std::string(text) + "'");
  }
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<Slope> entries;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    auto piece = body.substr(start, comma == std::string_view::npos
                                        ? std::string_view::npos
                                        : comma - start);
    if (piece == "inf") {
      throw Error(ErrorCode::Parse, "tangle entries must be finite");
    }
    entries.push_back(parse_slope(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return MontesinosTangle(std::move(entries));
}

// ---------------------------------------------------------------------------

const char* to_string(Pairing p) {
  switch (p) {
    case Pairing::TopToTop: return "TopToTop";
    case Pairing::LeftToLeft: return "LeftToLeft";
    case Pairing::Cross: return "Cross";
  }
  return "?";
}

namespace {

constexpr int NW = 0, NE = 1, SW = 2, SE = 3;

Connectivity from_pairs(int a, int b, int c, int d) {
  Connectivity out;
  out.partner[a] = b;
  out.partner[b] = a;
  out.partner[c] = d;
  out.partner[d] = c;
  return out;
}

// A half twist on two endpoints exchanges which strand ends at each.
void swap_ends(Connectivity& conn, int x, int y) {
  std::array<int, 4> perm{0, 1, 2, 3};
  perm[x] = y;
  perm[y] = x;
  std::array<int, 4> next{};
  for (int i = 0; i < 4; ++i) next[perm[i]] = perm[conn.partner[i]];
  conn.partner = next;
}

}  // namespace

Pairing Connectivity::pairing() const {
  switch (partner[NW]) {
    case NE: return Pairing::TopToTop;
    case SW: return Pairing::LeftToLeft;
    default: return Pairing::Cross;
  }
}

TwistWord twist_word(const Slope& t) {
  auto terms = expand(t);
  TwistWord word;
  const std::size_t n = terms.size() - 1;
  word.starts_vertical = (n % 2 == 1);
  for (std::size_t i = terms.size(); i-- > 0;) {
    word.runs.push_back({i % 2 == 0, terms[i]});
  }
  return word;
}

Connectivity trace(const RationalTangle& t) {
  const TwistWord word = twist_word(t.slope());
  Connectivity conn =
      word.starts_vertical ? from_pairs(NW, SW, NE, SE) : from_pairs(NW, NE, SW, SE);
  for (const auto& run : word.runs) {
    // Only the parity of a run moves endpoints.
    if (mpz_odd_p(run.count.get_mpz_t())) {
      if (run.horizontal) {
        swap_ends(conn, NE, SE);
      } else {
        swap_ends(conn, SW, SE);
      }
    }
  }
  return conn;
}

Connectivity compose(const Connectivity& left, const Connectivity& right) {
  // Nodes 0..3 are the left tangle's endpoints, 4..7 the right one's.
  std::array<int, 8> inner{};
  for (int i = 0; i < 4; ++i) {
    inner[i] = left.partner[i];
    inner[4 + i] = 4 + right.partner[i];
  }
  std::array<int, 8> glue;
  glue.fill(-1);
  glue[NE] = 4 + NW;
  glue[4 + NW] = NE;
  glue[SE] = 4 + SW;
  glue[4 + SW] = SE;
  const std::array<int, 4> outer_node{NW, 4 + NE, SW, 4 + SE};
  auto outer_index = [&](int node) {
    for (int i = 0; i < 4; ++i) {
      if (outer_node[i] == node) return i;
    }
    return -1;
  };

  Connectivity out;
  out.closed_loops = left.closed_loops + right.closed_loops;
  std::array<bool, 8> seen{};
  for (int i = 0; i < 4; ++i) {
    int node = outer_node[i];
    seen[node] = true;
    while (true) {
      node = inner[node];
      seen[node] = true;
      if (int j = outer_index(node); j >= 0) {
        out.partner[i] = j;
        break;
      }
      node = glue[node];
      seen[node] = true;
    }
  }
  for (int start = 0; start < 8; ++start) {
    if (seen[start]) continue;
    ++out.closed_loops;
    int node = start;
    do {
      seen[node] = true;
      node = inner[node];
      seen[node] = true;
      node = glue[node];
    } while (node != start);
  }
  return out;
}

Pairing pairing(const RationalTangle& t) { return trace(t).pairing(); }

Connectivity montesinos_connectivity(const MontesinosTangle& T) {
  Connectivity acc = trace(RationalTangle(T.entries()[0]));
  for (std::size_t i = 1; i < T.size(); ++i) {
    acc = compose(acc, trace(RationalTangle(T.entries()[i])));
  }
  return acc;
}

Pairing montesinos_pairing(const MontesinosTangle& T) {
  return montesinos_connectivity(T).pairing();
}

// ---------------------------------------------------------------------------

Move Move::shift(std::vector<Integer> d) {
  Move m{Kind::Shift, std::move(d), {}, 0};
  return m;
}
Move Move::reverse() { return Move{Kind::Reverse, {}, {}, 0}; }
Move Move::mirror() { return Move{Kind::Mirror, {}, {}, 0}; }
Move Move::twist_by(Integer m) { return Move{Kind::Twist, {}, {}, std::move(m)}; }

Move Move::inverse() const {
  Move out = *this;
  switch (kind) {
    case Kind::Shift:
      for (auto& d : out.deltas) d = -d;
      break;
    case Kind::DeleteZeros: out.kind = Kind::InsertZeros; break;
    case Kind::InsertZeros: out.kind = Kind::DeleteZeros; break;
    case Kind::Twist: out.twist = -twist; break;
    case Kind::Reverse:
    case Kind::Mirror: break;
  }
  return out;
}

std::string Move::str() const {
  std::ostringstream os;
  auto list = [&](const auto& v) {
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
  };
  switch (kind) {
    case Kind::Shift: os << "shift"; list(deltas); break;
    case Kind::DeleteZeros: os << "delete-zeros"; list(where); break;
    case Kind::InsertZeros: os << "insert-zeros"; list(where); break;
    case Kind::Reverse: os << "reverse"; break;
    case Kind::Mirror: os << "mirror"; break;
    case Kind::Twist: os << "twist(" << twist << ")"; break;
  }
  return os.str();
}

MontesinosTangle apply_move(const MontesinosTangle& T, const Move& m) {
  std::vector<Slope> e(T.entries().begin(), T.entries().end());
  switch (m.kind) {
    case Move::Kind::Shift: {
      if (m.deltas.size() != e.size()) {
        throw std::logic_error("shift arity mismatch");
      }
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += Slope(m.deltas[i], 1);
      break;
    }
    case Move::Kind::DeleteZeros: {
      // Positions refer to the input, ascending.
      for (auto it = m.where.rbegin(); it != m.where.rend(); ++it) {
        if (!e.at(*it).is_zero()) throw std::logic_error("deleting nonzero entry");
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(*it));
      }
      break;
    }
    case Move::Kind::InsertZeros: {
      // Positions refer to the output, ascending.
      for (auto pos : m.where) {
        e.insert(e.begin() + static_cast<std::ptrdiff_t>(pos), Slope(0));
      }
      break;
    }
    case Move::Kind::Reverse: std::reverse(e.begin(), e.end()); break;
    case Move::Kind::Mirror:
      for (auto& x : e) x = -x;
      break;
    case Move::Kind::Twist: {
      if (e.size() != 1) throw std::logic_error("twist move needs length one");
      Slope inv = e[0].reciprocal() + Slope(2 * m.twist, 1);
      e[0] = inv.reciprocal();
      break;
    }
  }
  return MontesinosTangle(std::move(e));
}

MontesinosTangle apply_moves(const MontesinosTangle& T, std::span<const Move> moves) {
  MontesinosTangle out = T;
  for (const auto& m : moves) out = apply_move(out, m);
  return out;
}

Slope SlopeMap::operator()(const Slope& r, int wind) const {
  if (r.is_meridian()) return r;
  Slope out = sign > 0 ? r : -r;
  return out + Slope(twist_offset * wind * wind, 1);
}

Slope SlopeMap::inverse(const Slope& r, int wind) const {
  if (r.is_meridian()) return r;
  Slope out = r - Slope(twist_offset * wind * wind, 1);
  return sign > 0 ? out : -out;
}

SlopeMap slope_map(std::span<const Move> moves, int a) {
  SlopeMap map;
  for (const auto& m : moves) {
    if (m.kind == Move::Kind::Mirror) {
      map.sign = -map.sign;
      map.twist_offset = a - map.twist_offset;
    } else if (m.kind == Move::Kind::Twist) {
      map.twist_offset += m.twist;
    }
  }
  return map;
}

// ---------------------------------------------------------------------------

Slope NormalForm::sum() const {
  Slope s(e0, 1);
  for (const auto& f : fracs) s += f;
  return s;
}

std::string NormalForm::str() const {
  std::string out = "e0=" + e0.get_str() + " [";
  for (std::size_t i = 0; i < fracs.size(); ++i) {
    out += (i ? "," : "") + fracs[i].str();
  }
  out += "]";
  if (length_one) out += " t=" + length_one->t.str();
  if (degenerate) out += " degenerate";
  return out;
}

namespace {

struct LengthOneCanon {
  Slope t;
  bool degenerate;
  std::vector<Move> moves;  // twist / mirror moves from the input slope
};

// For k = 1: u = 1/t moves by u -> u + 2m (twist) and u -> -u (mirror).
LengthOneCanon canonical_length_one(const Slope& t) {
  LengthOneCanon out{t, false, {}};
  if (t.is_zero()) {
    out.degenerate = true;
    return out;
  }
  Slope u = t.reciprocal();
  Integer m = -floor_div(u.p(), 2 * u.q());
  Slope u1 = u + Slope(2 * m, 1);  // in [0, 2)
  if (u1.is_zero()) {
    // Stop at u = 2 (t = 1/2); u = 0 would be the 1/0 tangle.
    m += 1;
    u1 = Slope(2);
  }
  if (m != 0) out.moves.push_back(Move::twist_by(m));
  if (is_integral(u1)) {
    // 1/t is an integer: t = 1/q.
    out.degenerate = true;
    out.t = u1.reciprocal();
    return out;
  }
  if (u1 > Slope(1)) {
    out.moves.push_back(Move::mirror());
    out.moves.push_back(Move::twist_by(1));
    u1 = Slope(2) - u1;
  }
  out.t = u1.reciprocal();
  return out;
}

std::vector<Slope> fractional_parts(std::span<const Slope> entries, Integer& e0) {
  std::vector<Slope> fracs;
  e0 = 0;
  for (const auto& e : entries) {
    e0 += e.floor();
    Slope f = e.frac();
    if (!f.is_zero()) fracs.push_back(f);
  }
  return fracs;
}

}  // namespace

NormalForm normalize(const MontesinosTangle& T) {
  NormalForm nf;
  nf.fracs = fractional_parts(T.entries(), nf.e0);
  if (nf.fracs.size() <= 1) {
    Slope t(nf.e0, 1);
    if (!nf.fracs.empty()) t += nf.fracs[0];
    auto c = canonical_length_one(t);
    nf.length_one = LengthOneForm{c.t, c.degenerate};
    nf.degenerate = c.degenerate;
  }
  return nf;
}

namespace {

// Shift the entries so the integer part collects in the first entry with a
// nonzero fractional part (or the first entry when there is none), then
// drop zero entries.
std::vector<Move> to_representative(const MontesinosTangle& T) {
  std::vector<Move> moves;
  const auto entries = T.entries();
  Integer e0;
  auto fracs = fractional_parts(entries, e0);
  std::size_t host = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].frac().is_zero()) {
      host = i;
      break;
    }
  }
  std::vector<Integer> deltas(entries.size());
  bool any = false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    Integer target_int = (i == host) ? e0 : Integer(0);
    deltas[i] = target_int - entries[i].floor();
    if (deltas[i] != 0) any = true;
  }
  if (any) moves.push_back(Move::shift(std::move(deltas)));
  MontesinosTangle shifted = apply_moves(T, moves);
  Move del{Move::Kind::DeleteZeros, {}, {}, 0};
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    if (shifted.entries()[i].is_zero() && del.where.size() + 1 < shifted.size()) {
      del.where.push_back(i);
    }
  }
  if (!del.where.empty()) moves.push_back(std::move(del));
  return moves;
}

// Lexicographic key on (e0, fracs) used to pick among reversal / mirror.
bool key_less(const MontesinosTangle& a, const MontesinosTangle& b) {
  Integer ea, eb;
  auto fa = fractional_parts(a.entries(), ea);
  auto fb = fractional_parts(b.entries(), eb);
  if (ea != eb) return ea < eb;
  return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
}

}  // namespace

Canonical canonicalize(const MontesinosTangle& T) {
  std::vector<Move> base = to_representative(T);
  MontesinosTangle rep = apply_moves(T, base);

  if (rep.size() == 1) {
    auto c = canonical_length_one(rep.entries()[0]);
    base.insert(base.end(), c.moves.begin(), c.moves.end());
    Canonical out{apply_moves(T, base), base, false, c.degenerate};
    out.mirrored = slope_map(out.moves, 0).sign < 0;
    return out;
  }

  // Candidates: identity, reverse, mirror, mirror+reverse.
  Canonical best{rep, base, false, false};
  const std::vector<std::vector<Move>> prefixes = {
      {Move::reverse()},
      {Move::mirror()},
      {Move::mirror(), Move::reverse()},
  };
  for (const auto& prefix : prefixes) {
    MontesinosTangle moved = apply_moves(rep, prefix);
    auto tail = to_representative(moved);
    MontesinosTangle cand = apply_moves(moved, tail);
    if (key_less(cand, best.representative)) {
      std::vector<Move> all = base;
      all.insert(all.end(), prefix.begin(), prefix.end());
      all.insert(all.end(), tail.begin(), tail.end());
      best = Canonical{cand, all, false, false};
    }
  }
  best.mirrored = slope_map(best.moves, 0).sign < 0;
  return best;
}

Equivalence equivalent(const MontesinosTangle& T1, const MontesinosTangle& T2) {
  Canonical c1 = canonicalize(T1);
  Canonical c2 = canonicalize(T2);
  Equivalence out;
  if (!(c1.representative == c2.representative)) return out;
  out.equivalent = true;
  out.witness = c1.moves;
  for (auto it = c2.moves.rbegin(); it != c2.moves.rend(); ++it) {
    out.witness.push_back(it->inverse());
  }
  out.mirrored = slope_map(out.witness, 0).sign < 0;
  return out;
}

}  // namespace wrapsurg
