#include "wrapsurg/cli.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <set>
#include <span>
#include <sstream>

#include <json.hpp>

#include "wrapsurg/classify.hpp"

namespace wrapsurg::cli {

using json = nlohmann::ordered_json;

ParseError::ParseError(std::size_t arg, std::size_t column, std::string token,
                       const std::string& what)
    : std::runtime_error(what), arg_(arg), column_(column), token_(std::move(token)) {}

std::string ParseError::annotated() const {
  std::ostringstream os;
  os << "parse error: argument " << arg_ + 1 << ", column " << column_ + 1 << ": " << what()
     << "\n  " << token_ << "\n  " << std::string(column_, ' ') << "^";
  return os.str();
}

// ---------------------------------------------------------------------------
// Grammar

namespace {

struct Violation {
  std::size_t column;
  std::string message;
};

using Scan = std::optional<Violation>;

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

Scan scan_digits(std::string_view s, std::size_t& i) {
  if (i >= s.size() || !is_digit(s[i])) return Violation{i, "expected a digit"};
  while (i < s.size() && is_digit(s[i])) ++i;
  return std::nullopt;
}

Scan scan_integer(std::string_view s, std::size_t& i) {
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  return scan_digits(s, i);
}

Scan scan_slope(std::string_view s, std::size_t& i, bool allow_inf) {
  if (allow_inf && s.substr(i, 3) == "inf") {
    i += 3;
    return std::nullopt;
  }
  if (auto v = scan_integer(s, i)) return v;
  if (i < s.size() && s[i] == '/') {
    ++i;
    return scan_digits(s, i);
  }
  return std::nullopt;
}

Scan at_end(std::string_view s, std::size_t i) {
  if (i != s.size()) return Violation{i, "unexpected character '" + std::string(1, s[i]) + "'"};
  return std::nullopt;
}

Scan scan_knot(std::string_view s) {
  if (s.empty() || s[0] != 'K') return Violation{0, "knot must start with 'K'"};
  if (s.size() < 2 || (s[1] != '0' && s[1] != '1')) {
    return Violation{1, "wrap type must be 0 or 1"};
  }
  if (s.size() < 3 || s[2] != '[') return Violation{2, "expected '['"};
  std::size_t i = 3;
  while (true) {
    if (auto v = scan_slope(s, i, false)) return v;
    if (i < s.size() && s[i] == ',') {
      ++i;
    } else if (i < s.size() && s[i] == ']') {
      ++i;
      break;
    } else {
      return Violation{i, "expected ',' or ']'"};
    }
  }
  return at_end(s, i);
}

Scan scan_range(std::string_view s) {
  std::size_t i = 0;
  if (auto v = scan_integer(s, i)) return v;
  if (s.substr(i, 2) != "..") return Violation{i, "expected '..'"};
  i += 2;
  if (auto v = scan_integer(s, i)) return v;
  return at_end(s, i);
}

const std::size_t kMaxRange = 100000;

Integer parse_int(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  return Integer(digits, 10);
}

IntRange parse_range(const std::string& tok, std::size_t arg) {
  if (auto v = scan_range(tok)) throw ParseError(arg, v->column, tok, v->message);
  auto dots = tok.find("..");
  IntRange r{parse_int(std::string_view(tok).substr(0, dots)),
             parse_int(std::string_view(tok).substr(dots + 2))};
  if (r.lo > r.hi) throw ParseError(arg, 0, tok, "range is empty");
  if (r.hi - r.lo >= kMaxRange) {
    throw ParseError(arg, 0, tok, "range spans more than " + std::to_string(kMaxRange) + " values");
  }
  return r;
}

std::optional<Command> command_named(std::string_view s) {
  if (s == "classify") return Command::Classify;
  if (s == "slopes") return Command::Slopes;
  if (s == "normalize") return Command::Normalize;
  if (s == "twist") return Command::Twist;
  if (s == "predict") return Command::Predict;
  if (s == "table") return Command::Table;
  return std::nullopt;
}

enum class SlopeUse { Required, Optional, None };

SlopeUse slope_use(Command c) {
  switch (c) {
    case Command::Classify:
    case Command::Predict: return SlopeUse::Required;
    case Command::Twist: return SlopeUse::Optional;
    default: return SlopeUse::None;
  }
}

}  // namespace

Request parse(const std::vector<std::string>& args) {
  Request req;
  std::vector<std::size_t> positional;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (tok.rfind("--", 0) != 0) {
      positional.push_back(i);
      continue;
    }
    auto value = [&]() -> const std::string& {
      if (i + 1 >= args.size()) throw ParseError(i, tok.size(), tok, tok + " needs a value");
      return args[++i];
    };
    if (tok == "--format") {
      const std::string& v = value();
      if (v == "text") {
        req.format = Format::Text;
      } else if (v == "json") {
        req.format = Format::Json;
      } else {
        throw ParseError(i, 0, v, "format must be text or json");
      }
    } else if (tok == "--range") {
      req.range = parse_range(value(), i);
    } else if (tok == "--n") {
      req.n = parse_range(value(), i);
    } else if (tok == "--moves") {
      req.moves = true;
    } else {
      throw ParseError(i, 0, tok, "unknown flag");
    }
  }

  if (positional.empty()) {
    throw ParseError(0, 0, "", "expected a command: classify, slopes, normalize, twist, predict, table");
  }
  std::size_t at = positional[0];
  auto cmd = command_named(args[at]);
  if (!cmd) throw ParseError(at, 0, args[at], "unknown command");
  req.command = *cmd;

  if (positional.size() < 2) {
    throw ParseError(at, args[at].size(), args[at], "expected a knot such as K1[-1/2,1/3]");
  }
  at = positional[1];
  if (auto v = scan_knot(args[at])) throw ParseError(at, v->column, args[at], v->message);
  req.knot = args[at];

  SlopeUse use = slope_use(req.command);
  if (positional.size() >= 3) {
    at = positional[2];
    if (use == SlopeUse::None) throw ParseError(at, 0, args[at], "this command takes no slope");
    std::size_t i = 0;
    Scan v = scan_slope(args[at], i, true);
    if (!v) v = at_end(args[at], i);
    if (v) throw ParseError(at, v->column, args[at], v->message);
    try {
      req.slope = parse_slope(args[at]);
    } catch (const Error& e) {
      throw ParseError(at, 0, args[at], e.what());
    }
  } else if (use == SlopeUse::Required) {
    at = positional[1];
    throw ParseError(at, args[at].size(), args[at], "expected a slope after the knot");
  }
  if (positional.size() > 3) {
    at = positional[3];
    throw ParseError(at, 0, args[at], "unexpected argument");
  }

  if (req.range && req.command != Command::Table) {
    throw ParseError(0, 0, args[0], "--range applies to table only");
  }
  if (req.n && req.command != Command::Twist && req.command != Command::Predict) {
    throw ParseError(0, 0, args[0], "--n applies to twist and predict only");
  }
  return req;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

struct Outcome {
  int exit_code = 0;
  json doc = json::object();
  std::ostringstream text;
};

json slope_list(std::span<const Slope> v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

json int_list(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

std::string join(const std::vector<Integer>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out;
}

json classification_json(const Slope& r, const SurgeryClassification& c) {
  json j;
  j["type"] = to_string(c.kind);
  j["slope"] = r.str();
  if (c.toroidal) {
    j["certificate"] = {{"source", to_string(c.toroidal->source)},
                        {"slope", c.toroidal->slope.str()},
                        {"description", c.toroidal->description()},
                        {"piece_indices", int_list(c.toroidal->piece_indices)}};
  } else {
    j["certificate"] = nullptr;
  }
  j["seifert_indices"] = int_list(c.seifert_indices);
  j["family"] = c.family;
  j["notes"] = c.notes;
  return j;
}

std::string classification_text(const SurgeryClassification& c) {
  std::string out = to_string(c.kind);
  if (!c.seifert_indices.empty()) out += " {" + join(c.seifert_indices) + "}";
  if (c.toroidal) {
    out += " [" + std::string(to_string(c.toroidal->source));
    if (!c.toroidal->piece_indices.empty()) out += " {" + join(c.toroidal->piece_indices) + "}";
    out += "]";
  }
  if (c.family > 0) out += " (family " + std::to_string(c.family) + ")";
  return out;
}

json sfs_json(const SFSClass& m) {
  json j;
  j["kind"] = to_string(m.kind);
  j["manifold"] = m.str();
  if (m.kind != SFSClass::Kind::Reducible) {
    j["e"] = m.invariants.e.get_str();
    json fibers = json::array();
    for (const auto& f : m.invariants.fibers) {
      fibers.push_back({f.alpha.get_str(), f.beta.get_str()});
    }
    j["fibers"] = fibers;
  }
  if (m.kind == SFSClass::Kind::Lens) j["order"] = m.lens_order.get_str();
  return j;
}

std::string wrapped_str(int a, const MontesinosTangle& T) {
  return "K" + std::to_string(a) + T.str();
}

void describe_knot(const WrappedKnot& K, const CanonicalKnot& c, const Request& req,
                   Outcome& out) {
  NormalForm nf = normalize(K.tangle());
  json n;
  n["e0"] = nf.e0.get_str();
  n["fracs"] = slope_list(nf.fracs);
  n["degenerate"] = nf.degenerate;
  if (nf.length_one) n["length_one"] = nf.length_one->t.str();
  n["canonical"] = wrapped_str(K.a(), c.canonical.representative);
  n["mirrored"] = c.canonical.mirrored;
  n["wind"] = c.wind;
  n["wrapping"] = wrapping_number(K);
  n["sum"] = nf.sum().str();
  out.doc["normal_form"] = n;
  json moves = json::array();
  for (const auto& m : c.canonical.moves) moves.push_back(m.str());
  out.doc["equivalence_moves"] = moves;

  out.text << "knot         " << K.str() << "\n";
  out.text << "normal form  " << nf.str() << "\n";
  out.text << "canonical    " << wrapped_str(K.a(), c.canonical.representative)
           << (c.canonical.mirrored ? " (mirrored)" : "")
           << (c.canonical.degenerate ? " (degenerate)" : "") << "\n";
  out.text << "wind         " << c.wind << "\n";
  if (req.moves) {
    out.text << "moves       ";
    if (c.canonical.moves.empty()) out.text << " (none)";
    for (const auto& m : c.canonical.moves) out.text << " " << m.str();
    out.text << "\n";
  }
}

void add_classification(const WrappedKnot& K, const Slope& r, Outcome& out) {
  SurgeryClassification c = classify(K, r);
  out.doc["classification"] = classification_json(r, c);
  out.text << "slope " << r.str() << std::string(r.str().size() < 6 ? 6 - r.str().size() : 0, ' ')
           << " " << classification_text(c) << "\n";
  if (c.toroidal) out.text << "certificate  " << c.toroidal->description() << "\n";
  for (const auto& note : c.notes) out.text << "note         " << note << "\n";
  if (c.kind == SurgeryClassification::Kind::NonHyperbolicKnot) out.exit_code = 3;
}

void run_slopes(const WrappedKnot& K, const CanonicalKnot& c, Outcome& out) {
  json list = json::array();
  auto ex = exceptional_slopes(K);
  for (const auto& [r, v] : ex) {
    list.push_back(classification_json(r, v));
    out.text << "exceptional  " << r.str() << ": " << classification_text(v) << "\n";
  }
  if (ex.empty()) out.text << "exceptional  (none)\n";
  out.doc["exceptional_slopes"] = list;
  if (c.canonical.degenerate) {
    out.text << "knot is not hyperbolic; no surgery classification\n";
    out.exit_code = 3;
  }
}

void run_table(const WrappedKnot& K, const CanonicalKnot& c, const Request& req, Outcome& out) {
  IntRange range = req.range.value_or(IntRange{-10, 10});
  std::set<Slope> rows;
  for (Integer r = range.lo; r <= range.hi; ++r) rows.insert(Slope(r, 1));
  std::set<Slope> exceptional;
  for (const auto& [r, v] : exceptional_slopes(K)) {
    rows.insert(r);
    exceptional.insert(r);
  }
  json table = json::array();
  for (const auto& r : rows) {
    SurgeryClassification v = classify(K, r);
    json row = classification_json(r, v);
    row["exceptional"] = exceptional.count(r) > 0;
    table.push_back(row);
    out.text << (exceptional.count(r) ? "* " : "  ") << r.str() << "\t" << classification_text(v)
             << "\n";
  }
  out.doc["table"] = table;
  if (c.canonical.degenerate) out.exit_code = 3;
}

void run_twist(const WrappedKnot& K, const Request& req, Outcome& out) {
  IntRange range = req.n.value_or(IntRange{-3, 3});
  json list = json::array();
  for (Integer n = range.lo; n <= range.hi; ++n) {
    TwistedImage img = twist(K, n);
    json j;
    j["n"] = n.get_str();
    out.text << "n=" << n.get_str();
    if (img.degenerate_two_bridge) {
      j["two_bridge_summands"] = slope_list(img.two_bridge_summands);
      out.text << "\tconnected sum of 2-bridge N(" << slope_list(img.two_bridge_summands).dump()
               << ")";
    } else {
      MontesinosLink m{img.montesinos_entries};
      j["montesinos"] = m.str();
      out.text << "\t" << m.str();
    }
    j["unknotted"] = img.unknotted;
    if (img.unknotted) out.text << " (unknot)";
    if (K.tangle().size() == 1) {
      Slope f = two_bridge_fraction(K, n);
      j["two_bridge_fraction"] = f.str();
      out.text << "\t2-bridge " << f.str();
    }
    if (req.slope) {
      Slope rn = transport_slope(K, *req.slope, n);
      j["slope"] = rn.str();
      out.text << "\tslope " << rn.str();
    }
    out.text << "\n";
    list.push_back(j);
  }
  out.doc["twists"] = list;
}

void run_predict(const WrappedKnot& K, const Request& req, Outcome& out) {
  add_classification(K, *req.slope, out);
  if (out.exit_code != 0) return;
  FamilyPrediction p = predict_s3_family(K, *req.slope);
  json pj;
  pj["kind"] = to_string(p.kind);
  pj["n0"] = p.n0 ? json(p.n0->get_str()) : json(nullptr);
  pj["indices"] = int_list(p.indices);
  pj["summary"] = p.str();
  out.text << "prediction   " << p.str() << "\n";

  IntRange range = req.n.value_or(IntRange{-3, 3});
  json family = json::array();
  for (Integer n = range.lo; n <= range.hi; ++n) {
    Slope rn = transport_slope(K, *req.slope, n);
    json j;
    j["n"] = n.get_str();
    j["slope"] = rn.str();
    out.text << "n=" << n.get_str() << "\tr=" << rn.str() << "\t";
    if (auto m = surgery_in_s3(K, *req.slope, n)) {
      j["surgery"] = sfs_json(*m);
      out.text << m->str();
    } else {
      j["surgery"] = nullptr;
      out.text << "(not computed)";
    }
    out.text << "\n";
    family.push_back(j);
  }
  pj["family"] = family;
  out.doc["family_prediction"] = pj;
}

const char* command_name(Command c) {
  switch (c) {
    case Command::Classify: return "classify";
    case Command::Slopes: return "slopes";
    case Command::Normalize: return "normalize";
    case Command::Twist: return "twist";
    case Command::Predict: return "predict";
    case Command::Table: return "table";
  }
  return "?";
}

void fail(Outcome& out, int code, const std::string& kind, const std::string& message) {
  out.exit_code = code;
  out.doc["error"] = {{"code", kind}, {"message", message}};
  out.text.str("");
  out.text << "error: " << message << "\n";
}

Outcome execute(const Request& req) {
  Outcome out;
  out.doc["input"] = {{"command", command_name(req.command)}, {"knot", req.knot}};
  if (req.slope) out.doc["input"]["slope"] = req.slope->str();
  try {
    WrappedKnot K = parse_knot(req.knot);
    CanonicalKnot c = canonical_knot(K);
    describe_knot(K, c, req, out);
    switch (req.command) {
      case Command::Classify: add_classification(K, *req.slope, out); break;
      case Command::Slopes: run_slopes(K, c, out); break;
      case Command::Normalize: break;
      case Command::Twist: run_twist(K, req, out); break;
      case Command::Predict: run_predict(K, req, out); break;
      case Command::Table: run_table(K, c, req, out); break;
    }
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::Parse:
      case ErrorCode::ZeroZero:
      case ErrorCode::InfinityInput: fail(out, 2, to_string(e.code()), e.what()); break;
      default: fail(out, 3, to_string(e.code()), e.what()); break;
    }
  } catch (const std::exception& e) {
    fail(out, 3, "Internal", e.what());
  }
  return out;
}

Outcome parse_failure(const ParseError& e) {
  Outcome out;
  out.exit_code = 2;
  out.doc["error"] = {{"code", "Parse"},
                      {"message", e.what()},
                      {"argument", e.arg() + 1},
                      {"column", e.column() + 1}};
  out.text << e.annotated() << "\n";
  return out;
}

Response render(const Outcome& o, Format f) {
  return Response{o.exit_code, f == Format::Json ? o.doc.dump(2) + "\n" : o.text.str()};
}

// Best effort: honour --format json even when the rest of the line fails.
Format requested_format(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == "--format" && args[i + 1] == "json") return Format::Json;
  }
  return Format::Text;
}

}  // namespace

Response run(const Request& req) { return render(execute(req), req.format); }

Response run_args(const std::vector<std::string>& args) {
  try {
    return run(parse(args));
  } catch (const ParseError& e) {
    return render(parse_failure(e), requested_format(args));
  }
}

std::vector<std::string> split_line(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int run_batch(std::istream& in, std::ostream& out, Format format) {
  int worst = 0;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto args = split_line(line);
    if (args.empty() || args[0][0] == '#') continue;
    Outcome o;
    try {
      Request req = parse(args);
      o = execute(req);
    } catch (const ParseError& e) {
      o = parse_failure(e);
    }
    worst = std::max(worst, o.exit_code);
    if (format == Format::Json) {
      json j{{"line", number}, {"request", line}, {"exit_code", o.exit_code}, {"result", o.doc}};
      out << j.dump() << "\n";
    } else {
      out << "## line " << number << ": " << line << "\n" << o.text.str();
      if (o.exit_code != 0) out << "(exit " << o.exit_code << ")\n";
    }
  }
  return worst;
}

}  // namespace wrapsurg::cli
