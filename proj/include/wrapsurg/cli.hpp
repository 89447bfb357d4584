#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wrapsurg/slopes.hpp"

namespace wrapsurg::cli {

enum class Command { Classify, Slopes, Normalize, Twist, Predict, Table };
enum class Format { Text, Json };

struct IntRange {
  Integer lo;
  Integer hi;
};

struct Request {
  Command command = Command::Classify;
  std::string knot;  // validated against the grammar, built lazily by run()
  std::optional<Slope> slope;
  std::optional<IntRange> range;
  std::optional<IntRange> n;
  Format format = Format::Text;
  bool moves = false;
};

/// Grammar violation at a character position inside one argument.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t arg, std::size_t column, std::string token, const std::string& what);
  std::size_t arg() const noexcept { return arg_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }
  /// Message plus the offending argument with a caret under the column.
  std::string annotated() const;

 private:
  std::size_t arg_;
  std::size_t column_;
  std::string token_;
};

/// Parses `command knot [slope] [flags]`. Throws ParseError.
Request parse(const std::vector<std::string>& args);

struct Response {
  int exit_code = 0;  // 0 ok, 2 parse error, 3 invalid or degenerate knot
  std::string output;
};

Response run(const Request& req);

/// parse + run; parse failures become exit code 2.
Response run_args(const std::vector<std::string>& args);

/// One request per non-empty line (`#` starts a comment). Every line is
/// answered in input order; returns the largest per-line exit code.
int run_batch(std::istream& in, std::ostream& out, Format format);

/// Whitespace tokenizer used for batch lines.
std::vector<std::string> split_line(std::string_view line);

}  // namespace wrapsurg::cli
