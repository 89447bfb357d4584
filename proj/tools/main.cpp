#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "wrapsurg/cli.hpp"

namespace {

const char* kUsage =
    "usage: wrapsurg <command> <knot> [slope] [flags]\n"
    "       wrapsurg batch [file|-] [--format text|json]\n"
    "\n"
    "commands:\n"
    "  classify K r      classify r-surgery on K\n"
    "  slopes K          list the exceptional slopes\n"
    "  normalize K       normal form and canonical representative\n"
    "  twist K [r]       images K_n under full twists (--n a..b)\n"
    "  predict K r       S^3 surgery family K_n(r_n) (--n a..b)\n"
    "  table K           exceptional slopes plus an integral sweep (--range a..b)\n"
    "\n"
    "knots are K0[t1,...,tk] or K1[t1,...,tk]; slopes are p, p/q or inf.\n"
    "flags: --format text|json, --range a..b, --n a..b, --moves\n"
    "exit codes: 0 ok, 2 parse error, 3 invalid or non-hyperbolic knot\n";

bool wants_json(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == "--format" && args[i + 1] == "json") return true;
  }
  return false;
}

int batch(const std::vector<std::string>& args) {
  using wrapsurg::cli::Format;
  Format format = wants_json(args) ? Format::Json : Format::Text;
  std::string path = "-";
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--format") {
      ++i;
    } else {
      path = args[i];
    }
  }
  if (path == "-") return wrapsurg::cli::run_batch(std::cin, std::cout, format);
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 2;
  }
  return wrapsurg::cli::run_batch(in, std::cout, format);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) {
    std::cerr << kUsage;
    return 2;
  }
  if (args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    std::cout << kUsage;
    return 0;
  }
  if (args[0] == "batch") return batch(args);

  auto response = wrapsurg::cli::run_args(args);
  bool to_stdout = response.exit_code == 0 || wants_json(args);
  (to_stdout ? std::cout : std::cerr) << response.output;
  return response.exit_code;
}
