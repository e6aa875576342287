#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace mcgen::cli {

// Exit codes are a stable contract.
inline constexpr int kOk = 0;
inline constexpr int kMathFailure = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kResource = 3;

struct RunConfig {
  std::vector<int> genera{3, 4, 5};
  bool genera_given = false;
  std::vector<long> primes{2, 3, 5, 7};
  bool primes_given = false;
  /// Explicit (g, p) cells for generate; overrides genera x primes.
  std::vector<std::pair<int, long>> cells;
  std::uint64_t orbit_budget = 10'000'000;
  /// 0 means auto (12 g).
  long order_cap = 0;
  std::string out;
  std::uint64_t seed = 0x5eed;
  int verbosity = 0;
  bool json = false;
  std::string suite = "all";
  std::string import_path;
  /// Test hook: "flip-twist" or "drop-letter".
  std::string negative_control;
  std::vector<std::string> sets;
};

/// The cells checked by generate when neither --genus, --primes nor --cells is given.
std::vector<std::pair<int, long>> default_generate_cells();

/// Parses "3:2,3:3"; throws std::invalid_argument.
std::vector<std::pair<int, long>> parse_cells(const std::string& text);

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_orders(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_coxeter(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_export(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace mcgen::cli
