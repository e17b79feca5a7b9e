#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ipx::cli {

enum class Command { Identities, Verify, Search, List };
enum class Format { Json, Csv };

struct RunConfig {
  Command command = Command::Verify;
  std::string entries = "*";  // glob over entry (or identity) ids
  std::uint64_t samples = 10000;
  std::vector<std::size_t> dims = {1, 2, 3, 4, 5, 6, 7, 8};
  std::uint64_t seed = 42;
  double eps_rel = 1e-9;
  double eps_abs = 1e-12;
  std::optional<std::string> out;
  Format format = Format::Json;
  std::size_t budget = 200;        // search starts
  std::optional<std::size_t> link;  // search link; defaults to the entry's principal link
  bool with_synthetic_violation = false;
  unsigned threads = 1;
};

struct Outcome {
  int exit_code = 0;
  nlohmann::ordered_json report;
  std::string rendered;  // report in the requested format
  std::string error;     // set when exit_code == 2
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitConfig = 2;

/// "a..b" or "a,b,c". Throws std::invalid_argument.
std::vector<std::size_t> parse_dims(const std::string& text);
Command parse_command(const std::string& text);
Format parse_format(const std::string& text);
/// Flag value if given, else IPX_SEED if set and numeric, else 42.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char* env);

/// Runs one command and renders its report; writes it to config.out when set.
Outcome run(const RunConfig& config);

}  // namespace ipx::cli
