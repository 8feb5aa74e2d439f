#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace ptheta::cli {

// Effective run settings. Later sources win: defaults, config file, THETA_PRECISION, flags.
struct Settings {
  int precision = 40;
  std::optional<std::string> tolerance;  // absolute tolerance for eval and zeros
  int subdiv_separ = 16;
  int subdiv_boxes = 3;
  int subdiv_homotopy = 3;
  int scan_grid = 64;
  int truncation_s = 18;
  std::string config_path;

  // Default tolerance: eight digits short of the working precision.
  std::string tolerance_or_default() const;
};

// Reads `key = value` lines; `#` starts a comment. Unknown keys are an error.
std::map<std::string, std::string> read_config(const std::string& path);
void apply_config(Settings& s, const std::map<std::string, std::string>& entries);
void apply_environment(Settings& s);

std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t v);

}  // namespace ptheta::cli
