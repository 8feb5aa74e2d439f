#include "settings.hpp"

#include "ptheta/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ptheta::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int to_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty()) throw ParseError("config key '" + key + "' needs an integer, got '" + value + "'");
  return v;
}

}  // namespace

std::string Settings::tolerance_or_default() const {
  return tolerance ? *tolerance : "1e-" + std::to_string(precision - 8);
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected key = value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

void apply_config(Settings& s, const std::map<std::string, std::string>& entries) {
  for (const auto& [key, value] : entries) {
    if (key == "precision")
      s.precision = to_int(key, value);
    else if (key == "tolerance")
      s.tolerance = value;
    else if (key == "subdiv.separ")
      s.subdiv_separ = to_int(key, value);
    else if (key == "subdiv.boxes")
      s.subdiv_boxes = to_int(key, value);
    else if (key == "subdiv.homotopy")
      s.subdiv_homotopy = to_int(key, value);
    else if (key == "scan.grid")
      s.scan_grid = to_int(key, value);
    else if (key == "scan.s")
      s.truncation_s = to_int(key, value);
    else
      throw ParseError("unknown config key '" + key + "'");
  }
}

void apply_environment(Settings& s) {
  if (const char* env = std::getenv("THETA_PRECISION"); env && *env) s.precision = to_int("THETA_PRECISION", env);
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << v;
  return out.str();
}

}  // namespace ptheta::cli
