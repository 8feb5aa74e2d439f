#pragma once

#include "records.hpp"
#include "settings.hpp"

#include <optional>
#include <string>

namespace ptheta::cli {

enum ExitCode : int { kPass = 0, kFailed = 1, kDomain = 2, kInconclusive = 3 };

struct Outcome {
  Json result;
  int exit_code = kPass;
  std::string csv;  // set when the command was asked for CSV
};

struct EvalArgs {
  std::string q, z;
  bool jet = false;
};

struct ZerosArgs {
  std::string q;
  int k_max = 10;
  bool certify = false;
};

struct SpectrumArgs {
  std::optional<std::string> disk;
  std::optional<int> real_table;
  std::optional<int> negative_table;
  bool refine_full = false;
  std::string format = "json";
};

struct CertifyArgs {
  std::string lemma;
  std::optional<int> subdiv;
  bool strict = false;
  std::string q_abs = "0.2";
  int k = 1;
};

struct SeriesArgs {
  int k = 1;
  int order = 12;
};

Outcome run_eval(const Settings& s, const EvalArgs& a);
Outcome run_zeros(const Settings& s, const ZerosArgs& a);
Outcome run_spectrum(const Settings& s, const SpectrumArgs& a);
Outcome run_certify(const Settings& s, const CertifyArgs& a);
Outcome run_series(const Settings& s, const SeriesArgs& a);

}  // namespace ptheta::cli
