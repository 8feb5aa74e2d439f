#include "commands.hpp"

#include "ptheta/errors.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#ifndef PTHETA_VERSION
#define PTHETA_VERSION "0.0.0"
#endif

namespace {

using namespace ptheta::cli;

Json effective_settings(const Settings& s) {
  return Json{{"precision", s.precision},        {"tolerance", s.tolerance_or_default()},
              {"subdiv.separ", s.subdiv_separ},  {"subdiv.boxes", s.subdiv_boxes},
              {"subdiv.homotopy", s.subdiv_homotopy}, {"scan.grid", s.scan_grid},
              {"scan.s", s.truncation_s}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial theta function toolkit: zeros, spectrum and certificates", "ptheta"};
  app.set_version_flag("--version", PTHETA_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  std::optional<int> precision_flag;
  std::string output_path;
  app.add_option("--precision", precision_flag, "Working precision in decimal digits (>= 16)");
  app.add_option("--config", settings.config_path, "key = value settings file")->check(CLI::ExistingFile);
  app.add_option("-o,--output", output_path, "Write the result here instead of stdout");

  EvalArgs eval;
  std::optional<std::string> tol_flag;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate theta(q, z) with a certified tail bound");
  eval_cmd->add_option("q", eval.q, "Parameter, e.g. 0.3 or 0.4+0.1i or 0.4,0.1")->required();
  eval_cmd->add_option("z", eval.z, "Point")->required();
  eval_cmd->add_option("--tol", tol_flag, "Absolute tolerance of the tail");
  eval_cmd->add_flag("--jet", eval.jet, "Also return derivatives and theta*");

  ZerosArgs zeros;
  auto* zeros_cmd = app.add_subcommand("zeros", "Locate the zeros xi_1..xi_kmax of theta(q, .)");
  zeros_cmd->add_option("q", zeros.q, "Parameter")->required();
  zeros_cmd->add_option("--k-max", zeros.k_max, "Last annulus index")->check(CLI::Range(1, 200));
  zeros_cmd->add_option("--tol", tol_flag, "Residual tolerance");
  zeros_cmd->add_flag("--certify", zeros.certify, "Attach a strong separation certificate");

  SpectrumArgs spectrum;
  std::optional<int> s_flag, grid_flag;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectral values in a disk or the real tables");
  auto* g = spectrum_cmd->add_option_group("region");
  g->add_option("--disk", spectrum.disk, "Scan |q| < R");
  g->add_option("--real-table", spectrum.real_table, "First N positive spectral values");
  g->add_option("--negative-table", spectrum.negative_table, "First N negative spectral values");
  g->require_option(1);
  spectrum_cmd->add_option("-s", s_flag, "Truncation degree of the resultant scan")->check(CLI::Range(4, 300));
  spectrum_cmd->add_option("--grid", grid_flag, "Resolution of the scan")->check(CLI::Range(4, 4096));
  spectrum_cmd->add_flag("--refine-full", spectrum.refine_full, "Refine on the full series, not the truncation");
  spectrum_cmd->add_option("--format", spectrum.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  CertifyArgs certify;
  auto* certify_cmd = app.add_subcommand("certify", "Run a certificate and report its margins");
  certify_cmd->add_option("--lemma", certify.lemma, "domination, separ, boxes, homotopy or constants")
      ->required()
      ->check(CLI::IsMember({"domination", "separ", "boxes", "homotopy", "constants"}));
  certify_cmd->add_option("--subdiv", certify.subdiv, "Subdivision depth")->check(CLI::Range(0, 30));
  certify_cmd->add_flag("--strict", certify.strict, "Fail when an informational comparison fails");
  certify_cmd->add_option("--q-abs", certify.q_abs, "|q| for --lemma domination");
  certify_cmd->add_option("--k", certify.k, "Circle index for --lemma domination")->check(CLI::Range(1, 1000));

  SeriesArgs series;
  auto* series_cmd = app.add_subcommand("series", "Integer coefficients of Phi_k in the zero expansion");
  series_cmd->add_option("k", series.k, "Zero index")->required()->check(CLI::Range(1, 60));
  series_cmd->add_option("--order", series.order, "Number of coefficients")->check(CLI::Range(1, 400));

  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  std::string command;
  Outcome outcome;
  try {
    if (!settings.config_path.empty()) apply_config(settings, read_config(settings.config_path));
    apply_environment(settings);
    if (precision_flag) settings.precision = *precision_flag;
    if (tol_flag) settings.tolerance = *tol_flag;
    if (s_flag) settings.truncation_s = *s_flag;
    if (grid_flag) settings.scan_grid = *grid_flag;
    if (settings.precision < ptheta::kMinDigits || settings.precision > 10000)
      throw ptheta::DomainError("precision must lie in [16, 10000] digits");

    if (*eval_cmd) {
      command = "eval";
      outcome = run_eval(settings, eval);
    } else if (*zeros_cmd) {
      command = "zeros";
      outcome = run_zeros(settings, zeros);
    } else if (*spectrum_cmd) {
      command = "spectrum";
      outcome = run_spectrum(settings, spectrum);
    } else if (*certify_cmd) {
      command = "certify";
      outcome = run_certify(settings, certify);
    } else {
      command = "series";
      outcome = run_series(settings, series);
    }
  } catch (const ptheta::Error& e) {
    std::cerr << "ptheta: " << e.what() << '\n';
    return kDomain;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::string text;
  if (!outcome.csv.empty()) {
    text = outcome.csv;
  } else {
    Json args = Json::array();
    for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
    Json manifest;
    manifest["args"] = args;
    manifest["settings"] = effective_settings(settings);
    manifest["config_digest"] = hex64(fnv1a(Json{{"args", args}, {"settings", manifest["settings"]}}.dump()));
    manifest["precision"] = settings.precision;
    manifest["seeds"] = Json::array();
    manifest["version"] = PTHETA_VERSION;
    manifest["wall_time_s"] = seconds;  // not part of the digest
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = command;
    doc["exit_code"] = outcome.exit_code;
    doc["result"] = outcome.result;
    doc["manifest"] = manifest;
    text = doc.dump(2) + "\n";
  }
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path);
    if (!out) {
      std::cerr << "ptheta: cannot write " << output_path << '\n';
      return kDomain;
    }
    out << text;
  }
  return outcome.exit_code;
}
