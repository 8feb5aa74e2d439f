#include "commands.hpp"

#include "ptheta/errors.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace ptheta::cli {

namespace bmp = boost::multiprecision;

Outcome run_eval(const Settings& s, const EvalArgs& a) {
  PrecisionScope scope(s.precision);
  const MPComplex q = parse_complex(a.q, s.precision);
  const MPComplex z = parse_complex(a.z, s.precision);
  const Real tol = parse_real(s.tolerance_or_default(), s.precision);
  Outcome out;
  out.result["q"] = complex_json(q);
  out.result["z"] = complex_json(z);
  out.result["tolerance"] = s.tolerance_or_default();
  if (a.jet) {
    const ThetaJet j = eval_jet(q, z, tol);
    out.result["value"] = complex_json(j.value);
    out.result["tail"] = real_json(j.tail.value);
    out.result["jet"] = to_json(j);
  } else {
    const ThetaValue v = eval_theta(q, z, tol);
    out.result["value"] = complex_json(v.value);
    out.result["tail"] = real_json(v.tail);
    out.result["terms_used"] = v.terms_used;
  }
  return out;
}

Outcome run_zeros(const Settings& s, const ZerosArgs& a) {
  PrecisionScope scope(s.precision);
  const MPComplex q = parse_complex(a.q, s.precision);
  const Real tol = parse_real(s.tolerance_or_default(), s.precision);
  Outcome out;
  out.result["q"] = complex_json(q);
  out.result["k_max"] = a.k_max;
  Json records = Json::array();
  for (const ZeroRecord& r : find_zeros(q, a.k_max, tol)) records.push_back(to_json(r));
  out.result["zeros"] = records;
  if (a.certify) {
    const SeparationCertificate c = certify_strong_separation(q, minimal_theorem_n(q), a.k_max);
    out.result["certificate"] = to_json(c);
    if (!c.valid()) out.exit_code = kFailed;
  }
  return out;
}

Outcome run_spectrum(const Settings& s, const SpectrumArgs& a) {
  PrecisionScope scope(s.precision);
  const int modes = (a.disk ? 1 : 0) + (a.real_table ? 1 : 0) + (a.negative_table ? 1 : 0);
  if (modes != 1) throw DomainError("give exactly one of --disk, --real-table, --negative-table");
  if (a.format != "json" && a.format != "csv") throw ParseError("--format must be json or csv");
  std::vector<SpectralPoint> points;
  Outcome out;
  if (a.disk) {
    const Real r = parse_real(*a.disk, s.precision);
    points = spectral_values(s.truncation_s, Annulus{Real(0), r}, s.scan_grid, a.refine_full);
    out.result["region"] = Json{{"disk", real_json(r)}, {"s", s.truncation_s}, {"grid", s.scan_grid}};
  } else {
    RealTableOptions options;
    options.base_digits = s.precision;
    const bool positive = a.real_table.has_value();
    const int count = positive ? *a.real_table : *a.negative_table;
    if (count < 1) throw DomainError("table size must be positive");
    points = real_spectrum_table(count, positive ? RealSign::positive : RealSign::negative, options);
    out.result["table"] = Json{{"sign", positive ? "positive" : "negative"}, {"count", count}};
  }
  Json list = Json::array();
  for (const SpectralPoint& p : points) list.push_back(to_json(p));
  out.result["count"] = points.size();
  out.result["points"] = list;
  if (a.format == "csv") out.csv = spectrum_csv(points);
  return out;
}

Outcome run_certify(const Settings& s, const CertifyArgs& a) {
  PrecisionScope scope(s.precision);
  CertReport r;
  if (a.lemma == "domination") {
    r = circle_domination(parse_real(a.q_abs, s.precision), a.k);
  } else if (a.lemma == "separ") {
    r = verify_lemma_separ(a.subdiv.value_or(s.subdiv_separ));
  } else if (a.lemma == "boxes") {
    r = verify_lemma_boxes(a.subdiv.value_or(s.subdiv_boxes));
  } else if (a.lemma == "homotopy") {
    r = verify_homotopy_bound(a.subdiv.value_or(s.subdiv_homotopy));
  } else if (a.lemma == "constants") {
    r = audit_theorem_constants();
  } else {
    throw DomainError("unknown lemma '" + a.lemma + "'");
  }
  Outcome out;
  out.result = to_json(r);
  // --strict also gates on the informational comparisons
  bool informational_ok = true;
  for (const CertCheck& c : r.checks)
    if (!c.gating && !c.passed()) informational_ok = false;
  out.result["strict"] = a.strict;
  if (r.status == CertStatus::failed || (a.strict && !informational_ok))
    out.exit_code = kFailed;
  else if (r.status == CertStatus::inconclusive)
    out.exit_code = kInconclusive;
  return out;
}

Outcome run_series(const Settings& s, const SeriesArgs& a) {
  PrecisionScope scope(s.precision);
  const IntLaurent series = compute_phi(a.k, a.order);
  Outcome out;
  out.result = to_json(series);
  bool residual_zero = true;
  for (const BigInt& c : substitution_residual(series, series.h_coeffs.size()))
    if (!c.is_zero()) residual_zero = false;
  out.result["residual_vanishes"] = residual_zero;

  // xi_k from the series against the located zero at q = 0.05
  const MPComplex q(Real("0.05"));
  const MPComplex from_series = evaluate_xi(series, q);
  const ZeroRecord located = find_xi(q, a.k, Real(0));
  const Real diff = abs(from_series - located.value);
  const Real bound = 10 * bmp::pow(Real("0.05"), a.order);
  const bool numeric_ok = diff <= bound;
  out.result["numeric_check"] = Json{{"q", "0.05"},
                                     {"xi_series", complex_json(from_series)},
                                     {"xi_located", complex_json(located.value)},
                                     {"difference", to_decimal(diff, 6)},
                                     {"bound", to_decimal(bound, 6)},
                                     {"holds", numeric_ok}};
  bool cauchy_ok = true;
  if (a.k >= 5) {
    const CauchyReport c = check_cauchy_bounds(series);
    out.result["cauchy"] = to_json(c);
    cauchy_ok = c.passed;
  }
  if (!residual_zero || !numeric_ok || !cauchy_ok) out.exit_code = kFailed;
  return out;
}

}  // namespace ptheta::cli
