#include "records.hpp"

#include "ptheta/errors.hpp"

#include <sstream>

namespace ptheta::cli {

Json real_json(const Real& x) { return to_decimal(x); }

Json complex_json(const MPComplex& z) { return Json{{"re", to_decimal(z.re())}, {"im", to_decimal(z.im())}}; }

Json to_json(const ThetaValue& v) {
  return Json{{"value", complex_json(v.value)}, {"tail", real_json(v.tail)}, {"terms_used", v.terms_used}};
}

Json to_json(const ThetaJet& j) {
  Json out;
  out["value"] = complex_json(j.value);
  out["dz"] = complex_json(j.dz);
  out["dzz"] = complex_json(j.dzz);
  out["dq"] = complex_json(j.dq);
  out["dqz"] = complex_json(j.dqz);
  out["theta_star"] = complex_json(j.theta_star);
  out["tail"] = Json{{"value", real_json(j.tail.value)}, {"dz", real_json(j.tail.dz)},
                     {"dzz", real_json(j.tail.dzz)},     {"dq", real_json(j.tail.dq)},
                     {"dqz", real_json(j.tail.dqz)},     {"theta_star", real_json(j.tail.theta_star)}};
  out["terms_used"] = j.terms_used;
  return out;
}

Json to_json(const ZeroRecord& r) {
  Json out;
  if (r.k == ZeroRecord::kInner)
    out["k"] = "inner";
  else
    out["k"] = r.k;
  // an empty annulus has no zero to report
  if (r.annulus_count == 0) {
    out["value"] = nullptr;
    out["modulus"] = nullptr;
  } else {
    out["value"] = complex_json(r.value);
    out["modulus"] = real_json(abs(r.value));
  }
  out["residual"] = real_json(r.residual);
  out["newton_steps"] = r.newton_steps;
  out["separated"] = r.separated;
  out["annulus_count"] = r.annulus_count;
  if (!r.cluster.empty()) {
    Json c = Json::array();
    for (const MPComplex& z : r.cluster) c.push_back(complex_json(z));
    out["cluster"] = c;
  }
  return out;
}

Json to_json(const SeparationCertificate& c) {
  return Json{{"q", complex_json(c.q)},
              {"k_start", c.k_start},
              {"method", to_string(c.method)},
              {"route", c.route},
              {"n", c.n},
              {"margin", real_json(c.margin)},
              {"circles_from", c.circles_from},
              {"circles_to", c.circles_to},
              {"valid", c.valid()}};
}

Json to_json(const SpectralPoint& p) {
  Json out;
  out["q"] = complex_json(p.q);
  out["modulus"] = real_json(abs(p.q));
  out["z_double"] = complex_json(p.z_double);
  out["kind"] = to_string(p.kind);
  out["residual_theta"] = real_json(p.residual_theta);
  out["residual_theta_z"] = real_json(p.residual_theta_z);
  out["theta_zz_abs"] = real_json(p.theta_zz_abs);
  out["truncation_s"] = p.truncation_s;
  out["refined_with_full_series"] = p.refined_with_full_series;
  out["newton_steps"] = p.newton_steps;
  out["validated"] = p.validated;
  return out;
}

Json to_json(const CertReport& r) {
  Json out;
  out["lemma_id"] = r.lemma_id;
  out["status"] = to_string(r.status);
  out["passed"] = r.passed();
  out["worst_margin"] = real_json(r.worst_margin);
  out["subdivision_depth"] = r.subdivision_depth;
  out["cells_checked"] = r.cells_checked;
  Json checks = Json::array();
  for (const CertCheck& c : r.checks)
    checks.push_back(Json{{"name", c.name},
                          {"value", real_json(c.value)},
                          {"reference", c.reference},
                          {"margin", real_json(c.margin)},
                          {"holds", c.passed()},
                          {"gating", c.gating}});
  out["checks"] = checks;
  return out;
}

namespace {

Json integers(const IntSeries& s) {
  Json a = Json::array();
  for (const BigInt& c : s) a.push_back(c.str());
  return a;
}

}  // namespace

Json to_json(const IntLaurent& s) {
  return Json{{"k", s.k}, {"order", s.order}, {"phi_coeffs", integers(s.phi_coeffs)}, {"h_coeffs", integers(s.h_coeffs)}};
}

Json to_json(const CauchyReport& r) {
  Json entries = Json::array();
  for (const CauchyEntry& e : r.entries)
    entries.push_back(Json{{"j", e.j}, {"h", e.h.str()}, {"bound", to_decimal(e.bound, 12)}, {"margin", to_decimal(e.margin, 12)}});
  return Json{{"k", r.k}, {"passed", r.passed}, {"entries", entries}};
}

std::string spectrum_csv(const std::vector<SpectralPoint>& points) {
  std::ostringstream out;
  out << "index,kind,q_re,q_im,modulus,z_re,z_im,residual_theta,residual_theta_z,validated\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const SpectralPoint& p = points[i];
    out << i + 1 << ',' << to_string(p.kind) << ',' << to_decimal(p.q.re()) << ',' << to_decimal(p.q.im()) << ','
        << to_decimal(abs(p.q)) << ',' << to_decimal(p.z_double.re()) << ',' << to_decimal(p.z_double.im()) << ','
        << to_decimal(p.residual_theta, 6) << ',' << to_decimal(p.residual_theta_z, 6) << ','
        << (p.validated ? "true" : "false") << '\n';
  }
  return out.str();
}

MPComplex parse_complex(const std::string& text, int digits) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  if (t.empty()) throw ParseError("empty complex number");
  if (auto comma = t.find(','); comma != std::string::npos)
    return MPComplex(parse_real(t.substr(0, comma), digits), parse_real(t.substr(comma + 1), digits));
  if (t.back() != 'i') return MPComplex(parse_real(t, digits), Real(0));
  t.pop_back();
  // split at the last sign that is not a leading sign or part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t i = t.size(); i-- > 1;)
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      split = i;
      break;
    }
  auto imag = [&](std::string s) {
    if (s.empty() || s == "+") return Real(1);
    if (s == "-") return Real(-1);
    return parse_real(s, digits);
  };
  if (split == std::string::npos) return MPComplex(Real(0), imag(t));
  return MPComplex(parse_real(t.substr(0, split), digits), imag(t.substr(split)));
}

}  // namespace ptheta::cli
