#pragma once

#include "ptheta/certifier.hpp"
#include "ptheta/laurent.hpp"
#include "ptheta/spectral.hpp"
#include "ptheta/theta.hpp"
#include "ptheta/zeros.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ptheta::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "ptheta/1";

// Numbers travel as decimal strings so no digit is lost to binary64.
Json real_json(const Real& x);
Json complex_json(const MPComplex& z);

Json to_json(const ThetaValue& v);
Json to_json(const ThetaJet& j);
Json to_json(const ZeroRecord& r);
Json to_json(const SeparationCertificate& c);
Json to_json(const SpectralPoint& p);
Json to_json(const CertReport& r);
Json to_json(const IntLaurent& s);
Json to_json(const CauchyReport& r);

std::string spectrum_csv(const std::vector<SpectralPoint>& points);

// Parses "a", "a+bi", "a-bi", "bi" or "a,b".
MPComplex parse_complex(const std::string& text, int digits);

}  // namespace ptheta::cli
