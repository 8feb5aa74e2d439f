#pragma once

#include "ptheta/certifier.hpp"

namespace ptheta::detail {

// Sets worst_margin over gating checks and the status; inconclusive wins over passed.
void finalize(CertReport& r, bool inconclusive = false);

CertCheck relative_check(std::string name, const Real& value, const char* reference, const Real& rel_tol);
// value must lie strictly inside (lo, hi)
CertCheck interval_check(std::string name, const Interval& value, const Real& lo, const Real& hi);
CertCheck below_check(std::string name, const Real& value, const Real& limit, std::string reference);

}  // namespace ptheta::detail
