#pragma once

#include <string>

#include "hcert/reductions.hpp"

namespace hcert {

/// Pretty-printed JSON for a certificate report (trailing newline included).
std::string to_json(const CertificateReport& report, const CertificateParams& params);

}  // namespace hcert
