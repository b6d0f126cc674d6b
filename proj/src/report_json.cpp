#include "hcert/report_json.hpp"

#include "json.hpp"

namespace hcert {

std::string to_json(const CertificateReport& report, const CertificateParams& params) {
    nlohmann::ordered_json doc;
    doc["omega_alg"] = report.omega_alg;
    doc["n"] = report.n;
    doc["k"] = report.k;
    doc["k_prime"] = report.k_prime;
    doc["d"] = report.d;
    doc["p"] = report.p;
    doc["formula"] = std::string(to_string(report.formula));
    doc["spectral_norm"] = report.max_spectral_norm();
    doc["rel_tol"] = params.spectral.rel_tol;
    doc["method"] = std::string(to_string(params.spectral.method));
    doc["theorem_bound"] = report.theorem_bound;
    doc["theorem_constant"] = report.theorem_constant;
    doc["wall_time_ms"] = report.wall_ms;
    auto& branches = doc["per_branch"] = nlohmann::ordered_json::array();
    for (const auto& b : report.per_branch) {
        nlohmann::ordered_json entry;
        entry["kind"] = b.is_vertex ? "vertex" : "subset";
        entry["id"] = b.id;
        entry["size"] = b.size;
        entry["value"] = b.value;
        entry["spectral_norm"] = b.spectral_norm;
        entry["converged"] = b.converged;
        entry["iterations"] = b.iterations;
        branches.push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

}  // namespace hcert
