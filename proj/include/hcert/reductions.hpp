#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "hcert/hypergraph.hpp"
#include "hcert/spectral.hpp"

namespace hcert {

struct CertificateParams {
    double p = 0.5;
    std::uint32_t d = 0;  // 0: basic algorithm only
    Formula formula = Formula::paper;
    SpectralConfig spectral;
    int threads = 0;  // 0: OpenMP default
    /// Refuse when estimate_work() exceeds this many floating-point operations.
    double work_budget = std::numeric_limits<double>::infinity();
    /// Constant in front of the reported theorem_bound expression.
    double theorem_constant = 1.0;
};

/// One sub-certificate: a J-subset of the even-k reduction or a link vertex.
struct BranchRecord {
    Subset id;
    bool is_vertex = false;
    std::uint32_t size = 0;  // |V_J| or n-1
    double value = 0.0;
    double spectral_norm = 0.0;
    bool converged = true;
    std::uint64_t iterations = 0;
};

struct CertificateReport {
    double omega_alg = 0.0;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t k_prime = 0;
    std::uint32_t d = 0;
    double p = 0.0;
    Formula formula = Formula::paper;
    std::vector<BranchRecord> per_branch;
    double wall_ms = 0.0;
    double theorem_bound = 0.0;
    double theorem_constant = 1.0;

    /// Largest spectral norm over all branches.
    double max_spectral_norm() const;
};

/// Even k: d + max over J in C([n],d) of the base certificate of H_J (k-1 when V_J is empty).
CertificateReport certify_even(const Hypergraph& h, const CertificateParams& params);

/// Odd k >= 3: 1 + max over vertices i of certify_even(link(H, i)).
CertificateReport certify_odd(const Hypergraph& h, const CertificateParams& params);

/// Dispatches on the parity of k.
CertificateReport certify(const Hypergraph& h, const CertificateParams& params);

/// Rough floating-point operation count for certify(); used by the runtime guard.
double estimate_work(std::uint32_t n, std::uint32_t k, std::uint32_t d, const SpectralConfig& spectral = {});

/// d + C k (d' log^2 n / (1-p))^(2/k') sqrt(max(n p^C(d,k'-1), d' log n)) with d' = max(d, 1).
double theorem_bound(std::uint32_t n, std::uint32_t k, double p, std::uint32_t d, double constant = 1.0);

/// The branch value a base certificate would give under `formula`, from its recorded norm.
double rescore_branch(const BranchRecord& branch, std::uint32_t k_prime, double p, Formula formula, double rel_tol);

}  // namespace hcert
