#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "hcert/certificate_operator.hpp"
#include "hcert/hypergraph.hpp"

namespace hcert {

enum class SpectralMethod { lanczos, power };

struct SpectralConfig {
    double rel_tol = 1e-6;
    SpectralMethod method = SpectralMethod::lanczos;  // iterative method above dense_threshold
    std::optional<std::uint64_t> max_iters;  // default 10*D + 1000
    std::uint64_t solver_seed = 0x5eedULL;
    Rank dense_threshold = 512;
};

struct SpectralResult {
    double value = 0.0;
    bool converged = false;
    std::uint64_t iterations = 0;
    bool dense = false;
};

/// Largest |eigenvalue| of the symmetric operator. Dense eigensolve up to
/// cfg.dense_threshold, cfg.method above it. When the iteration cap is hit the
/// value is a lower bound and converged is false.
SpectralResult spectral_norm(const CertificateOperator& op, const SpectralConfig& cfg = {});

/// Power iteration on A^2; stops when successive estimates of ||A||^2 move by
/// less than rel_tol relative.
SpectralResult power_iteration_norm(const CertificateOperator& op, const SpectralConfig& cfg);

/// Lanczos with full reorthogonalization. Stops once both extreme Ritz pairs
/// have residual below rel_tol * |largest Ritz value|.
SpectralResult lanczos_norm(const CertificateOperator& op, const SpectralConfig& cfg);

std::string_view to_string(SpectralMethod m);
SpectralMethod parse_spectral_method(std::string_view name);

/// Dense symmetric eigensolve regardless of dimension.
SpectralResult dense_norm(const CertificateOperator& op);

enum class Formula { paper, tight };

std::string_view to_string(Formula f);
Formula parse_formula(std::string_view name);

/// Clique bound before clamping:
///   paper: k * (C(k,k/2) * s^2 / (1-p)^2)^(1/k)
///   tight: k * (s^2 / ((1-p)^2 * C(k,k/2)))^(1/k)
double omega_from_norm(double s, std::uint32_t k, double p, Formula formula);

struct BaseCertificate {
    double omega_alg = 0.0;
    double spectral_norm = 0.0;
    Formula formula = Formula::paper;
    std::uint64_t iterations_used = 0;
    bool converged = false;
    Rank dim = 0;
};

/// min(n, max(k-1, omega_from_norm(s * (1 + rel_tol)))) for the even-k operator of h.
/// Throws CertificateRefused when the eigensolve does not converge.
BaseCertificate base_certificate(const Hypergraph& h, double p, const SpectralConfig& cfg = {},
                                 Formula formula = Formula::paper);

/// The clamp applied to a raw bound for a hypergraph with n vertices and uniformity k.
double clamp_omega(double raw, std::uint32_t n, std::uint32_t k);

}  // namespace hcert
