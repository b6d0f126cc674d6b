#include "hcert/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "hcert/errors.hpp"
#include "hcert/rng.hpp"

namespace hcert {

namespace {

double squared_norm(const std::vector<double>& v) {
    double acc = 0.0;
    for (double e : v) acc += e * e;
    return acc;
}

void scale(std::vector<double>& v, double factor) {
    for (double& e : v) e *= factor;
}

}  // namespace

SpectralResult dense_norm(const CertificateOperator& op) {
    SpectralResult out;
    out.dense = true;
    out.converged = true;
    if (op.dim() == 0) return out;
    const Eigen::MatrixXd a = op.dense();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        out.converged = false;
        return out;
    }
    const auto& ev = solver.eigenvalues();
    out.value = std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
    return out;
}

SpectralResult power_iteration_norm(const CertificateOperator& op, const SpectralConfig& cfg) {
    if (!(cfg.rel_tol > 0.0)) throw InputError("rel_tol must be positive");
    SpectralResult out;
    const Rank d = op.dim();
    if (d == 0) {
        out.converged = true;
        return out;
    }
    const std::uint64_t max_iters = cfg.max_iters.value_or(10 * d + 1000);
    if (max_iters < 1) throw InputError("max_iters must be at least 1");

    std::vector<double> x(d);
    for (Rank i = 0; i < d; ++i) x[i] = 2.0 * keyed_uniform(cfg.solver_seed, i) - 1.0;
    scale(x, 1.0 / std::sqrt(squared_norm(x)));
    std::vector<double> y(d);
    std::vector<double> z(d);

    // x has unit norm, so ||A x||^2 is the Rayleigh quotient of A^2 at x.
    double estimate = 0.0;
    for (std::uint64_t it = 1; it <= max_iters; ++it) {
        op.apply(x, y);
        const double theta = squared_norm(y);
        out.iterations = it;
        if (theta == 0.0) {
            // x is in the null space of A; nothing left to amplify from this start.
            out.converged = estimate == 0.0;
            break;
        }
        const double prev = estimate;
        estimate = std::max(estimate, theta);
        if (it > 1 && std::abs(theta - prev) < cfg.rel_tol * theta) {
            out.converged = true;
            break;
        }
        op.apply(y, z);
        const double zn = std::sqrt(squared_norm(z));
        if (zn == 0.0) {
            out.converged = true;
            break;
        }
        x.swap(z);
        scale(x, 1.0 / zn);
    }
    out.value = std::sqrt(estimate);
    return out;
}

SpectralResult lanczos_norm(const CertificateOperator& op, const SpectralConfig& cfg) {
    if (!(cfg.rel_tol > 0.0)) throw InputError("rel_tol must be positive");
    SpectralResult out;
    const Rank d = op.dim();
    if (d == 0) {
        out.converged = true;
        return out;
    }
    const std::uint64_t cap = std::min<std::uint64_t>(cfg.max_iters.value_or(10 * d + 1000), d);
    if (cap < 1) throw InputError("max_iters must be at least 1");

    const auto dim = static_cast<Eigen::Index>(d);
    Eigen::MatrixXd basis(dim, static_cast<Eigen::Index>(std::min<std::uint64_t>(cap, 64)));
    std::vector<double> alpha;
    std::vector<double> beta;  // beta[j] couples basis columns j and j+1

    Eigen::VectorXd q(dim);
    for (Eigen::Index i = 0; i < dim; ++i) q[i] = 2.0 * keyed_uniform(cfg.solver_seed, static_cast<Rank>(i)) - 1.0;
    q.normalize();
    Eigen::VectorXd w(dim);

    for (std::uint64_t m = 0; m < cap; ++m) {
        const auto col = static_cast<Eigen::Index>(m);
        if (col >= basis.cols()) basis.conservativeResize(Eigen::NoChange, std::min<Eigen::Index>(2 * basis.cols(), static_cast<Eigen::Index>(cap)));
        basis.col(col) = q;
        op.apply({q.data(), d}, {w.data(), d});
        out.iterations = m + 1;

        const double a = q.dot(w);
        alpha.push_back(a);
        // two passes of classical Gram-Schmidt against the whole basis
        for (int pass = 0; pass < 2; ++pass) {
            const Eigen::VectorXd coeff = basis.leftCols(col + 1).transpose() * w;
            w.noalias() -= basis.leftCols(col + 1) * coeff;
        }
        const double b = w.norm();

        const auto size = static_cast<Eigen::Index>(alpha.size());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), size);
        Eigen::VectorXd sub = Eigen::Map<const Eigen::VectorXd>(beta.data(), size - 1);
        tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        const auto& theta = tri.eigenvalues();
        const double top = std::max(std::abs(theta[0]), std::abs(theta[size - 1]));
        // residual of Ritz pair j is b * |last component of its eigenvector|
        const double res_low = b * std::abs(tri.eigenvectors()(size - 1, 0));
        const double res_high = b * std::abs(tri.eigenvectors()(size - 1, size - 1));
        out.value = top;

        const double scale_ref = std::max(top, std::numeric_limits<double>::min());
        const bool invariant = b <= 1e-13 * std::max(scale_ref, 1.0);
        if (invariant || (m + 1 >= 2 && std::max(res_low, res_high) <= cfg.rel_tol * scale_ref) || m + 1 == d) {
            out.converged = true;
            break;
        }
        beta.push_back(b);
        q = w / b;
    }
    return out;
}

SpectralResult spectral_norm(const CertificateOperator& op, const SpectralConfig& cfg) {
    if (!(cfg.rel_tol > 0.0)) throw InputError("rel_tol must be positive");
    if (op.dim() <= cfg.dense_threshold) return dense_norm(op);
    return cfg.method == SpectralMethod::lanczos ? lanczos_norm(op, cfg) : power_iteration_norm(op, cfg);
}

std::string_view to_string(SpectralMethod m) { return m == SpectralMethod::lanczos ? "lanczos" : "power"; }

SpectralMethod parse_spectral_method(std::string_view name) {
    if (name == "lanczos") return SpectralMethod::lanczos;
    if (name == "power") return SpectralMethod::power;
    throw InputError("unknown spectral method '" + std::string(name) + "' (expected lanczos or power)");
}

std::string_view to_string(Formula f) { return f == Formula::paper ? "paper" : "tight"; }

Formula parse_formula(std::string_view name) {
    if (name == "paper") return Formula::paper;
    if (name == "tight") return Formula::tight;
    throw InputError("unknown formula '" + std::string(name) + "' (expected paper or tight)");
}

double omega_from_norm(double s, std::uint32_t k, double p, Formula formula) {
    const double central = static_cast<double>(binomial(k, k / 2));
    const double base = s * s / ((1.0 - p) * (1.0 - p));
    const double inner = formula == Formula::paper ? central * base : base / central;
    return static_cast<double>(k) * std::pow(inner, 1.0 / static_cast<double>(k));
}

double clamp_omega(double raw, std::uint32_t n, std::uint32_t k) {
    return std::min(static_cast<double>(n), std::max(static_cast<double>(k) - 1.0, raw));
}

BaseCertificate base_certificate(const Hypergraph& h, double p, const SpectralConfig& cfg, Formula formula) {
    const CertificateOperator op(h, p);
    const SpectralResult s = spectral_norm(op, cfg);
    if (!s.converged) {
        throw CertificateRefused("spectral norm did not converge within " + std::to_string(s.iterations) +
                                 " iterations (D=" + std::to_string(op.dim()) + ")");
    }
    BaseCertificate out;
    out.spectral_norm = s.value;
    out.formula = formula;
    out.iterations_used = s.iterations;
    out.converged = true;
    out.dim = op.dim();
    out.omega_alg = clamp_omega(omega_from_norm(s.value * (1.0 + cfg.rel_tol), h.k(), p, formula), h.n(), h.k());
    return out;
}

}  // namespace hcert
