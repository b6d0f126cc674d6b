#include "hcert/reductions.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <sstream>
#include <string>

#include <omp.h>

#include "hcert/errors.hpp"

namespace hcert {

double CertificateReport::max_spectral_norm() const {
    double best = 0.0;
    for (const auto& b : per_branch) best = std::max(best, b.spectral_norm);
    return best;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_params(const Hypergraph& h, const CertificateParams& params) {
    if (!(params.p >= 0.0 && params.p < 1.0)) throw InputError("p must satisfy 0 <= p < 1");
    if (params.d > h.n()) {
        throw InputError("d=" + std::to_string(params.d) + " exceeds n=" + std::to_string(h.n()));
    }
    if (!(params.spectral.rel_tol > 0.0)) throw InputError("rel_tol must be positive");
}

void check_budget(const Hypergraph& h, const CertificateParams& params) {
    const double work = estimate_work(h.n(), h.k(), params.d, params.spectral);
    if (work > params.work_budget) {
        std::ostringstream msg;
        msg << "estimated work " << work << " flops exceeds budget " << params.work_budget << " (n=" << h.n()
            << ", k=" << h.k() << ", d=" << params.d << ")";
        throw CertificateRefused(msg.str());
    }
}

// Runs body(i) for i in [0, count) and rethrows the first failure by index.
template <class Body>
void parallel_branches(std::uint64_t count, int threads, Body&& body) {
    std::vector<std::exception_ptr> errors(count);
    const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
        try {
            body(static_cast<std::uint64_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

CertificateReport even_unchecked(const Hypergraph& h, const CertificateParams& params) {
    const auto start = Clock::now();
    CertificateReport report;
    report.n = h.n();
    report.k = h.k();
    report.k_prime = h.k();
    report.d = params.d;
    report.p = params.p;
    report.formula = params.formula;
    report.theorem_constant = params.theorem_constant;
    report.theorem_bound = theorem_bound(h.n(), h.k(), params.p, params.d, params.theorem_constant);

    if (params.d == 0) {
        const BaseCertificate base = base_certificate(h, params.p, params.spectral, params.formula);
        report.per_branch.push_back({.id = {},
                                     .is_vertex = false,
                                     .size = h.n(),
                                     .value = base.omega_alg,
                                     .spectral_norm = base.spectral_norm,
                                     .converged = base.converged,
                                     .iterations = base.iterations_used});
        report.omega_alg = base.omega_alg;
        report.wall_ms = elapsed_ms(start);
        return report;
    }

    const SubsetCodec subsets(h.n(), params.d);
    report.per_branch.resize(subsets.dim());
    parallel_branches(subsets.dim(), params.threads, [&](std::uint64_t r) {
        BranchRecord& branch = report.per_branch[r];
        branch.id = subsets.unrank(r);
        const FilterResult filtered = filter_and_induce(h, branch.id);
        branch.size = static_cast<std::uint32_t>(filtered.common.size());
        if (filtered.common.empty()) {
            branch.value = static_cast<double>(h.k()) - 1.0;
            return;
        }
        const BaseCertificate base = base_certificate(filtered.induced, params.p, params.spectral, params.formula);
        branch.value = base.omega_alg;
        branch.spectral_norm = base.spectral_norm;
        branch.converged = base.converged;
        branch.iterations = base.iterations_used;
    });

    double best = 0.0;
    for (const auto& b : report.per_branch) best = std::max(best, b.value);
    report.omega_alg = std::min(static_cast<double>(h.n()), static_cast<double>(params.d) + best);
    report.wall_ms = elapsed_ms(start);
    return report;
}

}  // namespace

CertificateReport certify_even(const Hypergraph& h, const CertificateParams& params) {
    if (h.k() < 2 || h.k() % 2 != 0) throw InputError("certify_even needs even k >= 2");
    check_params(h, params);
    check_budget(h, params);
    return even_unchecked(h, params);
}

CertificateReport certify_odd(const Hypergraph& h, const CertificateParams& params) {
    if (h.k() < 3 || h.k() % 2 == 0) throw InputError("certify_odd needs odd k >= 3");
    check_params(h, params);
    check_budget(h, params);
    const auto start = Clock::now();

    CertificateReport report;
    report.n = h.n();
    report.k = h.k();
    report.k_prime = h.k() - 1;
    report.d = params.d;
    report.p = params.p;
    report.formula = params.formula;
    report.theorem_constant = params.theorem_constant;
    report.theorem_bound = theorem_bound(h.n(), h.k(), params.p, params.d, params.theorem_constant);
    if (h.n() == 0) {
        report.wall_ms = elapsed_ms(start);
        return report;
    }

    CertificateParams inner = params;
    inner.threads = 1;  // parallelism lives at the vertex level
    report.per_branch.resize(h.n());
    parallel_branches(h.n(), params.threads, [&](std::uint64_t i) {
        BranchRecord& branch = report.per_branch[i];
        branch.id = {static_cast<Vertex>(i)};
        branch.is_vertex = true;
        branch.size = h.n() - 1;
        const Hypergraph linked = link(h, static_cast<Vertex>(i));
        if (params.d > linked.n()) {
            // no d-subsets of the link's vertex set; its clique number is at most n-1
            branch.value = static_cast<double>(linked.n());
            return;
        }
        const CertificateReport sub = even_unchecked(linked, inner);
        branch.value = sub.omega_alg;
        branch.spectral_norm = sub.max_spectral_norm();
        branch.iterations = 0;
        for (const auto& b : sub.per_branch) branch.iterations += b.iterations;
    });

    double best = 0.0;
    for (const auto& b : report.per_branch) best = std::max(best, b.value);
    report.omega_alg = std::min(static_cast<double>(h.n()), 1.0 + best);
    report.wall_ms = elapsed_ms(start);
    return report;
}

CertificateReport certify(const Hypergraph& h, const CertificateParams& params) {
    if (h.k() < 2) throw InputError("certify needs k >= 2");
    return h.k() % 2 == 0 ? certify_even(h, params) : certify_odd(h, params);
}

double estimate_work(std::uint32_t n, std::uint32_t k, std::uint32_t d, const SpectralConfig& spectral) {
    const bool odd = k % 2 == 1;
    const double nn = odd ? n - 1.0 : static_cast<double>(n);
    const double kk = odd ? k - 1.0 : static_cast<double>(k);
    const double half = kk / 2.0;
    const double dim = binomial_real(nn, half);
    double branch_cost = 0.0;
    if (dim <= static_cast<double>(spectral.dense_threshold)) {
        branch_cost = 4.0 * dim * dim * dim;
    } else {
        constexpr double kTypicalSteps = 300.0;
        const double nnz = binomial_real(nn, kk) * binomial_real(kk, half);
        branch_cost = kTypicalSteps * 2.0 * (nnz + dim * std::pow(2.0, half) * half);
    }
    const double branches = (d == 0 ? 1.0 : binomial_real(nn, d)) * (odd ? static_cast<double>(n) : 1.0);
    return branches * branch_cost;
}

double theorem_bound(std::uint32_t n, std::uint32_t k, double p, std::uint32_t d, double constant) {
    if (n < 2) return static_cast<double>(d);
    const std::uint32_t kp = k % 2 == 0 ? k : k - 1;
    const double log_n = std::log(static_cast<double>(n));
    const double dd = std::max<double>(d, 1.0);
    const double damping = std::pow(p, binomial_real(d, kp - 1.0));
    const double width = std::sqrt(std::max(n * damping, dd * log_n));
    return d + constant * k * std::pow(dd * log_n * log_n / (1.0 - p), 2.0 / kp) * width;
}

double rescore_branch(const BranchRecord& branch, std::uint32_t k_prime, double p, Formula formula, double rel_tol) {
    if (branch.size == 0) return static_cast<double>(k_prime) - 1.0;
    return clamp_omega(omega_from_norm(branch.spectral_norm * (1.0 + rel_tol), k_prime, p, formula), branch.size,
                       k_prime);
}

}  // namespace hcert
