#include <cmath>

#include "doctest.h"
#include "hcert/errors.hpp"
#include "hcert/spectral.hpp"
#include "oracles.hpp"

using namespace hcert;

namespace {

SpectralConfig iterative(SpectralMethod method, double tol = 1e-6) {
    SpectralConfig cfg;
    cfg.dense_threshold = 0;
    cfg.method = method;
    cfg.rel_tol = tol;
    return cfg;
}

}  // namespace

TEST_CASE("worked instance has spectral norm 1") {
    const Hypergraph h(3, 2, {{0, 1}});
    const CertificateOperator op(h, 0.5);
    CHECK(testing::dense_spectral_norm(testing::dense_operator(h, 0.5)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spectral_norm(op).value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(lanczos_norm(op, iterative(SpectralMethod::lanczos)).value == doctest::Approx(1.0).epsilon(1e-6));
    const auto power = power_iteration_norm(op, iterative(SpectralMethod::power, 1e-12));
    CHECK(power.converged);
    CHECK(power.value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("zero operator") {
    const CertificateOperator op(Hypergraph(6, 2), 0.0);
    for (auto cfg : {SpectralConfig{}, iterative(SpectralMethod::lanczos), iterative(SpectralMethod::power)}) {
        const auto r = spectral_norm(op, cfg);
        CHECK(r.converged);
        CHECK(r.value == 0.0);
    }
}

TEST_CASE("complete hypergraph meets the all-ones Rayleigh bound") {
    for (std::uint32_t k : {2U, 4U}) {
        const std::uint32_t n = 14;
        const double p = 0.4;
        const CertificateOperator op(complete_hypergraph(n, k), p);
        const double bound = (1 - p) * static_cast<double>(binomial(n, k)) *
                             static_cast<double>(binomial(k, k / 2)) / static_cast<double>(binomial(n, k / 2));
        CHECK(spectral_norm(op).value >= bound * (1 - 1e-12));
    }
}

TEST_CASE("iterative solvers against the dense eigensolve") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto h = sample({.k = 4, .n = 24, .p = 0.5, .seed = seed});
        const CertificateOperator op(h, 0.5);
        const double exact = testing::dense_spectral_norm(testing::dense_operator(h, 0.5));
        const auto lz = spectral_norm(op, iterative(SpectralMethod::lanczos));
        CHECK(lz.converged);
        CHECK(std::abs(lz.value - exact) <= 1e-6 * exact);
        CHECK(lz.value <= exact * (1 + 1e-12));  // Ritz values never overshoot

        // power iteration with its own stopping rule; a tight tolerance keeps it accurate
        const auto pw = spectral_norm(op, iterative(SpectralMethod::power, 1e-10));
        CHECK(pw.converged);
        CHECK(pw.value <= exact * (1 + 1e-12));
        CHECK(std::abs(pw.value - exact) <= 1e-4 * exact);
    }
}

TEST_CASE("iteration cap flags non-convergence") {
    const auto h = sample({.k = 4, .n = 24, .p = 0.5, .seed = 3});
    const CertificateOperator op(h, 0.5);
    auto cfg = iterative(SpectralMethod::power);
    cfg.max_iters = 2;
    const auto r = spectral_norm(op, cfg);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 2);
    CHECK(r.value <= testing::dense_spectral_norm(testing::dense_operator(h, 0.5)));

    auto lz = iterative(SpectralMethod::lanczos);
    lz.max_iters = 3;
    CHECK_FALSE(spectral_norm(op, lz).converged);
    CHECK_THROWS_AS(base_certificate(h, 0.5, lz), CertificateRefused);
}

TEST_CASE("formula values on the worked instance") {
    const Hypergraph h(3, 2, {{0, 1}});
    CHECK(omega_from_norm(1.0, 2, 0.5, Formula::paper) == doctest::Approx(4.0 * std::sqrt(2.0)));
    CHECK(omega_from_norm(1.0, 2, 0.5, Formula::tight) == doctest::Approx(2.0 * std::sqrt(2.0)));
    const auto paper = base_certificate(h, 0.5);
    CHECK(paper.omega_alg == 3.0);
    CHECK(paper.spectral_norm == doctest::Approx(1.0));
    const auto tight = base_certificate(h, 0.5, {}, Formula::tight);
    CHECK(tight.omega_alg == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-5));
    CHECK(tight.omega_alg >= 2.0);  // oracle omega of this instance
}

TEST_CASE("omega_from_norm is strictly increasing in the norm") {
    for (auto f : {Formula::paper, Formula::tight}) {
        for (std::uint32_t k : {2U, 4U, 6U}) {
            double prev = omega_from_norm(0.0, k, 0.3, f);
            for (double s = 0.01; s < 100; s *= 1.3) {
                const double cur = omega_from_norm(s, k, 0.3, f);
                CHECK(cur > prev);
                prev = cur;
            }
        }
    }
}

TEST_CASE("empty hypergraph certificate respects the k-1 floor") {
    for (std::uint32_t k : {2U, 4U, 6U}) {
        const auto c = base_certificate(Hypergraph(10, k), 0.5);
        CHECK(c.omega_alg >= k - 1.0);
        CHECK(c.omega_alg <= 10.0);
    }
    CHECK(base_certificate(Hypergraph(10, 4), 0.0).omega_alg == 3.0);
}

TEST_CASE("property: clique indicator Rayleigh quotient and completeness") {
    for (std::uint32_t k : {2U, 4U}) {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            const auto h = sample({.k = k, .n = 13, .p = 0.6, .seed = seed, .planted_size = 7});
            const auto oracle = max_clique_oracle(h);
            REQUIRE(oracle.conclusive);
            const Eigen::MatrixXd a = testing::dense_operator(h, 0.6);
            const auto rows = testing::all_subsets_of_size(13, k / 2);
            Eigen::VectorXd x = Eigen::VectorXd::Zero(a.rows());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                x[static_cast<Eigen::Index>(r)] = std::includes(oracle.witness.begin(), oracle.witness.end(),
                                                                rows[r].begin(), rows[r].end());
            }
            const double rayleigh = x.dot(a * x) / x.squaredNorm();
            for (auto f : {Formula::paper, Formula::tight}) {
                const auto c = base_certificate(h, 0.6, {}, f);
                CHECK(c.spectral_norm >= rayleigh * (1 - 1e-9));
                CHECK(c.omega_alg >= static_cast<double>(oracle.omega));
            }
        }
    }
}

TEST_CASE("parse helpers") {
    CHECK(parse_formula("tight") == Formula::tight);
    CHECK_THROWS_AS(parse_formula("loose"), InputError);
    CHECK(parse_spectral_method("power") == SpectralMethod::power);
    CHECK_THROWS_AS(parse_spectral_method("arnoldi"), InputError);
}
