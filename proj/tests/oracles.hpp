#pragma once

// Test-only reference computations, written straight from the definitions and
// independent of the library's kernels.

#include <algorithm>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "hcert/hypergraph.hpp"

namespace hcert::testing {

inline std::vector<std::vector<Vertex>> all_subsets_of_size(std::uint32_t n, std::uint32_t t) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur;
    auto grow = [&](auto&& self, Vertex from) -> void {
        if (cur.size() == t) {
            out.push_back(cur);
            return;
        }
        for (Vertex v = from; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    grow(grow, 0);
    // colex: compare from the largest element down
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

/// A(S,T) from the definition: disjoint S,T contribute 1-p on edges and -p off edges.
inline Eigen::MatrixXd dense_operator(const Hypergraph& h, double p) {
    const auto rows = all_subsets_of_size(h.n(), h.k() / 2);
    const auto dim = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            std::vector<Vertex> both;
            std::set_union(rows[i].begin(), rows[i].end(), rows[j].begin(), rows[j].end(), std::back_inserter(both));
            if (both.size() != h.k()) continue;
            a(i, j) = h.contains(both) ? 1.0 - p : -p;
        }
    }
    return a;
}

inline double dense_spectral_norm(const Eigen::MatrixXd& a) {
    if (a.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    return std::max(std::abs(es.eigenvalues().minCoeff()), std::abs(es.eigenvalues().maxCoeff()));
}

/// Clique number by checking every vertex subset, largest first (n <= ~16).
inline std::uint32_t exhaustive_clique_number(const Hypergraph& h) {
    const std::uint32_t n = h.n();
    for (std::uint32_t size = n; size > 0; --size) {
        for (const auto& s : all_subsets_of_size(n, size)) {
            bool ok = true;
            if (size >= h.k()) {
                for (const auto& pick : all_subsets_of_size(size, h.k())) {
                    std::vector<Vertex> e;
                    for (Vertex idx : pick) e.push_back(s[idx]);
                    if (!h.contains(e)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) return size;
        }
    }
    return 0;
}

}  // namespace hcert::testing
