#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hcert/combinatorics.hpp"
#include "hcert/hypergraph.hpp"

namespace hcert {

/// Implicit symmetric matrix over the (k/2)-subsets of [n]:
///
///   A(S,T) = 1-p  if S,T disjoint and S+T is an edge,
///           -p    if S,T disjoint and S+T is not an edge,
///            0    otherwise.
///
/// apply() is the OpenMP kernel used by the solvers; apply_reference() is the
/// serial scatter formulation kept as a cross-check.
class CertificateOperator {
public:
    /// Largest dimension that will be materialized by dense().
    static constexpr Rank kMaxDenseDim = 8192;

    CertificateOperator(const Hypergraph& h, double p);

    Rank dim() const noexcept { return empty_ ? 0 : codec_.dim(); }
    std::uint32_t n() const noexcept { return n_; }
    std::uint32_t k() const noexcept { return k_; }
    std::uint32_t half() const noexcept { return half_; }
    double p() const noexcept { return p_; }
    const SubsetCodec& codec() const noexcept { return codec_; }
    std::size_t edge_entries() const noexcept { return cols_.size(); }

    /// y = A x. Rows are independent, so results do not depend on the thread count.
    void apply(std::span<const double> x, std::span<double> y) const;

    /// y = A x computed serially: edge scatter plus inclusion-exclusion over
    /// superset sums accumulated by scatter.
    void apply_reference(std::span<const double> x, std::span<double> y) const;

    Eigen::MatrixXd dense() const;

private:
    Rank sub_rank(std::span<const Vertex> items, unsigned mask) const noexcept;
    void check_dims(std::span<const double> x, std::span<double> y) const;
    /// Superset sums g_u(U) = sum_{T superset of U} x_T for u = 0..half, by gathering level by level.
    void superset_sums(std::span<const double> x, std::vector<std::vector<double>>& levels) const;
    double disjoint_sum(std::span<const Vertex> row, const std::vector<std::vector<double>>& levels) const;

    std::uint32_t n_;
    std::uint32_t k_;
    std::uint32_t half_;
    double p_;
    bool empty_ = false;
    SubsetCodec codec_;
    std::vector<Vertex> edges_;              // flat copy of the hypergraph's edges
    std::vector<std::uint64_t> row_start_;   // CSR of the edge term, one row per (k/2)-subset
    std::vector<std::uint32_t> cols_;
    std::vector<std::vector<std::uint32_t>> up_;  // up_[u][U*(n-u)+j]: rank of U + (j-th vertex outside U)
    std::vector<Vertex> rows_;               // unranked (k/2)-subsets, flat
};

}  // namespace hcert
