#include "hcert/certificate_operator.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "hcert/errors.hpp"

namespace hcert {

Rank CertificateOperator::sub_rank(std::span<const Vertex> items, unsigned mask) const noexcept {
    Rank r = 0;
    std::uint32_t pos = 0;
    for (std::size_t j = 0; j < items.size(); ++j) {
        if ((mask >> j) & 1U) r += codec_.choose(items[j], ++pos);
    }
    return r;
}

CertificateOperator::CertificateOperator(const Hypergraph& h, double p)
    : n_(h.n()), k_(h.k()), half_(h.k() / 2), p_(p), codec_(h.n(), std::min(h.k() / 2, h.n())) {
    if (k_ < 2 || k_ % 2 != 0) {
        throw InputError("certificate operator needs even k >= 2, got k=" + std::to_string(k_));
    }
    if (!(p >= 0.0 && p < 1.0)) throw InputError("certificate operator needs 0 <= p < 1");
    if (half_ > n_) {
        empty_ = true;  // no (k/2)-subsets at all
        return;
    }
    const Rank dim = codec_.dim();
    if (dim >= (Rank{1} << 32)) throw SizingError("operator dimension C(n,k/2) exceeds 2^32");

    edges_.reserve(h.num_edges() * k_);
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        auto edge = h.edge(e);
        edges_.insert(edges_.end(), edge.begin(), edge.end());
    }

    rows_.resize(dim * half_);
    for (Rank r = 0; r < dim; ++r) codec_.unrank_into(r, {rows_.data() + r * half_, half_});

    // Edge term in CSR form: row S lists every T with S+T an edge.
    std::vector<unsigned> splits;
    for (unsigned mask = 0; mask < (1U << k_); ++mask) {
        if (static_cast<std::uint32_t>(std::popcount(mask)) == half_) splits.push_back(mask);
    }
    const unsigned full = (1U << k_) - 1;
    row_start_.assign(dim + 1, 0);
    const std::size_t m = h.num_edges();
    for (std::size_t e = 0; e < m; ++e) {
        std::span<const Vertex> edge(edges_.data() + e * k_, k_);
        for (unsigned mask : splits) ++row_start_[sub_rank(edge, mask) + 1];
    }
    std::partial_sum(row_start_.begin(), row_start_.end(), row_start_.begin());
    cols_.resize(row_start_.back());
    std::vector<std::uint64_t> fill(row_start_.begin(), row_start_.end() - 1);
    for (std::size_t e = 0; e < m; ++e) {
        std::span<const Vertex> edge(edges_.data() + e * k_, k_);
        for (unsigned mask : splits) {
            const Rank s = sub_rank(edge, mask);
            cols_[fill[s]++] = static_cast<std::uint32_t>(sub_rank(edge, full ^ mask));
        }
    }
    for (Rank r = 0; r < dim; ++r) {
        std::sort(cols_.begin() + static_cast<std::ptrdiff_t>(row_start_[r]),
                  cols_.begin() + static_cast<std::ptrdiff_t>(row_start_[r + 1]));
    }

    // Up-links between consecutive subset levels for the superset-sum gather.
    up_.resize(half_);
    for (std::uint32_t u = 0; u < half_; ++u) {
        const SubsetCodec level(n_, u);
        auto& table = up_[u];
        table.resize(level.dim() * (n_ - u));
        Subset sub(u);
        Subset grown(u + 1);
        for (Rank r = 0; r < level.dim(); ++r) {
            level.unrank_into(r, sub);
            std::size_t j = 0;
            for (Vertex v = 0; v < n_; ++v) {
                if (std::binary_search(sub.begin(), sub.end(), v)) continue;
                auto pos = std::upper_bound(sub.begin(), sub.end(), v) - sub.begin();
                std::copy(sub.begin(), sub.begin() + pos, grown.begin());
                grown[pos] = v;
                std::copy(sub.begin() + pos, sub.end(), grown.begin() + pos + 1);
                table[r * (n_ - u) + j++] = static_cast<std::uint32_t>(colex_rank(grown));
            }
        }
    }
}

void CertificateOperator::check_dims(std::span<const double> x, std::span<double> y) const {
    if (x.size() != dim() || y.size() != dim()) {
        throw InputError("matvec dimension mismatch: operator has D=" + std::to_string(dim()) + ", got x=" +
                         std::to_string(x.size()) + ", y=" + std::to_string(y.size()));
    }
}

void CertificateOperator::superset_sums(std::span<const double> x, std::vector<std::vector<double>>& levels) const {
    levels.resize(half_ + 1);
    levels[half_].assign(x.begin(), x.end());
    for (std::uint32_t u = half_; u-- > 0;) {
        const std::size_t width = n_ - u;
        const std::size_t count = up_[u].size() / std::max<std::size_t>(width, 1);
        auto& out = levels[u];
        out.assign(count, 0.0);
        const auto& above = levels[u + 1];
        const auto& table = up_[u];
        // every T above U is reached through (half - u) different single-vertex extensions
        const double scale = 1.0 / static_cast<double>(half_ - u);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(count); ++r) {
            double acc = 0.0;
            const std::uint32_t* links = table.data() + static_cast<std::size_t>(r) * width;
            for (std::size_t j = 0; j < width; ++j) acc += above[links[j]];
            out[static_cast<std::size_t>(r)] = acc * scale;
        }
    }
}

double CertificateOperator::disjoint_sum(std::span<const Vertex> row,
                                         const std::vector<std::vector<double>>& levels) const {
    // sum over T disjoint from S = sum_{U subset of S} (-1)^{|U|} g(U)
    double acc = 0.0;
    for (unsigned mask = 0; mask < (1U << half_); ++mask) {
        const Rank r = sub_rank(row, mask);
        const auto pos = static_cast<std::size_t>(std::popcount(mask));
        const double g = levels[pos][r];
        acc += (pos % 2 == 0) ? g : -g;
    }
    return acc;
}

void CertificateOperator::apply(std::span<const double> x, std::span<double> y) const {
    check_dims(x, y);
    if (dim() == 0) return;
    std::vector<std::vector<double>> levels;
    superset_sums(x, levels);
    const auto rows = static_cast<std::ptrdiff_t>(dim());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t s = 0; s < rows; ++s) {
        const auto row = static_cast<std::size_t>(s);
        double edge_acc = 0.0;
        for (std::uint64_t idx = row_start_[row]; idx < row_start_[row + 1]; ++idx) edge_acc += x[cols_[idx]];
        const std::span<const Vertex> subset(rows_.data() + row * half_, half_);
        y[row] = edge_acc - p_ * disjoint_sum(subset, levels);
    }
}

void CertificateOperator::apply_reference(std::span<const double> x, std::span<double> y) const {
    check_dims(x, y);
    const Rank d = dim();
    if (d == 0) return;
    std::fill(y.begin(), y.end(), 0.0);

    // (1) edge term: coefficient (1-p) - (-p) = 1 on every split of every edge
    const unsigned full = (1U << k_) - 1;
    for (std::size_t e = 0; e < edges_.size() / k_; ++e) {
        std::span<const Vertex> edge(edges_.data() + e * k_, k_);
        for (unsigned mask = 0; mask <= full; ++mask) {
            if (static_cast<std::uint32_t>(std::popcount(mask)) != half_) continue;
            y[sub_rank(edge, mask)] += x[sub_rank(edge, full ^ mask)];
        }
    }

    // (2) superset sums by scatter from every T into each of its subsets
    std::vector<std::vector<double>> levels(half_ + 1);
    for (std::uint32_t u = 0; u <= half_; ++u) levels[u].assign(binomial(n_, u), 0.0);
    for (Rank t = 0; t < d; ++t) {
        std::span<const Vertex> subset(rows_.data() + t * half_, half_);
        for (unsigned mask = 0; mask < (1U << half_); ++mask) {
            levels[static_cast<std::size_t>(std::popcount(mask))][sub_rank(subset, mask)] += x[t];
        }
    }

    // (3) background term -p * sum_{T disjoint from S} x_T
    for (Rank s = 0; s < d; ++s) {
        std::span<const Vertex> subset(rows_.data() + s * half_, half_);
        y[s] -= p_ * disjoint_sum(subset, levels);
    }
}

Eigen::MatrixXd CertificateOperator::dense() const {
    const Rank d = dim();
    if (d > kMaxDenseDim) throw SizingError("refusing to materialize a dense operator of dimension " + std::to_string(d));
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (Rank s = 0; s < d; ++s) {
        std::span<const Vertex> rs(rows_.data() + s * half_, half_);
        for (Rank t = 0; t < d; ++t) {
            std::span<const Vertex> rt(rows_.data() + t * half_, half_);
            bool disjoint = true;
            for (Vertex v : rs) disjoint = disjoint && std::find(rt.begin(), rt.end(), v) == rt.end();
            if (!disjoint) continue;
            a(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) = -p_;
        }
        for (std::uint64_t idx = row_start_[s]; idx < row_start_[s + 1]; ++idx) {
            a(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(cols_[idx])) = 1.0 - p_;
        }
    }
    return a;
}

}  // namespace hcert
