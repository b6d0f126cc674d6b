#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hcert {

using Vertex = std::uint32_t;
using Subset = std::vector<Vertex>;  // strictly increasing
using Rank = std::uint64_t;

/// C(n, t), or 0 when t > n. Throws SizingError if the value exceeds 2^63.
std::uint64_t binomial(std::uint64_t n, std::uint64_t t);

/// Same as binomial() but returns the value as a double without the overflow guard.
double binomial_real(double n, double t);

/// Dense bijection between t-subsets of {0..n-1} and [0, C(n,t)) in colex order.
///
/// The colex rank of S = {s_1 < ... < s_t} is sum_j C(s_j, j). It does not
/// depend on n, so a rank stays valid for any codec with a larger vertex count.
class SubsetCodec {
public:
    SubsetCodec(std::uint32_t n, std::uint32_t t);

    std::uint32_t n() const noexcept { return n_; }
    std::uint32_t t() const noexcept { return t_; }
    Rank dim() const noexcept { return dim_; }

    Rank rank(std::span<const Vertex> subset) const;
    Subset unrank(Rank r) const;
    void unrank_into(Rank r, std::span<Vertex> out) const;

    /// Table lookup C(m, j) for m <= n, j <= t.
    std::uint64_t choose(std::uint32_t m, std::uint32_t j) const noexcept {
        return table_[static_cast<std::size_t>(j) * (n_ + 1) + m];
    }

private:
    std::uint32_t n_;
    std::uint32_t t_;
    Rank dim_;
    std::vector<std::uint64_t> table_;
};

/// Colex rank without validation; elements must be strictly increasing.
Rank colex_rank(std::span<const Vertex> subset);

/// All C(n,t) t-subsets of {0..n-1} in colex (= ascending rank) order.
std::vector<Subset> enumerate_subsets(std::uint32_t n, std::uint32_t t);

/// Advances `s` to the colex successor among t-subsets of {0..n-1}; false when exhausted.
bool next_subset(Subset& s, std::uint32_t n);

}  // namespace hcert
