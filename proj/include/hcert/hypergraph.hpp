#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "hcert/combinatorics.hpp"

namespace hcert {

/// Constant-time edge membership keyed by colex rank.
///
/// Uses a dense bitmap while C(n,k) is small enough, a hash set otherwise.
class EdgeIndex {
public:
    EdgeIndex() = default;
    EdgeIndex(std::uint32_t n, std::uint32_t k);

    void insert(Rank r);
    bool contains(Rank r) const noexcept {
        if (dense_) return r < universe_ && ((bits_[r >> 6] >> (r & 63)) & 1U) != 0;
        return sparse_.contains(r);
    }

private:
    static constexpr Rank kDenseLimit = Rank{1} << 27;
    bool dense_ = true;
    Rank universe_ = 0;
    std::vector<std::uint64_t> bits_;
    std::unordered_set<Rank> sparse_;
};

/// A k-uniform hypergraph on vertices {0..n-1}.
///
/// Edges are kept in canonical form: each edge sorted ascending, no
/// duplicates, edge list sorted lexicographically. Immutable after construction.
class Hypergraph {
public:
    Hypergraph(std::uint32_t n, std::uint32_t k);
    Hypergraph(std::uint32_t n, std::uint32_t k, const std::vector<Subset>& edges);

    /// Builds from edges already stored flat (k vertices each). Canonicalizes.
    static Hypergraph from_flat(std::uint32_t n, std::uint32_t k, std::vector<Vertex> flat);

    std::uint32_t n() const noexcept { return n_; }
    std::uint32_t k() const noexcept { return k_; }
    std::size_t num_edges() const noexcept { return k_ == 0 ? 0 : flat_.size() / k_; }

    std::span<const Vertex> edge(std::size_t i) const noexcept {
        return {flat_.data() + i * k_, k_};
    }
    std::vector<Subset> edges() const;

    /// `subset` must be sorted ascending with k distinct vertices.
    bool contains(std::span<const Vertex> subset) const noexcept { return index_.contains(colex_rank(subset)); }
    bool contains_rank(Rank r) const noexcept { return index_.contains(r); }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.flat_ == b.flat_;
    }

private:
    void canonicalize();

    std::uint32_t n_;
    std::uint32_t k_;
    std::vector<Vertex> flat_;
    EdgeIndex index_;
};

struct SampleParams {
    std::uint32_t k = 2;
    std::uint32_t n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::uint32_t planted_size = 0;  // clique forced on {0..s-1}; 0 means none
};

/// Draws from H(k,n,p): edge with colex rank r is present iff keyed_uniform(seed, r) < p.
Hypergraph sample(const SampleParams& params);

Hypergraph complete_hypergraph(std::uint32_t n, std::uint32_t k);

/// True iff |S| <= k-1 or every k-subset of S is an edge.
bool is_clique(const Hypergraph& h, std::span<const Vertex> subset);

struct OracleResult {
    bool conclusive = false;
    std::uint32_t omega = 0;
    Subset witness;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

/// Exact clique number by branch-and-bound. Returns conclusive=false when the
/// node budget runs out; omega/witness then hold the best clique seen so far.
OracleResult max_clique_oracle(const Hypergraph& h, std::uint64_t node_budget = kDefaultOracleBudget);

/// The (k-1)-uniform link of vertex i, relabeled onto n-1 vertices.
Hypergraph link(const Hypergraph& h, Vertex i);

struct FilterResult {
    std::vector<Vertex> common;  // V_J, original labels, ascending
    Hypergraph induced;          // H restricted to V_J, relabeled to [0, |V_J|)
};

/// V_J = { i not in J : J' + i is an edge for every (k-1)-subset J' of J } and
/// the sub-hypergraph it induces. With |J| < k-1 the condition is vacuous.
FilterResult filter_and_induce(const Hypergraph& h, std::span<const Vertex> j_set);

/// Sub-hypergraph induced on `vertices` (ascending), relabeled by position.
Hypergraph induce(const Hypergraph& h, std::span<const Vertex> vertices);

/// All k-subsets that are not edges. Throws SizingError above `max_edges`.
Hypergraph complement(const Hypergraph& h, std::uint64_t max_edges = 50'000'000);

// JSON interchange: {"n":..,"k":..,"edges":[[..],..]}
std::string to_json(const Hypergraph& h);
Hypergraph from_json(const std::string& text);
void save(const Hypergraph& h, const std::filesystem::path& path);
Hypergraph load(const std::filesystem::path& path);

}  // namespace hcert
