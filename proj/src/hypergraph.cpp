#include "hcert/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hcert/errors.hpp"
#include "hcert/rng.hpp"

namespace hcert {

EdgeIndex::EdgeIndex(std::uint32_t n, std::uint32_t k) {
    // C(n,k) may exceed 2^63 for large n; fall back to hashing in that case.
    Rank universe = 0;
    try {
        universe = binomial(n, k);
    } catch (const SizingError&) {
        dense_ = false;
        return;
    }
    if (universe <= kDenseLimit) {
        universe_ = universe;
        bits_.assign((universe + 63) / 64, 0);
    } else {
        dense_ = false;
    }
}

void EdgeIndex::insert(Rank r) {
    if (dense_) {
        bits_[r >> 6] |= std::uint64_t{1} << (r & 63);
    } else {
        sparse_.insert(r);
    }
}

Hypergraph::Hypergraph(std::uint32_t n, std::uint32_t k) : n_(n), k_(k), index_(n, k) {
    if (k < 1) throw InputError("uniformity k must be at least 1");
}

Hypergraph::Hypergraph(std::uint32_t n, std::uint32_t k, const std::vector<Subset>& edges)
    : Hypergraph(n, k) {
    flat_.reserve(edges.size() * k);
    for (const auto& e : edges) {
        if (e.size() != k) {
            throw InputError("edge of size " + std::to_string(e.size()) + " in a " + std::to_string(k) +
                             "-uniform hypergraph");
        }
        flat_.insert(flat_.end(), e.begin(), e.end());
    }
    canonicalize();
}

Hypergraph Hypergraph::from_flat(std::uint32_t n, std::uint32_t k, std::vector<Vertex> flat) {
    Hypergraph h(n, k);
    if (flat.size() % k != 0) throw InputError("flat edge buffer is not a multiple of k");
    h.flat_ = std::move(flat);
    h.canonicalize();
    return h;
}

void Hypergraph::canonicalize() {
    const std::size_t m = flat_.size() / k_;
    for (std::size_t i = 0; i < m; ++i) {
        auto first = flat_.begin() + static_cast<std::ptrdiff_t>(i * k_);
        std::sort(first, first + k_);
        if (std::adjacent_find(first, first + k_) != first + k_) {
            throw InputError("edge with repeated vertex");
        }
        if (*(first + k_ - 1) >= n_) {
            throw InputError("edge vertex " + std::to_string(*(first + k_ - 1)) + " out of range for n=" +
                             std::to_string(n_));
        }
    }
    auto edge_less = [this](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(flat_.begin() + static_cast<std::ptrdiff_t>(a * k_),
                                            flat_.begin() + static_cast<std::ptrdiff_t>((a + 1) * k_),
                                            flat_.begin() + static_cast<std::ptrdiff_t>(b * k_),
                                            flat_.begin() + static_cast<std::ptrdiff_t>((b + 1) * k_));
    };
    bool strictly_sorted = true;
    for (std::size_t i = 1; i < m && strictly_sorted; ++i) strictly_sorted = edge_less(i - 1, i);
    if (strictly_sorted) {
        for (std::size_t i = 0; i < m; ++i) index_.insert(colex_rank(edge(i)));
        return;
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto edge_at = [this](std::size_t i) { return std::span<const Vertex>(flat_.data() + i * k_, k_); };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto ea = edge_at(a);
        auto eb = edge_at(b);
        return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
    });
    std::vector<Vertex> sorted;
    sorted.reserve(flat_.size());
    for (std::size_t idx = 0; idx < m; ++idx) {
        auto e = edge_at(order[idx]);
        if (idx > 0 && std::equal(e.begin(), e.end(), sorted.end() - k_)) continue;
        sorted.insert(sorted.end(), e.begin(), e.end());
    }
    flat_ = std::move(sorted);
    for (std::size_t i = 0; i < num_edges(); ++i) index_.insert(colex_rank(edge(i)));
}

std::vector<Subset> Hypergraph::edges() const {
    std::vector<Subset> out;
    out.reserve(num_edges());
    for (std::size_t i = 0; i < num_edges(); ++i) {
        auto e = edge(i);
        out.emplace_back(e.begin(), e.end());
    }
    return out;
}

Hypergraph sample(const SampleParams& params) {
    if (params.k < 1) throw InputError("k must be at least 1");
    if (params.k > params.n) {
        throw InputError("k=" + std::to_string(params.k) + " exceeds n=" + std::to_string(params.n));
    }
    if (!(params.p >= 0.0 && params.p <= 1.0)) throw InputError("p must lie in [0,1]");
    if (params.planted_size > params.n) throw InputError("planted clique larger than n");

    // Walk candidates in lexicographic order so the result is already canonical;
    // the keyed draw uses the colex rank, so the instance is order-independent.
    std::vector<Vertex> flat;
    const std::uint32_t k = params.k;
    Subset s(k);
    std::iota(s.begin(), s.end(), Vertex{0});
    while (true) {
        const bool planted = params.planted_size > 0 && s.back() < params.planted_size;
        if (planted || keyed_uniform(params.seed, colex_rank(s)) < params.p) flat.insert(flat.end(), s.begin(), s.end());
        // lexicographic successor
        std::uint32_t j = k;
        while (j > 0 && s[j - 1] == params.n - k + j - 1) --j;
        if (j == 0) break;
        ++s[j - 1];
        for (std::uint32_t a = j; a < k; ++a) s[a] = s[a - 1] + 1;
    }
    return Hypergraph::from_flat(params.n, params.k, std::move(flat));
}

Hypergraph complete_hypergraph(std::uint32_t n, std::uint32_t k) {
    return sample({.k = k, .n = n, .p = 1.0, .seed = 0, .planted_size = 0});
}

bool is_clique(const Hypergraph& h, std::span<const Vertex> subset) {
    const std::uint32_t k = h.k();
    if (subset.size() < k) return true;
    Subset sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    const auto m = static_cast<std::uint32_t>(sorted.size());
    Subset pick(k);
    std::iota(pick.begin(), pick.end(), Vertex{0});
    Subset e(k);
    do {
        for (std::uint32_t j = 0; j < k; ++j) e[j] = sorted[pick[j]];
        if (!h.contains(e)) return false;
    } while (next_subset(pick, m));
    return true;
}

Hypergraph link(const Hypergraph& h, Vertex i) {
    if (h.k() < 3) throw InputError("link requires k >= 3");
    if (i >= h.n()) throw InputError("link vertex out of range");
    std::vector<Vertex> flat;
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        auto edge = h.edge(e);
        if (std::find(edge.begin(), edge.end(), i) == edge.end()) continue;
        for (Vertex v : edge) {
            if (v != i) flat.push_back(v > i ? v - 1 : v);
        }
    }
    return Hypergraph::from_flat(h.n() - 1, h.k() - 1, std::move(flat));
}

Hypergraph induce(const Hypergraph& h, std::span<const Vertex> vertices) {
    constexpr Vertex kAbsent = ~Vertex{0};
    std::vector<Vertex> relabel(h.n(), kAbsent);
    for (std::size_t pos = 0; pos < vertices.size(); ++pos) relabel[vertices[pos]] = static_cast<Vertex>(pos);
    std::vector<Vertex> flat;
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        auto edge = h.edge(e);
        if (std::all_of(edge.begin(), edge.end(), [&](Vertex v) { return relabel[v] != kAbsent; })) {
            for (Vertex v : edge) flat.push_back(relabel[v]);
        }
    }
    return Hypergraph::from_flat(static_cast<std::uint32_t>(vertices.size()), h.k(), std::move(flat));
}

FilterResult filter_and_induce(const Hypergraph& h, std::span<const Vertex> j_set) {
    const std::uint32_t k = h.k();
    const auto d = static_cast<std::uint32_t>(j_set.size());
    Subset j_sorted(j_set.begin(), j_set.end());
    std::sort(j_sorted.begin(), j_sorted.end());
    for (std::size_t a = 0; a < j_sorted.size(); ++a) {
        if (j_sorted[a] >= h.n() || (a > 0 && j_sorted[a] == j_sorted[a - 1])) {
            throw InputError("J must hold distinct vertices in [0,n)");
        }
    }

    // Every (k-1)-subset of J, expressed as vertex lists.
    std::vector<Subset> faces;
    if (k >= 1 && d >= k - 1) {
        for (const auto& pick : enumerate_subsets(d, k - 1)) {
            Subset face(k - 1);
            for (std::uint32_t a = 0; a < k - 1; ++a) face[a] = j_sorted[pick[a]];
            faces.push_back(std::move(face));
        }
    }

    FilterResult out{{}, Hypergraph(0, k)};
    Subset e(k);
    for (Vertex i = 0; i < h.n(); ++i) {
        if (std::binary_search(j_sorted.begin(), j_sorted.end(), i)) continue;
        bool ok = true;
        for (const auto& face : faces) {
            auto pos = std::upper_bound(face.begin(), face.end(), i) - face.begin();
            std::copy(face.begin(), face.begin() + pos, e.begin());
            e[pos] = i;
            std::copy(face.begin() + pos, face.end(), e.begin() + pos + 1);
            if (!h.contains(e)) {
                ok = false;
                break;
            }
        }
        if (ok) out.common.push_back(i);
    }
    out.induced = induce(h, out.common);
    return out;
}

Hypergraph complement(const Hypergraph& h, std::uint64_t max_edges) {
    const std::uint64_t total = binomial(h.n(), h.k());
    if (total > max_edges) {
        throw SizingError("complement would materialize C(" + std::to_string(h.n()) + "," +
                          std::to_string(h.k()) + ")=" + std::to_string(total) + " candidate edges");
    }
    std::vector<Vertex> flat;
    if (h.k() <= h.n()) {
        Subset s(h.k());
        std::iota(s.begin(), s.end(), Vertex{0});
        Rank r = 0;
        do {
            if (!h.contains_rank(r)) flat.insert(flat.end(), s.begin(), s.end());
            ++r;
        } while (next_subset(s, h.n()));
    }
    return Hypergraph::from_flat(h.n(), h.k(), std::move(flat));
}

}  // namespace hcert
