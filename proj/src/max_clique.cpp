#include <algorithm>
#include <numeric>

#include "hcert/hypergraph.hpp"

namespace hcert {

namespace {

class CliqueSearch {
public:
    CliqueSearch(const Hypergraph& h, std::uint64_t budget) : h_(h), budget_(budget), scratch_(h.k()) {}

    OracleResult run() {
        std::vector<Vertex> candidates(h_.n());
        std::iota(candidates.begin(), candidates.end(), Vertex{0});
        expand(candidates);
        OracleResult out;
        out.conclusive = !exhausted_;
        out.omega = static_cast<std::uint32_t>(best_.size());
        out.witness = best_;
        std::sort(out.witness.begin(), out.witness.end());
        out.nodes = nodes_;
        return out;
    }

private:
    // Given that current+{v} and current+{w} are cliques, current+{v,w} is a
    // clique iff Q+{v,w} is an edge for every (k-2)-subset Q of current.
    bool compatible(Vertex v, Vertex w) {
        const std::uint32_t k = h_.k();
        const auto c = static_cast<std::uint32_t>(current_.size());
        if (c + 2 < k) return true;
        const std::uint32_t q = k - 2;
        pick_.resize(q);
        std::iota(pick_.begin(), pick_.end(), Vertex{0});
        do {
            for (std::uint32_t a = 0; a < q; ++a) scratch_[a] = current_[pick_[a]];
            scratch_[q] = v;
            scratch_[q + 1] = w;
            std::sort(scratch_.begin(), scratch_.end());
            if (!h_.contains(scratch_)) return false;
        } while (next_subset(pick_, c));
        return true;
    }

    void expand(const std::vector<Vertex>& candidates) {
        if (exhausted_) return;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        if (current_.size() > best_.size()) best_ = current_;
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            if (current_.size() + (candidates.size() - idx) <= best_.size()) return;
            const Vertex v = candidates[idx];
            std::vector<Vertex> next;
            next.reserve(candidates.size() - idx);
            for (std::size_t j = idx + 1; j < candidates.size(); ++j) {
                if (compatible(v, candidates[j])) next.push_back(candidates[j]);
            }
            current_.push_back(v);
            expand(next);
            current_.pop_back();
            if (exhausted_) return;
        }
    }

    const Hypergraph& h_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
    Subset scratch_;
    Subset pick_;
};

}  // namespace

OracleResult max_clique_oracle(const Hypergraph& h, std::uint64_t node_budget) {
    return CliqueSearch(h, node_budget).run();
}

}  // namespace hcert
