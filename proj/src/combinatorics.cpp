#include "hcert/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hcert/errors.hpp"

namespace hcert {

std::uint64_t binomial(std::uint64_t n, std::uint64_t t) {
    if (t > n) return 0;
    if (t > n - t) t = n - t;
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 63;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= t; ++i) {
        // acc * (n - t + i) / i stays integral at every step
        acc = acc * (n - t + i) / i;
        if (acc > kLimit) {
            throw SizingError("binomial C(" + std::to_string(n) + "," + std::to_string(t) +
                              ") exceeds the 64-bit index range");
        }
    }
    return static_cast<std::uint64_t>(acc);
}

double binomial_real(double n, double t) {
    if (t < 0 || t > n) return 0.0;
    return std::exp(std::lgamma(n + 1) - std::lgamma(t + 1) - std::lgamma(n - t + 1));
}

SubsetCodec::SubsetCodec(std::uint32_t n, std::uint32_t t) : n_(n), t_(t) {
    if (t > n) {
        throw InputError("subset size " + std::to_string(t) + " exceeds vertex count " + std::to_string(n));
    }
    dim_ = binomial(n, t);
    table_.assign(static_cast<std::size_t>(t + 1) * (n + 1), 0);
    for (std::uint32_t j = 0; j <= t; ++j) {
        for (std::uint32_t m = 0; m <= n; ++m) {
            table_[static_cast<std::size_t>(j) * (n + 1) + m] = binomial(m, j);
        }
    }
}

Rank SubsetCodec::rank(std::span<const Vertex> subset) const {
    if (subset.size() != t_) {
        throw InputError("subset has size " + std::to_string(subset.size()) + ", expected " +
                         std::to_string(t_));
    }
    Rank r = 0;
    for (std::size_t j = 0; j < subset.size(); ++j) {
        if (subset[j] >= n_) throw InputError("vertex " + std::to_string(subset[j]) + " out of range");
        if (j > 0 && subset[j] <= subset[j - 1]) throw InputError("subset is not strictly increasing");
        r += choose(subset[j], static_cast<std::uint32_t>(j + 1));
    }
    return r;
}

void SubsetCodec::unrank_into(Rank r, std::span<Vertex> out) const {
    if (r >= dim_) throw InputError("rank " + std::to_string(r) + " out of range [0," + std::to_string(dim_) + ")");
    std::uint32_t hi = n_;
    for (std::uint32_t j = t_; j >= 1; --j) {
        // largest v < hi with C(v, j) <= r
        std::uint32_t v = hi - 1;
        while (choose(v, j) > r) --v;
        out[j - 1] = v;
        r -= choose(v, j);
        hi = v;
    }
}

Subset SubsetCodec::unrank(Rank r) const {
    Subset s(t_);
    unrank_into(r, s);
    return s;
}

namespace {

constexpr std::uint32_t kTableN = 512;
constexpr std::uint32_t kTableT = 16;

// C(m, j) for m < kTableN, j <= kTableT, saturating at UINT64_MAX.
const std::vector<std::uint64_t>& small_binomials() {
    static const std::vector<std::uint64_t> table = [] {
        std::vector<std::uint64_t> t(static_cast<std::size_t>(kTableN) * (kTableT + 1), 0);
        constexpr auto kSat = std::numeric_limits<std::uint64_t>::max();
        for (std::uint32_t m = 0; m < kTableN; ++m) {
            t[m * (kTableT + 1)] = 1;
            for (std::uint32_t j = 1; j <= kTableT && j <= m; ++j) {
                const std::uint64_t a = t[(m - 1) * (kTableT + 1) + j - 1];
                const std::uint64_t b = t[(m - 1) * (kTableT + 1) + j];
                t[m * (kTableT + 1) + j] = (a > kSat - b) ? kSat : a + b;
            }
        }
        return t;
    }();
    return table;
}

}  // namespace

Rank colex_rank(std::span<const Vertex> subset) {
    const auto& table = small_binomials();
    Rank r = 0;
    for (std::size_t j = 0; j < subset.size(); ++j) {
        if (subset[j] < kTableN && j + 1 <= kTableT) {
            r += table[subset[j] * (kTableT + 1) + j + 1];
        } else {
            r += binomial(subset[j], j + 1);
        }
    }
    return r;
}

bool next_subset(Subset& s, std::uint32_t n) {
    const std::size_t t = s.size();
    // colex successor: bump the first element that has room below its right neighbour
    for (std::size_t j = 0; j < t; ++j) {
        const Vertex limit = (j + 1 < t) ? s[j + 1] : n;
        if (s[j] + 1 < limit) {
            ++s[j];
            for (std::size_t i = 0; i < j; ++i) s[i] = static_cast<Vertex>(i);
            return true;
        }
    }
    return false;
}

std::vector<Subset> enumerate_subsets(std::uint32_t n, std::uint32_t t) {
    if (t > n) throw InputError("subset size exceeds vertex count");
    std::vector<Subset> out;
    out.reserve(binomial(n, t));
    Subset s(t);
    for (std::uint32_t i = 0; i < t; ++i) s[i] = i;
    do {
        out.push_back(s);
    } while (next_subset(s, n));
    return out;
}

}  // namespace hcert
