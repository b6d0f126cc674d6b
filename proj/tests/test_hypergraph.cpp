#include <cmath>
#include <numeric>

#include "doctest.h"
#include "hcert/errors.hpp"
#include "hcert/hypergraph.hpp"
#include "oracles.hpp"

using namespace hcert;

TEST_CASE("sample: p=1 is complete, p=0 is empty") {
    const auto full = sample({.k = 3, .n = 9, .p = 1.0, .seed = 1});
    CHECK(full.num_edges() == binomial(9, 3));
    const auto none = sample({.k = 3, .n = 9, .p = 0.0, .seed = 1});
    CHECK(none.num_edges() == 0);
    CHECK_THROWS_AS(sample({.k = 5, .n = 4, .p = 0.5}), InputError);
}

TEST_CASE("sample: edge count has the binomial mean") {
    // k=3, n=20, p=1/2 over 200 seeds: mean within 3 standard errors of 570.
    const double trials = 200;
    double total = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        total += static_cast<double>(sample({.k = 3, .n = 20, .p = 0.5, .seed = seed}).num_edges());
    }
    const double se = std::sqrt(1140.0 * 0.25 / trials);
    CHECK(std::abs(total / trials - 570.0) <= 3.0 * se);
}

TEST_CASE("sample: per-edge decisions depend only on (seed, edge)") {
    // the same seed on a larger vertex set keeps every edge among the first n vertices
    const auto small = sample({.k = 3, .n = 10, .p = 0.4, .seed = 99});
    const auto large = sample({.k = 3, .n = 14, .p = 0.4, .seed = 99});
    std::vector<Vertex> first(10);
    std::iota(first.begin(), first.end(), Vertex{0});
    CHECK(induce(large, first) == small);
    CHECK(sample({.k = 3, .n = 14, .p = 0.4, .seed = 99}) == large);
}

TEST_CASE("sample: planted clique is present") {
    const auto h = sample({.k = 3, .n = 15, .p = 0.3, .seed = 5, .planted_size = 6});
    CHECK(is_clique(h, Subset{0, 1, 2, 3, 4, 5}));
}

TEST_CASE("canonical form sorts and deduplicates") {
    const Hypergraph h(5, 3, {{4, 1, 2}, {0, 1, 2}, {2, 1, 4}});
    CHECK(h.num_edges() == 2);
    CHECK(h.edges() == std::vector<Subset>{{0, 1, 2}, {1, 2, 4}});
    CHECK_THROWS_AS(Hypergraph(5, 3, {{0, 0, 1}}), InputError);
    CHECK_THROWS_AS(Hypergraph(5, 3, {{0, 1, 5}}), InputError);
    CHECK_THROWS_AS(Hypergraph(5, 3, {{0, 1}}), InputError);
}

TEST_CASE("is_clique examples") {
    const auto any = sample({.k = 3, .n = 8, .p = 0.2, .seed = 3});
    CHECK(is_clique(any, Subset{1, 6}));
    CHECK(is_clique(complete_hypergraph(7, 3), Subset{0, 1, 2, 3, 4, 5, 6}));
    const Hypergraph single(4, 3, {{0, 1, 2}});
    CHECK_FALSE(is_clique(single, Subset{0, 1, 2, 3}));
    CHECK(is_clique(single, Subset{0, 1, 2}));
}

TEST_CASE("oracle on complete and empty hypergraphs") {
    const auto full = max_clique_oracle(complete_hypergraph(9, 3));
    CHECK(full.conclusive);
    CHECK(full.omega == 9);
    CHECK(full.witness == Subset{0, 1, 2, 3, 4, 5, 6, 7, 8});
    const auto none = max_clique_oracle(Hypergraph(9, 3));
    CHECK(none.conclusive);
    CHECK(none.omega == 2);
    CHECK(none.witness.size() == 2);
    // fewer vertices than k-1: the whole vertex set
    CHECK(max_clique_oracle(Hypergraph(2, 4)).omega == 2);
}

TEST_CASE("oracle matches exhaustive enumeration at n=12") {
    const auto h = sample({.k = 3, .n = 12, .p = 0.7, .seed = 7});
    const auto result = max_clique_oracle(h);
    REQUIRE(result.conclusive);
    const std::uint32_t exhaustive = testing::exhaustive_clique_number(h);
    CHECK(result.omega == exhaustive);
    CHECK(result.omega == 5);  // frozen from the exhaustive enumeration
    CHECK(is_clique(h, result.witness));
}

TEST_CASE("property: oracle witness is a maximum clique") {
    for (std::uint32_t k : {2U, 3U, 4U}) {
        for (double p : {0.3, 0.6, 0.85}) {
            for (std::uint64_t seed = 0; seed < 4; ++seed) {
                const auto h = sample({.k = k, .n = 11, .p = p, .seed = seed});
                const auto result = max_clique_oracle(h);
                REQUIRE(result.conclusive);
                CHECK(is_clique(h, result.witness));
                CHECK(result.witness.size() == result.omega);
                CHECK(result.omega == testing::exhaustive_clique_number(h));
            }
        }
    }
}

TEST_CASE("oracle reports an exhausted budget instead of a number") {
    const auto h = sample({.k = 3, .n = 14, .p = 0.9, .seed = 1});
    const auto result = max_clique_oracle(h, 3);
    CHECK_FALSE(result.conclusive);
    CHECK(is_clique(h, result.witness));
}

TEST_CASE("link examples") {
    const Hypergraph h(3, 3, {{0, 1, 2}});
    const auto l = link(h, 0);
    CHECK(l.n() == 2);
    CHECK(l.k() == 2);
    CHECK(l.edges() == std::vector<Subset>{{0, 1}});

    const Hypergraph isolated(5, 3, {{0, 1, 2}});
    CHECK(link(isolated, 4).num_edges() == 0);
    CHECK(link(isolated, 4).k() == 2);
    CHECK_THROWS_AS(link(sample({.k = 2, .n = 4, .p = 0.5}), 0), InputError);
}

TEST_CASE("link of a random hypergraph has the (k-1)-uniform edge mean") {
    // H(3,15,1/2), 300 seeds: |link(H,0)| ~ Bin(C(14,2), 1/2)
    double total = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        total += static_cast<double>(link(sample({.k = 3, .n = 15, .p = 0.5, .seed = seed}), 0).num_edges());
    }
    const double m = 91.0;
    CHECK(std::abs(total / 300.0 - 0.5 * m) <= 3.0 * std::sqrt(m * 0.25 / 300.0));
}

TEST_CASE("filter_and_induce examples") {
    const auto full = complete_hypergraph(8, 4);
    const auto fj = filter_and_induce(full, Subset{1, 4, 6});
    CHECK(fj.common == std::vector<Vertex>{0, 2, 3, 5, 7});
    CHECK(fj.induced == complete_hypergraph(5, 4));

    const Hypergraph h(10, 4, {{0, 1, 2, 5}, {0, 1, 2, 7}, {5, 7, 8, 9}});
    const auto r = filter_and_induce(h, Subset{0, 1, 2});
    CHECK(r.common == std::vector<Vertex>{5, 7});
    CHECK(r.induced.n() == 2);
    CHECK(r.induced.num_edges() == 0);

    // |J| < k-1: vacuous filter
    const auto v = filter_and_induce(h, Subset{3});
    CHECK(v.common.size() == 9);
}

TEST_CASE("property: filter_and_induce matches its definition") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto h = sample({.k = 3, .n = 10, .p = 0.6, .seed = seed});
        for (const auto& j : enumerate_subsets(10, 3)) {
            const auto r = filter_and_induce(h, j);
            for (Vertex i = 0; i < 10; ++i) {
                bool in_j = std::find(j.begin(), j.end(), i) != j.end();
                bool expected = !in_j;
                for (const auto& face : enumerate_subsets(3, 2)) {
                    Subset e{j[face[0]], j[face[1]], i};
                    std::sort(e.begin(), e.end());
                    if (!in_j && !h.contains(e)) expected = false;
                }
                CHECK(expected == std::binary_search(r.common.begin(), r.common.end(), i));
            }
            // H_J edges are exactly the edges of H inside V_J
            std::size_t inside = 0;
            for (const auto& e : h.edges()) {
                inside += std::all_of(e.begin(), e.end(), [&](Vertex v) {
                    return std::binary_search(r.common.begin(), r.common.end(), v);
                });
            }
            CHECK(r.induced.num_edges() == inside);
        }
    }
}

TEST_CASE("|V_J| follows Bin(n-d, p^C(d,k-1))") {
    // k=4, d=3, n=25, p=0.8 over 500 seeds: mean within 3 standard errors of 22 * 0.8
    double total = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto h = sample({.k = 4, .n = 25, .p = 0.8, .seed = seed});
        total += static_cast<double>(filter_and_induce(h, Subset{0, 1, 2}).common.size());
    }
    const double se = std::sqrt(22.0 * 0.8 * 0.2 / 500.0);
    CHECK(std::abs(total / 500.0 - 17.6) <= 3.0 * se);
}

TEST_CASE("complement") {
    CHECK(complement(complete_hypergraph(7, 3)).num_edges() == 0);
    const auto h = sample({.k = 3, .n = 10, .p = 0.3, .seed = 11});
    const auto c = complement(h);
    CHECK(h.num_edges() + c.num_edges() == 120);
    CHECK(complement(c) == h);
    CHECK_THROWS_AS(complement(Hypergraph(60, 6), 1000), SizingError);
}

TEST_CASE("reduction inequalities hold on oracle values") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto h = sample({.k = 3, .n = 10, .p = 0.7, .seed = seed});
        const auto omega = max_clique_oracle(h).omega;
        std::uint32_t best_link = 0;
        for (Vertex i = 0; i < 10; ++i) best_link = std::max(best_link, max_clique_oracle(link(h, i)).omega);
        CHECK(omega <= 1 + best_link);
        for (std::uint32_t d : {2U, 3U}) {
            std::uint32_t best = 0;
            for (const auto& j : enumerate_subsets(10, d)) {
                best = std::max(best, max_clique_oracle(filter_and_induce(h, j).induced).omega);
            }
            CHECK(omega <= d + best);
        }
    }
}

TEST_CASE("JSON round trip is byte-stable") {
    const auto h = sample({.k = 3, .n = 9, .p = 0.4, .seed = 2});
    const std::string text = to_json(h);
    CHECK(to_json(from_json(text)) == text);
    CHECK(to_json(Hypergraph(4, 2)) == "{\"n\":4,\"k\":2,\"edges\":[]}\n");
    CHECK(to_json(Hypergraph(4, 2, {{2, 3}, {0, 1}})) == "{\"n\":4,\"k\":2,\"edges\":[[0,1],[2,3]]}\n");
}

TEST_CASE("JSON rejects malformed input") {
    CHECK_THROWS_AS(from_json("{\"n\":3,\"k\":2,\"edges\":[],\"extra\":1}"), InputError);
    CHECK_THROWS_AS(from_json("{\"n\":3,\"k\":2}"), InputError);
    CHECK_THROWS_AS(from_json("{\"n\":3,\"k\":2,\"edges\":[[0,3]]}"), InputError);
    CHECK_THROWS_AS(from_json("{\"n\":3,\"k\":2,\"edges\":[[0,1,2]]}"), InputError);
    CHECK_THROWS_AS(from_json("{\"n\":-3,\"k\":2,\"edges\":[]}"), InputError);
    CHECK_THROWS_AS(from_json("[1,2]"), InputError);
    CHECK_THROWS_AS(from_json("not json"), InputError);
}
