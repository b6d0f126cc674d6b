#include <random>

#include "doctest.h"
#include "hcert/combinatorics.hpp"
#include "hcert/errors.hpp"
#include "oracles.hpp"

using namespace hcert;

TEST_CASE("binomial small values") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(60, 30) == 118264581564861424ULL);
}

TEST_CASE("binomial overflow names the arguments") {
    CHECK_THROWS_AS(binomial(200, 100), SizingError);
    try {
        binomial(200, 100);
    } catch (const SizingError& e) {
        CHECK(std::string(e.what()).find("C(200,100)") != std::string::npos);
    }
}

TEST_CASE("binomial obeys Pascal's rule") {
    for (std::uint64_t n = 1; n <= 62; ++n) {
        for (std::uint64_t t = 1; t <= n; ++t) {
            CHECK(binomial(n, t) == binomial(n - 1, t - 1) + binomial(n - 1, t));
        }
    }
}

TEST_CASE("rank and unrank on the n=4, t=2 codec") {
    const SubsetCodec codec(4, 2);
    CHECK(codec.dim() == 6);
    CHECK(codec.rank(Subset{0, 1}) == 0);
    CHECK(codec.rank(Subset{1, 3}) == 4);
    CHECK(codec.rank(Subset{2, 3}) == 5);
    CHECK(codec.unrank(0) == Subset{0, 1});
    CHECK(codec.unrank(5) == Subset{2, 3});
    for (Rank r = 0; r < 6; ++r) CHECK(codec.rank(codec.unrank(r)) == r);
}

TEST_CASE("codec rejects bad input") {
    const SubsetCodec codec(4, 2);
    CHECK_THROWS_AS(codec.rank(Subset{1}), InputError);
    CHECK_THROWS_AS(codec.rank(Subset{1, 4}), InputError);
    CHECK_THROWS_AS(codec.rank(Subset{2, 1}), InputError);
    CHECK_THROWS_AS(codec.unrank(6), InputError);
    CHECK_THROWS_AS(SubsetCodec(3, 4), InputError);
}

TEST_CASE("enumerate_subsets examples") {
    CHECK(enumerate_subsets(3, 2) == std::vector<Subset>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(enumerate_subsets(3, 0) == std::vector<Subset>{{}});
    CHECK(enumerate_subsets(25, 2).size() == 300);
}

TEST_CASE("enumeration matches a bitmask enumeration sorted colex") {
    for (std::uint32_t n = 0; n <= 10; ++n) {
        for (std::uint32_t t = 0; t <= n; ++t) {
            CHECK(enumerate_subsets(n, t) == hcert::testing::all_subsets_of_size(n, t));
        }
    }
}

TEST_CASE("property: rank/unrank bijection on random codecs") {
    std::mt19937_64 gen(20240611);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::uint32_t>(std::uniform_int_distribution<int>(1, 40)(gen));
        const auto t = static_cast<std::uint32_t>(std::uniform_int_distribution<int>(0, std::min<int>(6, n))(gen));
        const SubsetCodec codec(n, t);
        std::uniform_int_distribution<Rank> pick(0, codec.dim() - 1);
        for (int i = 0; i < 200; ++i) {
            const Rank r = pick(gen);
            const Subset s = codec.unrank(r);
            REQUIRE(s.size() == t);
            CHECK(std::is_sorted(s.begin(), s.end()));
            CHECK(codec.rank(s) == r);
            CHECK(colex_rank(s) == r);
        }
        if (codec.dim() <= 5000) {
            Rank expected = 0;
            for (const auto& s : enumerate_subsets(n, t)) CHECK(codec.rank(s) == expected++);
            CHECK(expected == codec.dim());
        }
    }
}
