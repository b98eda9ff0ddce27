#include <doctest.h>

#include "flatcover/baselines.hpp"
#include "flatcover/format.hpp"
#include "flatcover/structure.hpp"

using namespace flatcover;

namespace {

Hypergraph running_h() { return {4, {{1, 2}, {2, 3}, {3, 4}}}; }

}  // namespace

TEST_CASE("splitmix64 reference stream") {
    // Published test vector for seed 0.
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(rng.next() == 0x06c45d188009454fULL);
}

TEST_CASE("brute_force_min_cover") {
    SUBCASE("running example") {
        MinCoverResult r = brute_force_min_cover(running_h());
        REQUIRE(r.coverable);
        CHECK(r.min_size == 2);
        CHECK(r.cover.edge_indices == std::vector<int>{1, 3});
        CHECK(verify_cover(running_h(), r.cover));
    }
    SUBCASE("empty universe") {
        MinCoverResult r = brute_force_min_cover({0, {}});
        REQUIRE(r.coverable);
        CHECK(r.min_size == 0);
    }
    SUBCASE("uncovered vertex") {
        CHECK_FALSE(brute_force_min_cover({2, {{1}}}).coverable);
    }
    SUBCASE("edge guard") {
        Hypergraph h{1, {}};
        for (int i = 0; i < 26; ++i) h.edges.push_back({1});
        CHECK_THROWS_AS(brute_force_min_cover(h), std::invalid_argument);
    }
}

TEST_CASE("greedy_cover") {
    SUBCASE("running example") {
        Cover c = greedy_cover(running_h());
        CHECK(verify_cover(running_h(), c));
        CHECK(c.edge_indices.size() <= 3);
    }
    SUBCASE("single edge V") {
        Cover c = greedy_cover({2, {{1, 2}}});
        CHECK(c.edge_indices == std::vector<int>{1});
    }
    SUBCASE("matching") {
        Cover c = greedy_cover({4, {{1, 2}, {3, 4}}});
        CHECK(c.edge_indices == std::vector<int>{1, 2});
    }
    SUBCASE("uncoverable throws") {
        CHECK_THROWS_AS(greedy_cover({2, {{1}}}), std::invalid_argument);
    }
    SUBCASE("never beats the oracle") {
        SplitMix64 rng(113);
        for (int t = 0; t < 300; ++t) {
            const int n = 1 + static_cast<int>(rng.below(6));
            Hypergraph h;
            h.n = n;
            const int m = 1 + static_cast<int>(rng.below(5));
            for (int j = 0; j < m; ++j) {
                Edge e;
                for (int v = 1; v <= n; ++v)
                    if (rng.coin()) e.push_back(v);
                h.edges.push_back(std::move(e));
            }
            MinCoverResult oracle = brute_force_min_cover(h);
            if (!oracle.coverable) continue;
            Cover c = greedy_cover(h);
            REQUIRE(verify_cover(h, c));
            REQUIRE(static_cast<int>(c.edge_indices.size()) >= oracle.min_size);
        }
    }
}

TEST_CASE("gen determinism") {
    for (GenMode mode : {GenMode::RandomFlat, GenMode::PlantedCover, GenMode::Unconstrained}) {
        GenSpec spec;
        spec.seed = 1;
        spec.n = 6;
        spec.m = 5;
        spec.d = 2;
        spec.mode = mode;
        GenResult a = gen(spec);
        GenResult b = gen(spec);
        CHECK(serialize_hg(a.hypergraph) == serialize_hg(b.hypergraph));
        CHECK(a.planted.has_value() == b.planted.has_value());
        if (a.planted) CHECK(a.planted->edge_indices == b.planted->edge_indices);
    }
}

TEST_CASE("gen modes") {
    SplitMix64 seeds(127);
    SUBCASE("random-flat output is reduced and d-flat") {
        for (int t = 0; t < 40; ++t) {
            GenSpec spec;
            spec.seed = seeds.next();
            spec.n = 4 + static_cast<int>(seeds.below(5));
            spec.m = 3 + static_cast<int>(seeds.below(4));
            spec.d = 1 + static_cast<int>(seeds.below(3));
            spec.mode = GenMode::RandomFlat;
            Hypergraph h = gen(spec).hypergraph;
            REQUIRE(is_reduced(h));
            REQUIRE(is_flat(h, spec.d).flat);
        }
    }
    SUBCASE("planted cover verifies") {
        for (int t = 0; t < 40; ++t) {
            GenSpec spec;
            spec.seed = seeds.next();
            spec.n = 4 + static_cast<int>(seeds.below(5));
            spec.m = 3 + static_cast<int>(seeds.below(4));
            spec.d = 1 + static_cast<int>(seeds.below(3));
            spec.mode = GenMode::PlantedCover;
            GenResult g = gen(spec);
            REQUIRE(g.planted.has_value());
            REQUIRE(verify_cover(g.hypergraph, *g.planted));
            REQUIRE(is_flat(g.hypergraph, spec.d).flat);
        }
    }
}
