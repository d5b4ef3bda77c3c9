#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "robustpd/robustpd.hpp"

using namespace robustpd;

namespace {

const Graph k33 = build(FamilySpec::complete_bipartite(3, 3));
const Graph k34 = build(FamilySpec::complete_bipartite(3, 4));
const Graph star15 = build(FamilySpec::star(15));

VertexSet random_subset(std::mt19937& rng, std::size_t n, double p) {
    VertexSet s;
    std::bernoulli_distribution coin(p);
    for (Vertex v = 0; v < n; ++v)
        if (coin(rng)) s.insert(v);
    return s;
}

} // namespace

TEST(Observe, Examples) {
    auto one = observe(k33, VertexSet{0});
    EXPECT_EQ(one.observed, (VertexSet{0, 3, 4, 5}));
    EXPECT_FALSE(one.is_full);
    EXPECT_TRUE(observe(k33, VertexSet{0, 1}).is_full);
    EXPECT_TRUE(observe(star15, VertexSet{0}).is_full);
    EXPECT_TRUE(observe(k33, VertexSet{}).observed.empty());
}

TEST(Observe, TraceReplaysToObservedSet) {
    auto g = build(FamilySpec::grid(6, 6));
    auto r = observe(g, VertexSet{1, 4});
    VertexSet replay;
    for (const auto& step : r.trace) {
        EXPECT_FALSE(replay.contains(step.vertex));
        replay.insert(step.vertex);
        if (step.rule == ObservationRule::zero_forcing) {
            // the source had exactly this one unobserved neighbour when it forced
            VertexSet open = g.neighbors(step.source) - replay;
            EXPECT_TRUE(open.empty());
        }
    }
    EXPECT_EQ(replay, r.observed);
    EXPECT_TRUE(r.is_full);
}

TEST(Observe, FixedPoint) {
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        auto g = oracle::random_connected(rng, 3 + static_cast<std::size_t>(i % 14), 0.15);
        auto r = observe(g, random_subset(rng, g.order(), 0.2));
        r.observed.for_each([&](Vertex v) { EXPECT_NE((g.neighbors(v) - r.observed).size(), 1U); });
    }
}

TEST(Observe, MatchesScanOracle) {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        auto g = oracle::random_connected(rng, 2 + static_cast<std::size_t>(i % 18), 0.12);
        auto s = random_subset(rng, g.order(), 0.25);
        auto expected = oracle::observe(oracle::adjacency(g), s.to_vector());
        auto got = observe(g, s).observed;
        for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(got.contains(v), expected[v]);
    }
}

TEST(Observe, Monotone) {
    std::mt19937 rng(9);
    for (int i = 0; i < 200; ++i) {
        auto g = oracle::random_connected(rng, 4 + static_cast<std::size_t>(i % 14), 0.1);
        auto s = random_subset(rng, g.order(), 0.15);
        auto t = s | random_subset(rng, g.order(), 0.15);
        EXPECT_TRUE(observe(g, s).observed.is_subset_of(observe(g, t).observed));
    }
}

TEST(Observe, ConfluentUnderShuffledForcingOrder) {
    std::mt19937 rng(13);
    std::mt19937_64 order_rng(17);
    for (int i = 0; i < 200; ++i) {
        auto g = oracle::random_connected(rng, 4 + static_cast<std::size_t>(i % 16), 0.1);
        auto s = random_subset(rng, g.order(), 0.2);
        auto base = observe(g, s).observed;
        for (int rep = 0; rep < 5; ++rep) EXPECT_EQ(observe(g, s, order_rng).observed, base);
    }
}

TEST(IsPds, Examples) {
    auto g44 = build(FamilySpec::grid(4, 4));
    auto gamma = gamma_p(g44);
    EXPECT_EQ(gamma.value, 2);
    EXPECT_TRUE(is_pds(g44, gamma.witness));
    EXPECT_TRUE(is_pds(k33, k33.vertices()));
    EXPECT_FALSE(is_pds(k33, VertexSet{}));
}

TEST(IsMinimalPds, Examples) {
    EXPECT_TRUE(is_minimal_pds(k34, VertexSet{0, 1}));
    EXPECT_FALSE(is_minimal_pds(k33, VertexSet{0, 1, 3}));
    EXPECT_TRUE(is_minimal_pds(star15, VertexSet{0}));
    EXPECT_FALSE(is_minimal_pds(star15, VertexSet{1}));
}

TEST(GammaP, Examples) {
    EXPECT_EQ(gamma_p(k33).value, 2);
    EXPECT_EQ(gamma_p(k33).witness, (VertexSet{0, 1}));
    EXPECT_EQ(gamma_p(build(FamilySpec::grid(6, 6))).value, 2);
    for (int n = 1; n <= 12; ++n) {
        auto r = gamma_p(build(FamilySpec::path(n)));
        EXPECT_EQ(r.value, 1);
        EXPECT_EQ(r.witness, VertexSet{0});
    }
    EXPECT_EQ(gamma_p(star15).witness, VertexSet{0});
}

TEST(GammaP, RejectsDisconnected) {
    EXPECT_THROW((void)gamma_p(Graph::from_edges(4, {{0, 1}, {2, 3}})), StructuralError);
}

TEST(GammaP, MatchesExhaustiveOracleAndThirdBound) {
    std::mt19937 rng(21);
    for (int i = 0; i < 150; ++i) {
        auto g = oracle::random_connected(rng, 3 + static_cast<std::size_t>(i % 12), 0.15);
        auto r = gamma_p(g);
        EXPECT_EQ(r.value, oracle::gamma(g));
        EXPECT_TRUE(is_pds(g, r.witness));
        EXPECT_LE(3 * r.value, static_cast<int>(g.order()));
    }
}

TEST(GammaP, DegreeRestrictionLosesNothing) {
    std::mt19937 rng(23);
    int checked = 0;
    for (int i = 0; checked < 200; ++i) {
        auto g = oracle::random_connected(rng, 4 + static_cast<std::size_t>(i % 7), 0.2);
        if (g.max_degree() < 3) continue;
        ++checked;
        auto restricted = gamma_p(g, {}, true);
        auto full = gamma_p(g, {}, false);
        EXPECT_EQ(restricted.value, full.value);
        restricted.witness.for_each([&](Vertex v) { EXPECT_GE(g.degree(v), 3U); });
    }
}

TEST(GammaP, WitnessIsLexicographicallyFirstAmongCandidates) {
    std::mt19937 rng(29);
    for (int i = 0; i < 60; ++i) {
        auto g = oracle::random_connected(rng, 5 + static_cast<std::size_t>(i % 8), 0.2);
        auto r = gamma_p(g);
        auto pool = pmu_candidates(g, true);
        std::optional<VertexSet> first;
        detail::for_each_combination(pool, static_cast<std::size_t>(r.value), [&](const VertexSet& s) {
            if (!is_pds(g, s)) return false;
            first = s;
            return true;
        });
        ASSERT_TRUE(first.has_value());
        EXPECT_EQ(*first, r.witness);
    }
}

TEST(GammaP, SameAnswerForAnyJobCount) {
    auto g = build(FamilySpec::grid(5, 6));
    auto one = gamma_p(g);
    for (unsigned jobs : {2U, 3U, 8U}) {
        SearchControl c;
        c.jobs = jobs;
        auto r = gamma_p(g, c);
        EXPECT_EQ(r.value, one.value);
        EXPECT_EQ(r.witness, one.witness);
    }
}

TEST(GammaP, DeadlineRaisesTimeout) {
    auto g = build(FamilySpec::grid(8, 8));
    auto c = SearchControl::with_timeout(0.0);
    EXPECT_THROW((void)gamma_p(g, c), SearchTimeout);
}

TEST(EnumerateMinimalPds, Examples) {
    auto k33_sets = enumerate_minimal_pds(k33, 2);
    EXPECT_EQ(k33_sets.size(), 15U);
    for (const auto& s : k33_sets) EXPECT_EQ(s.size(), 2U);
    EXPECT_EQ(k33_sets.front(), (VertexSet{0, 1}));
    auto star_sets = enumerate_minimal_pds(star15, 1);
    ASSERT_EQ(star_sets.size(), 1U);
    EXPECT_EQ(star_sets[0], VertexSet{0});
}

TEST(EnumerateMinimalPds, SortedAndMinimal) {
    std::mt19937 rng(31);
    for (int i = 0; i < 40; ++i) {
        auto g = oracle::random_connected(rng, 4 + static_cast<std::size_t>(i % 7), 0.2);
        auto sets = enumerate_minimal_pds(g, 3);
        for (std::size_t t = 0; t < sets.size(); ++t) {
            EXPECT_TRUE(is_minimal_pds(g, sets[t]));
            EXPECT_TRUE(t == 0 || lex_compare(sets[t - 1], sets[t]) < 0);
        }
    }
}

TEST(EnumerateMinimalPds, EveryPdsContainsOne) {
    std::mt19937 rng(37);
    for (int i = 0; i < 80; ++i) {
        auto g = oracle::random_connected(rng, 4 + static_cast<std::size_t>(i % 8), 0.2);
        auto s = random_subset(rng, g.order(), 0.4);
        if (!is_pds(g, s)) continue;
        auto minimal = enumerate_minimal_pds(g, static_cast<int>(s.size()));
        EXPECT_TRUE(std::any_of(minimal.begin(), minimal.end(), [&](const VertexSet& m) { return m.is_subset_of(s); }));
    }
}
