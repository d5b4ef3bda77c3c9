#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <tuple>

#include "oracles.hpp"
#include "robustpd/robustpd.hpp"

using namespace robustpd;

namespace {

/// Every way to put `total` PMUs on `side` labelled vertices.
void for_each_side_vector(int side, int total, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> v(static_cast<std::size_t>(side), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == side - 1) {
            v[static_cast<std::size_t>(i)] = left;
            f(v);
            return;
        }
        for (int m = 0; m <= left; ++m) {
            v[static_cast<std::size_t>(i)] = m;
            rec(i + 1, left - m);
        }
    };
    rec(0, total);
}

/// Minimum size of an evenly distributed robust placement, found by scanning totals.
int min_even_split(int a, int b, int k) {
    for (int p = 2;; ++p)
        for (int x = 0; x <= p; ++x)
            if (is_k_rpds_bipartite(profile(a, b, evenly_distribute(a, b, x, p - x)), k)) return p;
}

} // namespace

TEST(Profile, Examples) {
    auto p = profile_from_sides(3, 3, {1, 2, 2}, {2, 2, 2});
    EXPECT_EQ(p.u_a, 2);
    EXPECT_EQ(p.x, 5);
    EXPECT_EQ(p.u_b, 3);
    auto empty_a = profile(3, 4, PmuMultiset{{3, 1}, {4, 1}});
    EXPECT_EQ(empty_a.u_a, -1);
    EXPECT_EQ(empty_a.x, 0);
    EXPECT_EQ(empty_a.u_b, -1);
    auto lone = profile_from_sides(3, 4, {0, 0, 5}, {1, 1, 1, 1});
    EXPECT_EQ(lone.u_a, -1);
    EXPECT_EQ(lone.sorted_a, (std::vector<int>{0, 0, 5}));
    EXPECT_THROW((void)profile(2, 4, PmuMultiset{}), PreconditionError);
    EXPECT_THROW((void)profile(4, 3, PmuMultiset{}), PreconditionError);
    EXPECT_THROW((void)profile(3, 3, PmuMultiset{{6, 1}}), PreconditionError);
}

TEST(Profile, EqualSidesCanonicalised) {
    auto p = profile(3, 3, PmuMultiset{{0, 3}, {3, 1}});
    auto q = profile(3, 3, PmuMultiset{{3, 3}, {0, 1}});
    EXPECT_EQ(p, q);
    EXPECT_LE(p.x, p.y);
}

TEST(RobustPredicate, Examples) {
    EXPECT_TRUE(is_k_rpds_bipartite(profile_from_sides(3, 3, {1, 1, 1}, {1, 1, 1}), 2));
    EXPECT_TRUE(is_k_rpds_bipartite(profile_from_sides(3, 4, {0, 0, 0}, {1, 1, 1, 1}), 1));
    EXPECT_FALSE(is_k_rpds_bipartite(profile_from_sides(3, 3, {0, 0, 1}, {0, 0, 1}), 1));
}

TEST(RobustPredicate, MatchesFailureEnumerationSmall) {
    for (int a = 3; a <= 4; ++a)
        for (int b = a; b <= 4; ++b) {
            auto g = build(FamilySpec::complete_bipartite(a, b));
            auto adj = oracle::adjacency(g);
            for (int total = 0; total <= 6; ++total)
                oracle::for_each_multiset(g.order(), total, [&](const oracle::Counts& c) {
                    PmuMultiset s;
                    for (Vertex v = 0; v < c.size(); ++v) s.add(v, c[v]);
                    auto p = profile(a, b, s);
                    for (int k = 0; k <= 4; ++k) EXPECT_EQ(is_k_rpds_bipartite(p, k), oracle::is_k_rpds(adj, c, k));
                    return false;
                });
        }
}

TEST(UncoverNumber, IsTheMostRemovableFromOneSide) {
    for (int a = 3; a <= 5; ++a)
        for (int total = 0; total <= 7; ++total)
            for_each_side_vector(a, total, [&](const std::vector<int>& side) {
                auto p = profile_from_sides(a, a + 1, side, {});
                if (p.u_a < 0) return;
                oracle::Counts c(side.begin(), side.end());
                auto zeros_after = [&](const oracle::Counts& fail) {
                    int zeros = 0;
                    for (std::size_t i = 0; i < c.size(); ++i)
                        if (c[i] - fail[i] == 0) ++zeros;
                    return zeros;
                };
                // no removal of u_a PMUs empties two vertices
                bool two_emptied = oracle::for_each_failure(c, p.u_a, [&](const oracle::Counts& f) { return zeros_after(f) >= 2; });
                EXPECT_FALSE(two_emptied);
                if (p.u_a + 1 <= total) {
                    bool some = oracle::for_each_failure(c, p.u_a + 1, [&](const oracle::Counts& f) { return zeros_after(f) >= 2; });
                    EXPECT_TRUE(some);
                }
            });
}

TEST(EvenlyDistribute, Examples) {
    EXPECT_EQ(even_split(3, 5), (std::vector<int>{2, 2, 1}));
    EXPECT_EQ(profile(3, 4, evenly_distribute(3, 4, 5, 9)).sorted_a, (std::vector<int>{1, 2, 2}));
    EXPECT_EQ(profile(3, 4, evenly_distribute(3, 4, 0, 9)).sorted_a, (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(profile(3, 4, evenly_distribute(3, 4, 0, 9)).sorted_b, (std::vector<int>{2, 2, 2, 3}));
    auto s = evenly_distribute(3, 4, 5, 9);
    EXPECT_EQ(s.multiplicity(0), 2);
    EXPECT_EQ(s.multiplicity(3), 3);
    EXPECT_EQ(s.total(), 14);
}

// Robustness needs x + u_b >= k and y + u_a >= k, and each uncover number depends
// on one side only, so an even split is never worse iff it maximises u per side.
TEST(EvenlyDistribute, EvenSplitIsNeverWorse) {
    auto uncover = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v[0] + v[1] - 1;
    };
    for (int side = 3; side <= 6; ++side)
        for (int total = 0; total <= 12; ++total) {
            int best = -1;
            for_each_side_vector(side, total, [&](const std::vector<int>& v) { best = std::max(best, uncover(v)); });
            EXPECT_EQ(uncover(even_split(side, total)), best) << side << " " << total;
        }
    for (int a = 3; a <= 4; ++a)
        for (int b = a; b <= 5; ++b)
            for (int x = 0; x <= 6; ++x)
                for (int y = 0; y <= 6; ++y)
                    for_each_side_vector(a, x, [&](const std::vector<int>& sa) {
                        for_each_side_vector(b, y, [&](const std::vector<int>& sb) {
                            auto p = profile_from_sides(a, b, sa, sb);
                            auto even = profile(a, b, evenly_distribute(a, b, x, y));
                            for (int k = 0; k <= 6; ++k)
                                EXPECT_TRUE(!is_k_rpds_bipartite(p, k) || is_k_rpds_bipartite(even, k));
                        });
                    });
}

TEST(JumpCondition, Examples) {
    auto j = jump_condition(3, 3, 4, 6);
    ASSERT_TRUE(j.has_value());
    EXPECT_EQ(*j, (JumpParams{1, 0, 1, 0}));
    auto j34 = jump_condition(3, 4, 7, 10);
    ASSERT_TRUE(j34.has_value());
    EXPECT_EQ(j34->q_b, 1);
    EXPECT_EQ(j34->r_b, 0);
    EXPECT_EQ(j34->q_a, 2);
    EXPECT_FALSE(jump_condition(3, 3, 3, 5).has_value());
    EXPECT_THROW((void)jump_condition(3, 3, -1, 5), PreconditionError);
    EXPECT_THROW((void)jump_condition(3, 3, 1, 1), PreconditionError);
}

TEST(JumpCondition, WitnessUniqueAlongTheSequence) {
    for (int a = 3; a <= 6; ++a)
        for (int b = a; b <= 6; ++b) {
            auto seq = pk_sequence(a, b, 40);
            for (int k = 0; k <= 40; ++k)
                EXPECT_LE(all_jump_witnesses(a, b, k, seq.values[static_cast<std::size_t>(k)]).size(), 1U);
        }
}

TEST(JumpCondition, OnlyEvenSplitAtAJump) {
    for (int a = 3; a <= 5; ++a)
        for (int b = a; b <= 5; ++b) {
            auto seq = pk_sequence(a, b, 30);
            for (int k = 0; k < 30; ++k) {
                int pk = seq.values[static_cast<std::size_t>(k)];
                auto j = jump_condition(a, b, k, pk);
                if (!j) continue;
                int x_jump = j->q_a * a + j->r_a;
                for (int x = 0; x <= pk; ++x) {
                    bool ok = is_k_rpds_bipartite(profile(a, b, evenly_distribute(a, b, x, pk - x)), k);
                    if (a == b)
                        EXPECT_EQ(ok, x == x_jump || pk - x == x_jump);
                    else
                        EXPECT_EQ(ok, x == x_jump) << a << b << " k" << k << " x" << x;
                }
            }
        }
}

TEST(PkSequence, Examples) {
    EXPECT_EQ(pk_sequence(3, 3, 7).values, (std::vector<int>{2, 3, 4, 5, 6, 8, 9, 10}));
    EXPECT_EQ(pk_sequence(3, 4, 8).values, (std::vector<int>{2, 3, 4, 6, 7, 8, 9, 10, 12}));
    EXPECT_EQ(pk_sequence(3, 3, 0).values, (std::vector<int>{2}));
    auto s = pk_sequence(3, 3, 7);
    EXPECT_TRUE(s.jump_flags[4]);
    EXPECT_FALSE(s.jump_flags[3]);
}

TEST(PkSequence, ClosedFormsAndSandwich) {
    for (int n = 3; n <= 8; ++n) {
        auto seq = pk_sequence(n, n, 50);
        for (int k = 0; k <= 50; ++k) EXPECT_EQ(seq.values[static_cast<std::size_t>(k)], gpk_knn(n, k)) << n << " " << k;
    }
    auto s34 = pk_sequence(3, 4, 50);
    for (int k = 0; k <= 50; ++k) EXPECT_EQ(s34.values[static_cast<std::size_t>(k)], gpk_k34(k));
    for (int a = 3; a <= 7; ++a)
        for (int b = a; b <= 9; ++b) {
            auto seq = pk_sequence(a, b, 40);
            for (int k = 0; k <= 40; ++k) {
                int pk = seq.values[static_cast<std::size_t>(k)];
                EXPECT_GE(pk, k + 2);
                EXPECT_LE(pk, 2 * (k + 1));
                if (k > 0) {
                    int d = pk - seq.values[static_cast<std::size_t>(k - 1)];
                    EXPECT_TRUE(d == 1 || d == 2);
                }
            }
        }
}

TEST(PkSequence, MatchesMinimumEvenSplit) {
    for (int a = 3; a <= 6; ++a)
        for (int b = a; b <= 6; ++b) {
            auto seq = pk_sequence(a, b, 30);
            for (int k = 0; k <= 30; ++k) EXPECT_EQ(seq.values[static_cast<std::size_t>(k)], min_even_split(a, b, k));
        }
}

TEST(PkSequence, MatchesGraphSearch) {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 4}, {3, 5}}) {
        auto g = build(FamilySpec::complete_bipartite(a, b));
        auto seq = pk_sequence(a, b, 4);
        for (int k = 0; k <= 4; ++k) EXPECT_EQ(min_k_rpds(g, k).value, seq.values[static_cast<std::size_t>(k)]);
    }
}

TEST(ClosedForms, Examples) {
    EXPECT_EQ(gpk_knn(3, 5), 8);
    EXPECT_EQ(gpk_knn(3, 0), 2);
    EXPECT_EQ(gpk_knn(4, 6), pk_sequence(4, 4, 6).values.back());
    EXPECT_EQ(gpk_k34(6), 9);
    EXPECT_EQ(gpk_k34(5), 8);
    EXPECT_EQ(gpk_k34(8), 12);
    EXPECT_EQ(gpk_k333m(3, 7), 9);
    EXPECT_EQ(gpk_k333m(2, 5), 8);
    EXPECT_EQ(gpk_k333m(3, 1), 3);
    EXPECT_EQ(gpk_k333m(3, 0), 2);
    for (int k = 1; k <= 60; ++k) EXPECT_EQ(gpk_k333m(2, k), gpk_knn(3, k));
    EXPECT_THROW((void)gpk_knn(2, 1), PreconditionError);
    EXPECT_THROW((void)gpk_k333m(1, 1), PreconditionError);
}

// Late in a period the value carries an extra n-3 over k+2+(n-2)q.
TEST(ClosedForms, KnnLatePeriodMatchesSearch) {
    const std::vector<std::tuple<int, int, int>> exact{{4, 2, 5}, {4, 3, 6}, {4, 4, 7}, {4, 5, 8},
                                                       {5, 3, 7}, {5, 4, 8}, {5, 5, 9}};
    for (auto [n, k, value] : exact) {
        EXPECT_EQ(gpk_knn(n, k), value) << n << " " << k;
        EXPECT_LT(k + 2 + (n - 2) * (k / (n + 2)), value);
    }
    for (int n = 4; n <= 5; ++n)
        for (int k = 2; k <= 4; ++k)
            EXPECT_EQ(min_k_rpds(build(FamilySpec::complete_bipartite(n, n)), k).value, gpk_knn(n, k));
}

TEST(ClosedForms, OverlapBoundOnK34IsNotTightAtSix) {
    auto k34 = build(FamilySpec::complete_bipartite(3, 4));
    auto cert = bigpds_j(k34, 2);
    EXPECT_EQ(cert.size, 4);
    EXPECT_EQ(sjbound_upper(cert.size, 2, 2, 5), 8);
    EXPECT_EQ(sjbound_upper(cert.size, 2, 2, 6), 10);
    EXPECT_EQ(gpk_k34(6), 9);
}

TEST(ClosedForms, MultipartiteMatchesSearch) {
    auto g = build(FamilySpec::complete_multipartite({3, 3, 3}));
    for (int k = 0; k <= 3; ++k) EXPECT_EQ(min_k_rpds(g, k).value, gpk_k333m(3, k));
}

TEST(BipartiteWitness, RobustOnTheGraph) {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 6}}) {
        auto g = build(FamilySpec::complete_bipartite(a, b));
        auto seq = pk_sequence(a, b, 12);
        for (int k = 0; k <= 12; ++k) {
            int pk = seq.values[static_cast<std::size_t>(k)];
            auto w = bipartite_witness(a, b, k, pk);
            ASSERT_TRUE(w.has_value());
            EXPECT_EQ(w->total(), pk);
            EXPECT_TRUE(is_k_rpds(g, *w, k).ok);
            EXPECT_FALSE(bipartite_witness(a, b, k, pk - 1).has_value());
        }
    }
}
