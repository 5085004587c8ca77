#include <gtest/gtest.h>

#include <set>

#include "mcds/enumerator.hpp"
#include "mcds/generators.hpp"
#include "mcds/io.hpp"
#include "mcds/oracle.hpp"
#include "test_support.hpp"

using namespace mcds;

TEST(LowerBound, K3Layout) {
    const auto g = lower_bound_graph({3});
    EXPECT_EQ(g.n_u(), 5);
    EXPECT_EQ(g.n_w(), 6);
    const std::vector<Interval> want{{1, 3}, {1, 6}, {1, 6}, {1, 6}, {4, 6}};
    EXPECT_EQ(g.intervals(), want);
    EXPECT_TRUE(validate(g).well_formed());

    const auto lay = lower_bound_layout({3});
    EXPECT_EQ(lay.u, u_vertex(1));
    EXPECT_EQ(lay.v, u_vertex(5));
    ASSERT_EQ(lay.triples.size(), 3u);
    EXPECT_EQ(lay.triples[0].to_string(), "w1 w2 w3");
    EXPECT_EQ(lay.triples[1].to_string(), "u2 u3 u4");
    EXPECT_EQ(lay.triples[2].to_string(), "w4 w5 w6");
    EXPECT_EQ(lay.name(w_vertex(2)), "y1");
    EXPECT_EQ(lay.name(u_vertex(4)), "z2");
    EXPECT_EQ(lay.name(w_vertex(4)), "x3");
}

TEST(LowerBound, RejectsBadK) {
    for (int k : {-1, 0, 1, 2, 4, 6, 10}) {
        EXPECT_THROW(lower_bound_graph({k}), std::invalid_argument) << k;
        EXPECT_THROW(lower_bound_layout({k}), std::invalid_argument) << k;
    }
}

TEST(LowerBound, SizesAndTriplesPartitionTheMiddle) {
    for (int k = 3; k <= 21; k += 2) {
        const auto g = lower_bound_graph({k});
        EXPECT_EQ(g.n(), 3 * k + 2);
        const auto lay = lower_bound_layout({k});
        VertexSet all = VertexSet::of({lay.u, lay.v});
        for (const auto& t : lay.triples) {
            EXPECT_EQ(t.size(), 3);
            EXPECT_TRUE((all & t).empty());
            all |= t;
            // Each triple is independent.
            t.for_each([&](VertexRef x) { EXPECT_TRUE((g.neighbors(x) & t).empty()); });
        }
        EXPECT_EQ(all, g.all_vertices());
    }
}

TEST(LowerBound, OracleConfirmsThreeToTheK) {
    // k = 3 against the from-scratch reference, k = 5 against the oracle.
    const auto g3 = lower_bound_graph({3});
    EXPECT_EQ(mcds::testing::naive::all_mcds(mcds::testing::naive::from(g3)).size(), 27u);
    const auto g5 = lower_bound_graph({5});
    OracleOptions o;
    o.threads = 4;
    EXPECT_EQ(enumerate_mcds_bruteforce(g5, o).size(), 243u);
}

TEST(LowerBound, EnumeratorCountsAndShape) {
    int expected = 1;
    for (int k = 1; k <= 7; ++k) {
        expected *= 3;
        if (k < 3 || k % 2 == 0) continue;
        const auto g = lower_bound_graph({k});
        const auto lay = lower_bound_layout({k});
        const auto res = enumerate_mcds(g);
        ASSERT_EQ(res.solutions.size(), static_cast<std::size_t>(expected)) << "k=" << k;
        std::set<std::vector<VertexRef>> distinct;
        for (const auto& d : res.solutions) {
            EXPECT_FALSE(d.contains(lay.u));
            EXPECT_FALSE(d.contains(lay.v));
            for (const auto& t : lay.triples) EXPECT_EQ((d & t).size(), 1) << d.to_string();
            distinct.insert(d.members());
        }
        EXPECT_EQ(distinct.size(), res.solutions.size());
    }
}

TEST(Random, ReproducibleSerialization) {
    for (std::uint64_t seed : {0ULL, 1ULL, 7ULL, 42ULL, 123456789ULL}) {
        const RandomParams p{6, 7, seed};
        EXPECT_EQ(serialize_graph(random_convex_graph(p)), serialize_graph(random_convex_graph(p)));
    }
    EXPECT_NE(serialize_graph(random_convex_graph({8, 8, 1})), serialize_graph(random_convex_graph({8, 8, 2})));
}

TEST(Random, FrozenSmallCase) {
    EXPECT_EQ(serialize_graph(random_convex_graph({2, 2, 1})), "cbg 1\n2 2\n1 2\n1 2\n");
}

TEST(Random, OutputIsWellFormed) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const int nu = 2 + static_cast<int>(seed % 7);
        const int nw = 2 + static_cast<int>(seed / 7 % 7);
        const auto g = random_convex_graph({nu, nw, seed});
        EXPECT_EQ(g.n_u(), nu);
        EXPECT_EQ(g.n_w(), nw);
        const auto rep = validate(g);
        EXPECT_TRUE(rep.well_formed());
        EXPECT_TRUE(rep.connected);
    }
}

TEST(Random, RetryExhaustionAndBadSizes) {
    EXPECT_THROW(random_convex_graph({2, 8, 1, 1}), GenerationError);
    EXPECT_THROW(random_convex_graph({1, 4, 0}), std::invalid_argument);
    EXPECT_THROW(random_convex_graph({4, 65, 0}), std::invalid_argument);
}
