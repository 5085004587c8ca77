#include <gtest/gtest.h>

#include <random>

#include "mcds/generators.hpp"
#include "mcds/oracle.hpp"
#include "test_support.hpp"

using namespace mcds;
using namespace mcds::testing;

TEST(SolutionSet, SortedAndDuplicateFree) {
    SolutionSet s({VertexSet::of({w_vertex(1)}), VertexSet::of({u_vertex(2)}), VertexSet::of({u_vertex(1), w_vertex(3)}),
                   VertexSet::of({w_vertex(1)})});
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s.sets()[0].to_string(), "u1 w3");
    EXPECT_EQ(s.sets()[1].to_string(), "u2");
    EXPECT_EQ(s.sets()[2].to_string(), "w1");
    EXPECT_FALSE(s.insert(VertexSet::of({u_vertex(2)})));
    EXPECT_TRUE(s.insert(VertexSet::of({u_vertex(1)})));
    EXPECT_EQ(s.sets()[0].to_string(), "u1");
}

TEST(Oracle, Star) {
    const auto sols = enumerate_mcds_bruteforce(star_u(4));
    ASSERT_EQ(sols.size(), 1u);
    EXPECT_EQ(sols.sets()[0], VertexSet::of({u_vertex(1)}));
}

TEST(Oracle, CompleteBipartiteK23) {
    const auto sols = enumerate_mcds_bruteforce(k23());
    std::vector<std::string> got;
    for (const auto& d : sols) got.push_back(d.to_string());
    const std::vector<std::string> want{"u1 w1", "u1 w2", "u1 w3", "u2 w1", "u2 w2", "u2 w3"};
    EXPECT_EQ(got, want);
}

TEST(Oracle, LowerBoundK3Has27) {
    const auto g = lower_bound_graph({3});
    ASSERT_EQ(g.n(), 11);
    EXPECT_EQ(enumerate_mcds_bruteforce(g).size(), 27u);
}

TEST(Oracle, RefusesGraphsAboveCap) {
    const auto g = lower_bound_graph({5});
    OracleOptions o;
    o.max_n = 16;
    try {
        enumerate_mcds_bruteforce(g, o);
        FAIL() << "expected refusal";
    } catch (const OracleLimitError& e) {
        EXPECT_NE(std::string(e.what()).find("max_n=16"), std::string::npos);
    }
}

TEST(Oracle, WorksOnNonConvexGraphs) {
    // C6 has no convex ordering; its minimal CDSs are the 4-vertex paths.
    const BipartiteGraph c6(3, 3, {{1, 3}, {1, 2}, {2, 3}});
    const auto sols = enumerate_mcds_bruteforce(c6);
    EXPECT_EQ(sols.size(), 6u);
    for (const auto& d : sols) EXPECT_EQ(d.size(), 4);
}

TEST(Oracle, MatchesNaiveReference) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto g = random_convex_graph({2 + static_cast<int>(seed % 4), 2 + static_cast<int>(seed / 4 % 4), seed});
        const auto ref = naive::all_mcds(naive::from(g));
        EXPECT_EQ(enumerate_mcds_bruteforce(g).sets(), ref);
    }
}

TEST(Oracle, ScanModesAndThreadCountsAgree) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto g = random_convex_graph({3 + static_cast<int>(seed % 5), 3 + static_cast<int>(seed / 5 % 5), seed});
        OracleOptions def;
        OracleOptions sub;
        sub.mode = MinimalityMode::SubsetOfFound;
        OracleOptions par;
        par.threads = 4;
        const auto a = enumerate_mcds_bruteforce(g, def);
        EXPECT_EQ(a, enumerate_mcds_bruteforce(g, sub));
        EXPECT_EQ(a, enumerate_mcds_bruteforce(g, par));
    }
}

TEST(Oracle, SampledMembersPassTheDefinition) {
    std::mt19937_64 rng(1);
    const auto g = lower_bound_graph({5});
    const auto sols = enumerate_mcds_bruteforce(g);
    for (int k = 0; k < 100; ++k) {
        const auto& d = sols.sets()[rng() % sols.size()];
        EXPECT_TRUE(is_minimal_cds_definition(g, d));
    }
}

TEST(Oracle, FrozenRandomFixture) {
    // (nU=6, nW=6, seed=42); the count was cross-checked with the naive reference.
    const auto g = random_convex_graph({6, 6, 42});
    const std::vector<Interval> expected{{1, 2}, {3, 6}, {2, 5}, {1, 2}, {6, 6}, {1, 1}};
    EXPECT_EQ(g.intervals(), expected);
    const auto sols = enumerate_mcds_bruteforce(g);
    EXPECT_EQ(sols.size(), 6u);
    EXPECT_EQ(sols.sets(), naive::all_mcds(naive::from(g)));
}

TEST(Lemmas, LowerBoundSolutionsAreClean) {
    const auto g = lower_bound_graph({3});
    const auto rep = check_lemmas(g, enumerate_mcds_bruteforce(g));
    EXPECT_TRUE(rep.ok()) << rep.summary();
    EXPECT_EQ(rep.results.size(), std::size(kAllLemmas));
}

TEST(Lemmas, VacuousOnK23) {
    const SolutionSet one({VertexSet::of({u_vertex(1), w_vertex(1)})});
    EXPECT_TRUE(check_lemmas(k23(), one).ok());
}

TEST(Lemmas, GuardRejectsNonMinimalMembers) {
    const SolutionSet bad({VertexSet::of({u_vertex(1), u_vertex(2), w_vertex(1)})});
    EXPECT_THROW(check_lemmas(k23(), bad), GraphError);
    EXPECT_THROW(check_lemmas(star_u(3), SolutionSet{}), GraphError);
}

TEST(Lemmas, CleanOnEveryOracleSolutionOfSmallGraphs) {
    for (int nu = 2; nu <= 4; ++nu)
        for (int nw = 2; nw <= 3; ++nw)
            for_each_convex_graph(nu, nw, [](const ConvexBipartiteGraph& g) {
                if (!is_connected(g)) return;
                const auto sols = enumerate_mcds_bruteforce(g);
                const auto rep = check_lemmas(g, sols);
                ASSERT_TRUE(rep.ok()) << rep.summary();
                const VertexSet cuts = cut_vertices(g);
                for (const auto& d : sols) ASSERT_TRUE(cuts.is_subset_of(d));
            });
}

TEST(Lemmas, UniversalVertexNeverPairsWithNestedInterval) {
    // Adding u* = [1, |W|] contains every other interval, so no solution may
    // hold u* together with another U vertex.
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto base = random_convex_graph({3, 5, seed});
        auto iv = base.intervals();
        iv.push_back({1, 5});
        const ConvexBipartiteGraph g(4, 5, iv);
        for (const auto& d : enumerate_mcds_bruteforce(g))
            if (d.contains(u_vertex(4))) {
                EXPECT_EQ(popcount(d.u_bits()), 1) << d.to_string();
            }
    }
}

TEST(Lemmas, SummaryNamesEveryCheck) {
    const auto g = lower_bound_graph({3});
    const auto text = check_lemmas(g, enumerate_mcds_bruteforce(g)).summary();
    for (LemmaId id : kAllLemmas) EXPECT_NE(text.find(std::string(lemma_name(id)) + ": 0"), std::string::npos);
}
