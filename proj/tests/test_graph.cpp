#include <gtest/gtest.h>

#include <numeric>

#include "dgspec/errors.hpp"
#include "dgspec/graph.hpp"
#include "support/random_graphs.hpp"

namespace dgspec {
namespace {

using testing::Rng;

std::vector<std::size_t> sorted_degrees(const Graph& g) {
    auto d = g.degrees();
    std::sort(d.begin(), d.end());
    return d;
}

TEST(Graph, RejectsLoopsDuplicatesAndOutOfRange) {
    EXPECT_THROW(Graph(3, {{1, 1}}), ValidationError);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), ValidationError);
    EXPECT_THROW(Graph(3, {{0, 3}}), ValidationError);
}

TEST(Graph, NormalizesAndSortsEdges) {
    const Graph g(4, {{3, 1}, {2, 0}, {1, 0}});
    ASSERT_EQ(g.size(), 3u);
    EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
    EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
    EXPECT_EQ(g.edges()[2], (Edge{1, 3}));
    EXPECT_TRUE(g.has_edge(3, 1));
    EXPECT_FALSE(g.has_edge(2, 3));
    EXPECT_EQ(g, Graph(4, {{0, 1}, {1, 3}, {0, 2}}));
}

TEST(Graph, DegreeSumIsTwiceEdgeCount) {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = testing::random_graph(rng, testing::uniform(rng, 0, 12));
        const auto d = g.degrees();
        EXPECT_EQ(std::accumulate(d.begin(), d.end(), std::size_t{0}), 2 * g.size());
    }
}

TEST(NamedFamilies, BuildsByParameters) {
    const long long three[] = {3};
    const long long four[] = {4};
    EXPECT_EQ(build_named(Family::complete, three).size(), 3u);
    const Graph e = build_named(Family::empty, four);
    EXPECT_EQ(e.order(), 4u);
    EXPECT_EQ(e.size(), 0u);
    const Graph c = build_named(Family::cycle, four);
    EXPECT_EQ(c.size(), 4u);
    EXPECT_EQ(sorted_degrees(c), (std::vector<std::size_t>{2, 2, 2, 2}));
}

TEST(NamedFamilies, RejectsBadParameters) {
    const long long none[] = {0};
    const long long two[] = {2, 3};
    const long long one[] = {3};
    EXPECT_THROW(build_named(Family::complete, none), ParameterError);
    EXPECT_THROW(build_named(Family::path, two), ParameterError);
    EXPECT_THROW(build_named(Family::complete_bipartite, one), ParameterError);
    EXPECT_THROW(cycle_graph(2), ParameterError);
}

TEST(NamedFamilies, ParsesNames) {
    for (Family f : {Family::complete, Family::empty, Family::complete_bipartite, Family::path, Family::cycle,
                     Family::hypercube}) {
        EXPECT_EQ(parse_family(to_string(f)), f);
    }
    EXPECT_FALSE(parse_family("petersen").has_value());
}

TEST(NamedFamilies, HypercubeShape) {
    const Graph q3 = hypercube(3);
    EXPECT_EQ(q3.order(), 8u);
    EXPECT_EQ(q3.size(), 12u);
    EXPECT_TRUE(is_bipartite(q3));
    EXPECT_EQ(hypercube(0).order(), 1u);
}

TEST(Complement, Examples) {
    EXPECT_EQ(complement(complete_graph(3)).size(), 0u);
    EXPECT_EQ(complement(empty_graph(4)).size(), 6u);
    const Graph c5c = complement(cycle_graph(5));
    EXPECT_EQ(c5c.size(), 5u);
    EXPECT_EQ(sorted_degrees(c5c), (std::vector<std::size_t>(5, 2)));
    EXPECT_TRUE(is_connected(c5c));
}

TEST(Union, Examples) {
    const Graph u = disjoint_union(complete_graph(2), complete_graph(2));
    EXPECT_EQ(u.order(), 4u);
    EXPECT_EQ(u.size(), 2u);
    EXPECT_TRUE(u.has_edge(2, 3));
    const Graph c = copies(complete_graph(3), 3);
    EXPECT_EQ(c.order(), 9u);
    EXPECT_EQ(c.size(), 9u);
    EXPECT_EQ(component_count(c), 3u);
}

TEST(Join, Examples) {
    EXPECT_EQ(join(empty_graph(2), empty_graph(2)), complete_bipartite(2, 2));
    const Graph c4 = join(empty_graph(2), empty_graph(2));
    EXPECT_EQ(c4.size(), 4u);
    EXPECT_EQ(sorted_degrees(c4), (std::vector<std::size_t>(4, 2)));
    EXPECT_TRUE(is_connected(c4));
    EXPECT_EQ(join(complete_graph(1), cycle_graph(4)).size(), 8u);
    const Graph big = join(complete_bipartite(3, 3), empty_graph(9));
    EXPECT_EQ(big.order(), 15u);
    EXPECT_EQ(big.size(), 63u);
}

TEST(Products, Examples) {
    const Graph sq = cartesian_product(complete_graph(2), complete_graph(2));
    EXPECT_EQ(sq.size(), 4u);
    EXPECT_EQ(sorted_degrees(sq), (std::vector<std::size_t>(4, 2)));
    EXPECT_TRUE(is_connected(sq));

    const Graph k33 = cartesian_product(complete_graph(3), complete_graph(3));
    EXPECT_EQ(k33.order(), 9u);
    EXPECT_EQ(k33.size(), 18u);
    EXPECT_TRUE(is_regular(k33));
    EXPECT_EQ(k33.degree(0), 4u);

    EXPECT_EQ(cartesian_product(path_graph(2), path_graph(3)).size(), 7u);

    const Graph two_k2 = kronecker_product(complete_graph(2), complete_graph(2));
    EXPECT_EQ(two_k2.size(), 2u);
    EXPECT_EQ(component_count(two_k2), 2u);

    const Graph c6 = kronecker_product(complete_graph(3), complete_graph(2));
    EXPECT_EQ(c6.order(), 6u);
    EXPECT_EQ(sorted_degrees(c6), (std::vector<std::size_t>(6, 2)));
    EXPECT_TRUE(is_connected(c6));
}

TEST(Products, VertexLabeling) {
    // (u, v) -> u * n2 + v
    const Graph p = cartesian_product(path_graph(2), path_graph(3));
    EXPECT_TRUE(p.has_edge(0 * 3 + 0, 0 * 3 + 1));
    EXPECT_TRUE(p.has_edge(0 * 3 + 2, 1 * 3 + 2));
    EXPECT_FALSE(p.has_edge(0 * 3 + 0, 1 * 3 + 1));
    const Graph k = kronecker_product(path_graph(2), path_graph(3));
    EXPECT_TRUE(k.has_edge(0 * 3 + 0, 1 * 3 + 1));
    EXPECT_TRUE(k.has_edge(0 * 3 + 1, 1 * 3 + 0));
}

TEST(ExtendedDoubleCover, Examples) {
    const Graph c4 = extended_double_cover(complete_graph(2));
    EXPECT_EQ(c4.order(), 4u);
    EXPECT_EQ(c4.size(), 4u);
    EXPECT_EQ(sorted_degrees(c4), (std::vector<std::size_t>(4, 2)));
    EXPECT_TRUE(is_connected(c4));

    const Graph k33 = extended_double_cover(complete_graph(3));
    EXPECT_EQ(k33, complete_bipartite(3, 3));

    const Graph matching = extended_double_cover(empty_graph(5));
    EXPECT_EQ(matching.size(), 5u);
    for (Vertex i = 0; i < 5; ++i) EXPECT_TRUE(matching.has_edge(i, 5 + i));
}

TEST(ExtendedDoubleCover, DefinitionOnRandomGraphs) {
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = testing::random_graph(rng, testing::uniform(rng, 0, 9));
        const Graph c = extended_double_cover(g);
        const auto n = static_cast<Vertex>(g.order());
        ASSERT_EQ(c.order(), 2u * n);
        EXPECT_EQ(c.size(), 2 * g.size() + n);
        EXPECT_TRUE(is_bipartite(c));
        EXPECT_EQ(is_connected(c), is_connected(g));
        for (Vertex i = 0; i < n; ++i) {
            EXPECT_EQ(c.degree(i), g.degree(i) + 1);
            for (Vertex j = 0; j < n; ++j) {
                EXPECT_EQ(c.has_edge(i, n + j), i == j || g.has_edge(i, j));
                if (i != j) {
                    EXPECT_FALSE(c.has_edge(i, j));
                    EXPECT_FALSE(c.has_edge(n + i, n + j));
                }
            }
        }
    }
}

TEST(IteratedCover, EdgeCountRecurrence) {
    const Graph a = iterated_edc(complete_graph(2), 2);
    EXPECT_EQ(a.order(), 8u);
    EXPECT_EQ(a.size(), 12u);
    const Graph b = iterated_edc(complete_graph(3), 2);
    EXPECT_EQ(b.order(), 12u);
    EXPECT_EQ(b.size(), 24u);
    EXPECT_EQ(iterated_edc(cycle_graph(5), 0), cycle_graph(5));
    EXPECT_EQ(iterated_edc(cycle_graph(5), 2), extended_double_cover(extended_double_cover(cycle_graph(5))));
}

TEST(IteratedCover, PreservesBipartiteness) {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = testing::random_bipartite(rng, testing::uniform(rng, 1, 6));
        for (std::size_t k = 0; k <= 3; ++k) EXPECT_TRUE(is_bipartite(iterated_edc(g, k)));
        EXPECT_TRUE(is_bipartite(iterated_edc(testing::random_graph(rng, 5), 1)));
    }
}

TEST(KFold, Examples) {
    EXPECT_EQ(double_graph(complete_graph(2)).size(), 4u);
    EXPECT_TRUE(is_connected(double_graph(complete_graph(2))));
    const Graph d = k_fold(complete_graph(3), 2);
    EXPECT_EQ(d.order(), 6u);
    EXPECT_EQ(d.size(), 12u);
    EXPECT_EQ(k_fold(cycle_graph(5), 1), cycle_graph(5));
    EXPECT_THROW(k_fold(cycle_graph(5), 0), ParameterError);
}

TEST(KFold, MatchesKroneckerWithAllOnes) {
    Rng rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = testing::random_graph(rng, testing::uniform(rng, 0, 7));
        const std::size_t k = testing::uniform(rng, 1, 4);
        const Graph d = k_fold(g, k);
        EXPECT_EQ(LoopyMatrix::adjacency(d), kronecker(LoopyMatrix::adjacency(g), LoopyMatrix::complete_with_loops(k)));
        EXPECT_EQ(d.size(), k * k * g.size());
    }
}

TEST(LineGraph, Examples) {
    EXPECT_EQ(line_graph(path_graph(3)), complete_graph(2));
    EXPECT_EQ(line_graph(complete_graph(3)), complete_graph(3));
    const Graph l = line_graph(cycle_graph(4));
    EXPECT_EQ(l.size(), 4u);
    EXPECT_EQ(sorted_degrees(l), (std::vector<std::size_t>(4, 2)));
    EXPECT_TRUE(is_connected(l));
}

TEST(LineGraph, EdgeCountFromDegrees) {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = testing::random_graph(rng, testing::uniform(rng, 0, 9));
        std::size_t expected = 0;
        for (std::size_t d : g.degrees()) expected += d * (d - (d > 0 ? 1 : 0)) / 2;
        EXPECT_EQ(line_graph(g).size(), expected);
    }
}

TEST(Constructions, EdgeCountLaws) {
    Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph a = testing::random_graph(rng, testing::uniform(rng, 0, 6));
        const Graph b = testing::random_graph(rng, testing::uniform(rng, 0, 6));
        const std::size_t n1 = a.order(), n2 = b.order(), m1 = a.size(), m2 = b.size();
        EXPECT_EQ(join(a, b).size(), m1 + m2 + n1 * n2);
        EXPECT_EQ(cartesian_product(a, b).size(), n1 * m2 + n2 * m1);
        EXPECT_EQ(kronecker_product(a, b).size(), 2 * m1 * m2);
        EXPECT_EQ(complement(a).size() + m1, n1 * (n1 - (n1 > 0 ? 1 : 0)) / 2);
    }
}

TEST(Constructions, NullGraphPropagates) {
    const Graph null;
    EXPECT_EQ(extended_double_cover(null).order(), 0u);
    EXPECT_EQ(iterated_edc(null, 3).order(), 0u);
    EXPECT_EQ(k_fold(null, 3).order(), 0u);
    EXPECT_EQ(cartesian_product(null, complete_graph(3)).order(), 0u);
    EXPECT_EQ(kronecker_product(complete_graph(3), null).order(), 0u);
    EXPECT_EQ(line_graph(null).order(), 0u);
    EXPECT_EQ(complement(null).order(), 0u);
    EXPECT_FALSE(is_connected(null));
}

TEST(Queries, Bipartiteness) {
    EXPECT_TRUE(is_bipartite(cycle_graph(6)));
    EXPECT_FALSE(is_bipartite(cycle_graph(5)));
    EXPECT_TRUE(is_bipartite(empty_graph(3)));
    EXPECT_TRUE(is_regular(cycle_graph(7)));
    EXPECT_FALSE(is_regular(path_graph(3)));
    EXPECT_EQ(component_count(empty_graph(4)), 4u);
}

TEST(LoopyMatrix, Validation) {
    EXPECT_THROW(LoopyMatrix(2, {0, 1, 0, 0}), ValidationError);
    EXPECT_THROW(LoopyMatrix(2, {0, 2, 2, 0}), ValidationError);
    EXPECT_THROW(LoopyMatrix(2, {0, 1, 1}), ValidationError);
    const auto t = LoopyMatrix::complete_with_loops(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(t(i, j), 1);
}

}  // namespace
}  // namespace dgspec
