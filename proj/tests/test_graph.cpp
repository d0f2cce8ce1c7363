#include "lapsim/graph.hpp"
#include "lapsim/linalg.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace lapsim;

TEST(Graph, RejectsInvalidInput) {
    EXPECT_THROW(Graph(3, {{1, 1}, {1, 2}, {2, 3}}), DomainError);
    EXPECT_THROW(Graph(3, {{1, 2}, {2, 1}, {2, 3}}), DomainError);
    EXPECT_THROW(Graph(3, {{1, 4}, {1, 2}}), DomainError);
    EXPECT_THROW(Graph(4, {{1, 2}, {3, 4}}), DomainError);
    EXPECT_THROW(Graph(0, {}), DomainError);
    EXPECT_NO_THROW(Graph(1, {}));
}

TEST(Graph, EdgesAreCanonical) {
    Graph g(3, {{3, 1}, {2, 1}});
    ASSERT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.edges()[0], (Edge{1, 2}));
    EXPECT_EQ(g.edges()[1], (Edge{1, 3}));
    EXPECT_TRUE(g.has_edge(3, 1));
    EXPECT_EQ(g.degree(1), 2u);
}

TEST(Graph, FamilyShapes) {
    EXPECT_TRUE(path_graph(5).is_tree());
    EXPECT_TRUE(star_graph(5).is_tree());
    EXPECT_TRUE(cycle_graph(5).is_cycle());
    EXPECT_FALSE(cycle_graph(5).is_tree());
    EXPECT_TRUE(complete_graph(5).is_complete());
    EXPECT_EQ(complete_graph(5).edge_count(), 10u);
    EXPECT_THROW(cycle_graph(2), DomainError);
    EXPECT_THROW(parse_family_kind("wheel"), ParseError);
    EXPECT_EQ(parse_family_kind("random_tree"), FamilyKind::random_tree);
}

TEST(Graph, RandomTreesAreDeterministic) {
    EXPECT_EQ(family(FamilyKind::random_tree, 9, 42), family(FamilyKind::random_tree, 9, 42));
    for (std::uint64_t seed = 0; seed < 30; ++seed) EXPECT_TRUE(family(FamilyKind::random_tree, 8, seed).is_tree());
}

TEST(Laplacian, RowsSumToZeroAndDiagonalIsDegree) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = gen::connected_graph(rng, 2 + trial % 7);
        IntMatrix l = laplacian(g);
        for (std::size_t i = 0; i < g.n(); ++i) {
            Integer s = 0;
            for (std::size_t j = 0; j < g.n(); ++j) s += l(i, j);
            EXPECT_EQ(s, 0);
            EXPECT_EQ(l(i, i), g.degree(i + 1));
        }
        EXPECT_EQ(l, l.transpose());
    }
}

TEST(SpanningTrees, KnownCounts) {
    EXPECT_EQ(spanning_tree_count(cycle_graph(7)), 7);
    EXPECT_EQ(spanning_tree_count(complete_graph(5)), 125);
    EXPECT_EQ(spanning_tree_count(path_graph(6)), 1);
    EXPECT_EQ(spanning_tree_count(Graph(1, {})), 1);
}

TEST(SpanningTrees, MatchEdgeSubsetEnumeration) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = gen::connected_graph(rng, 2 + trial % 6, 50);
        EXPECT_EQ(spanning_tree_count(g), oracle::spanning_trees_by_subsets(g));
    }
}

TEST(Operations, Whisker) {
    Graph w = whisker(cycle_graph(4));
    EXPECT_EQ(w.n(), 8u);
    EXPECT_EQ(w.edge_count(), 8u);
    for (Vertex i = 1; i <= 4; ++i) {
        EXPECT_TRUE(w.has_edge(i, 4 + i));
        EXPECT_EQ(w.degree(4 + i), 1u);
    }
    EXPECT_EQ(spanning_tree_count(w), 4);
}

TEST(Operations, Bridge) {
    Graph b = bridge(cycle_graph(3), complete_graph(3), 2, 1);
    EXPECT_EQ(b.n(), 6u);
    EXPECT_TRUE(b.has_edge(2, 4));
    EXPECT_EQ(spanning_tree_count(b), 9);
    EXPECT_THROW(bridge(cycle_graph(3), complete_graph(4), 1, 1), DomainError);
    EXPECT_THROW(bridge(cycle_graph(3), complete_graph(3), 4, 1), DomainError);
}

TEST(Operations, AttachTreeAndPath) {
    Graph g = attach_path(cycle_graph(4), 2, 3);
    EXPECT_EQ(g.n(), 7u);
    EXPECT_TRUE(g.has_edge(2, 5));
    EXPECT_TRUE(g.has_edge(5, 6));
    EXPECT_TRUE(g.has_edge(6, 7));
    EXPECT_EQ(g, attach_tree(cycle_graph(4), 2, path_graph(4)));
    EXPECT_THROW(attach_tree(cycle_graph(4), 1, cycle_graph(3)), DomainError);
    EXPECT_THROW(attach_path(cycle_graph(4), 9, 1), DomainError);
    EXPECT_THROW(attach_path(cycle_graph(4), 1, 0), DomainError);
}

TEST(LeafMove, MovesCrossingEdgesToTheLeaf) {
    // C_3 on {1,2,5}, K_3 on {3,4,5}, leaf 6 on 5.
    Graph wedge(6, {{1, 2}, {1, 5}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {5, 6}});
    Graph moved = leaf_move(wedge, {1, 2, 5, 6}, 5, 6);
    Graph expected(6, {{1, 2}, {1, 5}, {2, 5}, {3, 4}, {3, 6}, {4, 6}, {5, 6}});
    EXPECT_EQ(moved, expected);
    EXPECT_THROW(leaf_move(wedge, {1, 2, 5, 6}, 5, 1), DomainError);
    EXPECT_THROW(leaf_move(wedge, {1, 2, 6}, 5, 6), DomainError);
    EXPECT_THROW(leaf_move(wedge, {1, 5, 6}, 5, 6), DomainError);  // edge 2-1 crosses away from x
}

TEST(LeafMove, TransformIsUnimodularAndMapsLaplacians) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        auto inst = gen::leaf_move_instance(rng, 3 + trial % 3, 1 + trial % 4);
        Graph moved = leaf_move(inst.graph, inst.side, inst.x, inst.y);
        IntMatrix u = leaf_move_transform(inst.graph, inst.side, inst.x, inst.y);
        EXPECT_TRUE(is_unimodular(u));
        EXPECT_EQ(u * laplacian(inst.graph), laplacian(moved));
        EXPECT_EQ(spanning_tree_count(moved), spanning_tree_count(inst.graph));
    }
}

TEST(EdgeList, ParseAndRoundTrip) {
    Graph g = parse_edge_list("# a triangle\n3 3\n1 2\n2 3\n\n3 1\n");
    EXPECT_EQ(g, cycle_graph(3));
    std::ostringstream out;
    write_edge_list(out, complete_graph(4));
    EXPECT_EQ(parse_edge_list(out.str()), complete_graph(4));
}

TEST(EdgeList, Errors) {
    EXPECT_THROW(parse_edge_list(""), ParseError);
    EXPECT_THROW(parse_edge_list("3 2\n1 2\n"), ParseError);
    EXPECT_THROW(parse_edge_list("3 2\n1 2\n2 x\n"), ParseError);
    EXPECT_THROW(parse_edge_list("3 2\n1 2\n2 4\n"), ParseError);
    EXPECT_THROW(parse_edge_list("4 2\n1 2\n3 4\n"), ParseError);
    EXPECT_THROW(parse_edge_list("3 2\n1 2\n2 3 4\n"), ParseError);
}
