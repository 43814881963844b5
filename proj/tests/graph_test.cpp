#include <gtest/gtest.h>

#include "padom/enumerate.hpp"
#include "padom/families.hpp"
#include "padom/graph.hpp"

#include "brute_force.hpp"

using namespace padom;

namespace {

bool symmetric_and_loopless(const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u) {
        if (g.adjacent(u, u)) return false;
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.adjacent(u, v) != g.adjacent(v, u)) return false;
    }
    return true;
}

} // namespace

TEST(BuildGraph, PathFromEdgeList) {
    const Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    EXPECT_EQ(p4.order(), 4);
    EXPECT_EQ(p4.size(), 3);
    EXPECT_TRUE(p4.adjacent(2, 1));
    EXPECT_FALSE(p4.adjacent(0, 3));
    EXPECT_EQ(p4.closed_nbhd(1), (VertexSet{0, 1, 2}));
    EXPECT_EQ(p4.min_degree(), 1);
    EXPECT_EQ(p4.max_degree(), 2);
}

TEST(BuildGraph, DuplicatesCollapse) {
    const Graph k2 = build_graph(2, {{0, 1}, {1, 0}, {0, 1}});
    EXPECT_EQ(k2.size(), 1);
    EXPECT_EQ(k2.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(BuildGraph, RejectsLoopsAndBadEndpoints) {
    EXPECT_THROW(build_graph(3, {{0, 0}}), GraphError);
    EXPECT_THROW(build_graph(3, {{0, 3}}), GraphError);
    EXPECT_THROW(build_graph(3, {{-1, 1}}), GraphError);
    EXPECT_THROW(build_graph(65, {}), GraphError);
}

TEST(DeleteVertices, RelabelsSurvivors) {
    const Graph p4 = generate_family("path:4");
    auto d = delete_vertices(p4, {0});
    EXPECT_EQ(d.graph, generate_family("path:3"));
    EXPECT_EQ(d.original, (std::vector<Vertex>{1, 2, 3}));
    EXPECT_EQ(d.relabel(3), 2);
    EXPECT_EQ(d.relabel(0), -1);

    auto c = delete_vertices(generate_family("cycle:4"), {0, 2});
    EXPECT_EQ(c.graph, edgeless_graph(2));

    EXPECT_EQ(delete_vertices(generate_family("complete:5"), {4}).graph, generate_family("complete:4"));
    EXPECT_EQ(delete_vertices(p4, p4.vertices()).graph.order(), 0);
}

TEST(SubdivideEdge, Examples) {
    const Graph k3 = generate_family("complete:3");
    const Graph s = subdivide_edge(k3, 0, 1);
    EXPECT_EQ(s.order(), 4);
    EXPECT_EQ(s.size(), 4);
    EXPECT_FALSE(s.adjacent(0, 1));
    EXPECT_EQ(s.open_nbhd(3), (VertexSet{0, 1}));
    EXPECT_TRUE(brute::isomorphic(s, generate_family("cycle:4")));

    EXPECT_TRUE(brute::isomorphic(subdivide_edge(generate_family("path:2"), 0, 1), generate_family("path:3")));
    const Graph c4 = generate_family("cycle:4");
    for (auto [u, v] : c4.edges()) EXPECT_TRUE(brute::isomorphic(subdivide_edge(c4, u, v), generate_family("cycle:5")));
}

TEST(SubdivideEdge, RejectsNonEdge) {
    EXPECT_THROW(subdivide_edge(generate_family("path:4"), 0, 2), GraphError);
}

TEST(SubdivideEdge, CountsAndDominationMonotoneOnSmallGraphs) {
    for (int n = 2; n <= 5; ++n) {
        for_each_labeled_graph(n, false, [](const Graph& g) {
            for (auto [u, v] : g.edges()) {
                const Graph h = subdivide_edge(g, u, v);
                ASSERT_TRUE(symmetric_and_loopless(h));
                ASSERT_EQ(h.order(), g.order() + 1);
                ASSERT_EQ(h.size(), g.size() + 1);
                ASSERT_GE(brute::gamma(h), brute::gamma(g));
            }
        });
    }
}

TEST(StructuralPredicates, Examples) {
    auto c4 = structural_predicates(generate_family("cycle:4"), {0, 2});
    EXPECT_TRUE(c4.independent);
    EXPECT_TRUE(c4.vertex_cover);
    EXPECT_TRUE(c4.connected);
    EXPECT_FALSE(c4.complete);

    auto k3 = structural_predicates(generate_family("complete:3"), {0, 1});
    EXPECT_TRUE(k3.clique);
    EXPECT_TRUE(k3.vertex_cover);
    EXPECT_TRUE(k3.complete);

    auto p4 = structural_predicates(generate_family("path:4"), {0, 3});
    EXPECT_FALSE(p4.vertex_cover);
    EXPECT_TRUE(p4.independent);

    auto e = structural_predicates(edgeless_graph(3), {});
    EXPECT_TRUE(e.edgeless);
    EXPECT_FALSE(e.connected);
}

TEST(StructuralPredicates, ConnectivityAgreesWithDepthFirstSearch) {
    for (int n = 0; n <= 5; ++n)
        for_each_labeled_graph(n, false, [](const Graph& g) { ASSERT_EQ(is_connected(g), brute::connected(g)); });
}

TEST(AddEdge, IdempotentOnExistingEdge) {
    const Graph c4 = generate_family("cycle:4");
    EXPECT_EQ(add_edge(c4, 0, 1), c4);
    EXPECT_EQ(add_edge(c4, 0, 2).size(), 5);
}
