#include <gtest/gtest.h>

#include "padom/families.hpp"

#include "brute_force.hpp"

using namespace padom;

TEST(Families, CrownThreeIsSixCycle) {
    const Graph c = generate_family("crown:3");
    EXPECT_EQ(c.order(), 6);
    EXPECT_EQ(c.size(), 6);
    EXPECT_TRUE(brute::isomorphic(c, generate_family("cycle:6")));
}

TEST(Families, CirculantDistanceOneIsCycle) {
    EXPECT_EQ(generate_family("circulant:9,1,8"), generate_family("cycle:9"));
    EXPECT_EQ(generate_family({Family::circulant, {9, 1, 8}, {}}), generate_family("cycle:9"));
    EXPECT_EQ(symmetric_distances(15, {1, 2}), (std::vector<int>{1, 2, 13, 14}));
}

TEST(Families, RookGraph) {
    const Graph r = generate_family("rook:3");
    EXPECT_EQ(r.order(), 9);
    EXPECT_EQ(r.size(), 18);
    // x_{i,j} -> (i-1)*3 + (j-1); the closed neighborhood is its row and column
    const Vertex x22 = 4;
    EXPECT_EQ(r.closed_nbhd(x22), (VertexSet{1, 3, 4, 5, 7}));
}

TEST(Families, StandardShapes) {
    EXPECT_EQ(generate_family("complete_bipartite:2,3").size(), 6);
    EXPECT_EQ(generate_family("star:3"), generate_family("complete_bipartite:1,3"));
    EXPECT_EQ(generate_family("edgeless:4").size(), 0);
    EXPECT_EQ(generate_family("complete:5").size(), 10);

    const Graph pet = generate_family("generalized_petersen:5,2");
    EXPECT_EQ(pet.order(), 10);
    EXPECT_EQ(pet.size(), 15);
    for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(pet.degree(v), 3);

    const Graph cor = generate_family("corona(path:2)");
    EXPECT_TRUE(brute::isomorphic(cor, generate_family("path:4")));
    EXPECT_EQ(cor.open_nbhd(2), (VertexSet{0}));

    const Graph j = generate_family("join(edgeless:3,edgeless:3)");
    EXPECT_EQ(j, generate_family("complete_bipartite:3,3"));

    const Graph u = generate_family("disjoint_union(complete:2,complete:1)");
    EXPECT_EQ(u.order(), 3);
    EXPECT_EQ(u.size(), 1);

    EXPECT_EQ(generate_family("cartesian_product(complete:3,complete:3)"), generate_family("rook:3"));
}

TEST(Families, RejectsInvalidParameters) {
    EXPECT_THROW(generate_family("circulant:9"), GraphError);        // empty distance set
    EXPECT_THROW(generate_family("circulant:9,1"), GraphError);      // not symmetric
    EXPECT_THROW(generate_family("circulant:9,0,9"), GraphError);    // 0 ∈ S
    EXPECT_THROW(generate_family("generalized_petersen:2,1"), GraphError);
    EXPECT_THROW(generate_family("generalized_petersen:6,0"), GraphError);
    EXPECT_THROW(generate_family("generalized_petersen:6,6"), GraphError);
    EXPECT_THROW(generate_family("cycle:2"), GraphError);
    EXPECT_THROW(generate_family("crown"), GraphError);
    EXPECT_THROW(generate_family("rook:9"), GraphError);             // 81 vertices
    EXPECT_THROW(generate_family("join(path:2)"), GraphError);

    try {
        generate_family("circulant:9,1");
        FAIL();
    } catch (const GraphError& e) {
        EXPECT_NE(std::string(e.what()).find("n-x in S"), std::string::npos);
    }
}

TEST(FamilySpec, ParseAndPrint) {
    for (std::string s : {"crown:3", "circulant:15,1,2,13,14", "join(edgeless:3,crown:4)", "corona(path:3)",
                          "cartesian_product(complete:2,cycle:4)"})
        EXPECT_EQ(FamilySpec::parse(s).to_string(), s);
    EXPECT_THROW(FamilySpec::parse("nosuch:3"), ParseError);
    EXPECT_THROW(FamilySpec::parse("crown:"), ParseError);
    EXPECT_THROW(FamilySpec::parse("join(crown:3"), ParseError);
    EXPECT_THROW(FamilySpec::parse("crown:3x"), ParseError);
}
