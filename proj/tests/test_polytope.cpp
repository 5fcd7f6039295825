#include "mdc/constructions.hpp"
#include "mdc/corpus.hpp"
#include "mdc/polytope.hpp"

#include <gtest/gtest.h>

using namespace mdc;

TEST(Polytope, RejectsInteriorPoint) {
    EXPECT_THROW(makePolytope(pts({{0, 0}, {2, 0}, {0, 2}, {1, 0}})), InputError);
    EXPECT_THROW(makePolytope(pts({{0, 0}, {0, 0}, {1, 0}})), InputError);
}

TEST(Polytope, CubeEdgesAndFacets) {
    auto cube = corpus()["cube"].polytope;
    EXPECT_EQ(edges(cube).size(), 12u);
    EXPECT_EQ(facets(cube).size(), 6u);
    EXPECT_EQ(fVectorLP(cube), (std::vector<long>{8, 12, 6}));
}

TEST(Polytope, LowerDimensionalHull) {
    // square in the plane z = 1 of R^3
    auto p = makePolytope(pts({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
    EXPECT_EQ(affineDim(p.verts), 2);
    EXPECT_EQ(edges(p).size(), 4u);
    EXPECT_EQ(facets(p).size(), 4u);
    EXPECT_EQ(fVectorLP(p), (std::vector<long>{4, 4}));
}

TEST(Polytope, EdgeSupportSystemMatchesMidpointTest) {
    for (auto name : {"hexagonal_pyramid", "kallay_skew", "hemicube"}) {
        auto p = corpus()[name].polytope;
        auto hp = hullCoordinates(p);
        for (int u = 0; u < p.numVertices(); ++u)
            for (int v = u + 1; v < p.numVertices(); ++v)
                EXPECT_EQ(isEdgeLP(hp, u, v), feasible(edgeSupportSystem(hp, u, v))) << name << " " << u << " " << v;
    }
}

TEST(Polytope, HintedEdgesMatchLP) {
    std::vector<PolytopeV> ps{graphicalZonotope(completeGraph(3)), graphicalZonotope(completeBipartite(2, 2)),
                              bipartiteTruncation(3, 1, TruncKind::P), bipartiteTruncation(3, 1, TruncKind::Q),
                              bipartiteTruncation(2, 2, TruncKind::P), bipartiteTruncation(2, 2, TruncKind::Q),
                              bipartiteTruncation(1, 4, TruncKind::P), bipartiteTruncation(2, 3, TruncKind::Q),
                              matroidPolytope(uniformMatroid(2, 4)).polytope};
    for (const auto& p : ps) {
        ASSERT_TRUE(p.edgeHint);
        EXPECT_EQ(sortedEdges(*p.edgeHint), sortedEdges(edgesLP(p)));
    }
}

TEST(Polytope, EulerOnCorpus) {
    for (auto& [name, f] : corpus())
        if (affineDim(f.polytope.verts) >= 2) EXPECT_TRUE(eulerHolds(fVectorLP(f.polytope))) << name;
}

TEST(Polytope, DeformedPermutahedronCheck) {
    EXPECT_TRUE(isDeformedPermutahedron(bipartiteTruncation(2, 2, TruncKind::P)).ok);
    auto cube = corpus()["cube"].polytope;
    auto r = isDeformedPermutahedron(cube);
    EXPECT_FALSE(r.ok);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(isRootDirection(ratVec({0, 2, -2})));
    EXPECT_FALSE(isRootDirection(ratVec({1, -2})));
}

TEST(Polytope, MatroidCoordinateTest) {
    EXPECT_FALSE(matroidCoordinateTest(bipartiteTruncation(2, 2, TruncKind::P)));
    EXPECT_TRUE(matroidCoordinateTest(bipartiteTruncation(3, 1, TruncKind::Q)));
    EXPECT_TRUE(matroidCoordinateTest(matroidPolytope(uniformMatroid(2, 4)).polytope));
}

TEST(Polytope, SmallVerdictTable) {
    // (n, m, kind, indecomposable, coordinate test)
    struct Row {
        int n, m;
        TruncKind k;
        bool indec, coord;
    };
    for (auto r : std::vector<Row>{{1, 1, TruncKind::P, true, true},
                                   {1, 2, TruncKind::P, true, true},
                                   {1, 3, TruncKind::P, true, false},
                                   {1, 3, TruncKind::Q, true, true},
                                   {2, 2, TruncKind::P, true, false},
                                   {2, 2, TruncKind::Q, false, false}}) {
        auto p = bipartiteTruncation(r.n, r.m, r.k);
        EXPECT_EQ(isIndecomposable(frameworkOf(p)), r.indec) << r.n << r.m;
        EXPECT_EQ(matroidCoordinateTest(p), r.coord) << r.n << r.m;
    }
}
