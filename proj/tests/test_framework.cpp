#include "mdc/corpus.hpp"
#include "mdc/framework.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mdc;

namespace {

Framework fwFrom(int dim, std::vector<std::string> ids, std::vector<RatVector> pts,
                 std::vector<std::pair<std::string, std::string>> es) {
    return build(FrameworkSpec{dim, std::move(ids), std::move(pts), std::move(es)});
}

Framework unitSquare() {
    return fwFrom(2, {"a", "b", "c", "d"}, {ratVec({0, 0}), ratVec({1, 0}), ratVec({1, 1}), ratVec({0, 1})},
                  {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}

}  // namespace

TEST(Framework, ValidateReportsProblems) {
    FrameworkSpec s{2, {"a", "a"}, {ratVec({0, 0}), ratVec({1})}, {{"a", "x"}, {"a", "a"}}};
    auto v = validate(s);
    EXPECT_GE(v.size(), 3u);
    EXPECT_THROW(build(s), InputError);
}

TEST(Framework, TriangleIsIndecomposable) {
    auto fw = frameworkOf(corpus()["triangle"].polytope);
    EXPECT_EQ(dcDimension(fw), 1);
    EXPECT_TRUE(isIndecomposable(fw));
    EXPECT_EQ(dependencyPartition(fw).blocks.size(), 1u);
}

TEST(Framework, SquareBlocksArePairs) {
    auto fw = unitSquare();
    EXPECT_EQ(dcDimension(fw), 2);
    auto part = dependencyPartition(fw);
    ASSERT_EQ(part.blocks.size(), 2u);
    EXPECT_EQ(part.blocks[0], (std::vector<int>{0, 2}));
    EXPECT_EQ(part.blocks[1], (std::vector<int>{1, 3}));
}

TEST(Framework, DisconnectedIsDecomposable) {
    auto fw = fwFrom(1, {"a", "b", "c", "d"}, {ratVec({0}), ratVec({1}), ratVec({5}), ratVec({6})},
                     {{"a", "b"}, {"c", "d"}});
    EXPECT_EQ(dcDimension(fw), 2);
    EXPECT_FALSE(isIndecomposable(fw));
}

TEST(Framework, ApplyDeformationRoundTrip) {
    auto fw = unitSquare();
    RatVector lambda{2, 3, 2, 3};
    auto psi = applyDeformation(fw, lambda);
    auto back = edgeDeformationVector(fw, psi);
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, lambda);
    EXPECT_EQ(psi.pts[0], fw.pts[0]);  // anchor keeps its coordinates
    auto same = applyDeformation(fw, RatVector(4, 1));
    EXPECT_EQ(same.pts, fw.pts);
    EXPECT_THROW(applyDeformation(fw, RatVector{1, 2, 3, 4}), ContractError);
    EXPECT_THROW(applyDeformation(fw, RatVector{-1, 1, -1, 1}), ContractError);
}

TEST(Framework, ImplicitEdges) {
    auto sq = unitSquare();
    EXPECT_FALSE(isImplicitEdge(sq, "a", "c"));
    auto tri = fwFrom(2, {"a", "b", "c", "m"}, {ratVec({0, 0}), ratVec({2, 0}), ratVec({0, 2}), ratVec({1, 0})},
                      {{"a", "m"}, {"m", "b"}, {"b", "c"}, {"c", "a"}});
    // a, m, b collinear: the chord ab is forced
    EXPECT_TRUE(isImplicitEdge(tri, "a", "b"));
    EXPECT_FALSE(isImplicitEdge(tri, "m", "c"));  // lambda_am varies independently
    auto cl = closure(tri);
    EXPECT_GT(cl.numEdges(), tri.numEdges());
    EXPECT_EQ(dcDimension(cl), dcDimension(tri));
}

TEST(Framework, ProjectionCreatesDegenerateEdges) {
    auto cube = frameworkOf(corpus()["cube"].polytope);
    auto p = project(cube, {ratVec({0, 0, 1})});
    EXPECT_EQ(p.dim, 2);
    int deg = 0;
    for (int e = 0; e < p.numEdges(); ++e) deg += p.degenerate(e);
    EXPECT_EQ(deg, 4);
    auto q = quotientDegenerate(p);
    EXPECT_EQ(q.fw.numVertices(), 4);
    EXPECT_EQ(dcDimension(q.fw), dcDimension(p));
    EXPECT_EQ(dcDimension(p), 2);
}

TEST(Framework, InducedSubframework) {
    auto cube = frameworkOf(corpus()["cube"].polytope);
    auto face = inducedSubframework(cube, {0, 1, 2, 3});
    EXPECT_EQ(face.numEdges(), 4);
    EXPECT_EQ(dcDimension(face), 2);
}

class CorpusProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(CorpusProperties, SpaceInvariants) {
    auto fw = frameworkOf(corpus()[GetParam()].polytope);
    auto ds = deformationSpace(fw);
    auto rows = cycleEquations(fw, ds.fundamentalCycles);
    EXPECT_EQ((rows.empty() ? 0 : rank(rows)) + ds.dim(), static_cast<std::size_t>(fw.numEdges()));
    for (const auto& b : ds.basis)
        for (const auto& r : rows) EXPECT_EQ(sgn(dot(r, b)), 0);
    EXPECT_TRUE(inDeformationSpan(fw, ds, unitVector(fw)));
    auto part = dependencyPartition(fw, ds);
    std::vector<int> count(fw.numEdges());
    for (const auto& b : part.blocks)
        for (int e : b) ++count[e];
    for (int c : count) EXPECT_EQ(c, 1);
    EXPECT_EQ(isIndecomposable(fw), ds.dim() == 1 && isConnected(fw));
}

INSTANTIATE_TEST_SUITE_P(All, CorpusProperties, ::testing::ValuesIn([] {
                             std::vector<std::string> names;
                             for (auto& [n, f] : corpus()) names.push_back(n);
                             return names;
                         }()));

TEST(Corpus, ExpectedVerdicts) {
    for (auto& [name, f] : corpus()) {
        auto fw = frameworkOf(f.polytope);
        if (f.dc) EXPECT_EQ(dcDimension(fw), *f.dc) << name;
        EXPECT_EQ(isIndecomposable(fw), f.indecomposable) << name;
        if (f.blocks) EXPECT_EQ(static_cast<int>(dependencyPartition(fw).blocks.size()), *f.blocks) << name;
    }
}

TEST(Corpus, KallaySkewEdgesAreNotCoplanar) {
    auto p = corpus()["kallay_skew"].polytope;
    auto at = [&](const std::string& s) { return p.verts[frameworkOf(p).index(s)]; };
    RatMatrix m{sub(at("B"), at("A")), sub(at("X"), at("A")), sub(at("Y"), at("A"))};
    EXPECT_EQ(rank(m), 3u);
    auto q = corpus()["kallay_coplanar"].polytope;
    auto at2 = [&](const std::string& s) { return q.verts[frameworkOf(q).index(s)]; };
    RatMatrix m2{sub(at2("B"), at2("A")), sub(at2("X"), at2("A")), sub(at2("Y"), at2("A"))};
    EXPECT_EQ(rank(m2), 2u);
}

// random closed walks: tree path out, random steps, tree path back
TEST(Framework, ExtraCyclesKeepRank) {
    std::mt19937 rng(7);
    for (auto name : {"cube", "kallay_skew", "persimmon", "triangular_cupola"}) {
        auto fw = frameworkOf(corpus()[name].polytope);
        auto ds = deformationSpace(fw);
        auto cycles = ds.fundamentalCycles;
        std::size_t r0 = rank(cycleEquations(fw, cycles));
        auto adj = adjacency(fw);
        for (int k = 0; k < 20; ++k) {
            int start = static_cast<int>(rng() % fw.numVertices()), x = start;
            std::vector<int> walk{start};
            for (int s = 0; s < 6; ++s) {
                x = adj[x][rng() % adj[x].size()].first;
                walk.push_back(x);
            }
            auto back = treePath(ds.forest, x, start);
            if (back.size() > 2) walk.insert(walk.end(), back.begin() + 1, back.end() - 1);
            if (walk.size() > 1 && walk.back() == start) walk.pop_back();
            cycles.push_back(walk);
        }
        EXPECT_EQ(rank(cycleEquations(fw, cycles)), r0) << name;
    }
}

TEST(Corpus, ImplicitEdgeConditions) {
    for (auto& [name, f] : corpus()) {
        auto fw = frameworkOf(f.polytope);
        auto ds = deformationSpace(fw);
        for (const auto& e : fw.edges) EXPECT_TRUE(isImplicitEdge(fw, ds, e[0], e[1])) << name;
        int flagged = 0;
        for (int u = 0; u < fw.numVertices(); ++u)
            for (int v = u + 1; v < fw.numVertices(); ++v) {
                auto t = implicitEdgeTest(fw, ds, u, v);
                if (t.spanCondition && !t.nonnegCondition) ++flagged;
            }
        if (flagged) RecordProperty(name, flagged);
    }
}
