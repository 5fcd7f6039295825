#include "mdc/constructions.hpp"
#include "mdc/corpus.hpp"
#include "mdc/report.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace mdc;

namespace {

// Brute force over all 2^|arcs| orientations; Kahn's algorithm decides acyclicity.
long bruteAcyclic(const SimpleGraph& g) {
    const int a = static_cast<int>(g.arcs.size()), n = g.numNodes();
    long count = 0;
    for (long mask = 0; mask < (1L << a); ++mask) {
        std::vector<std::vector<int>> out(n);
        std::vector<int> indeg(n, 0);
        for (int i = 0; i < a; ++i) {
            int u = g.arcs[i][0], v = g.arcs[i][1];
            if (mask >> i & 1) std::swap(u, v);
            out[u].push_back(v);
            ++indeg[v];
        }
        std::vector<int> q;
        for (int v = 0; v < n; ++v)
            if (!indeg[v]) q.push_back(v);
        int seen = 0;
        while (!q.empty()) {
            int u = q.back();
            q.pop_back();
            ++seen;
            for (int v : out[u])
                if (--indeg[v] == 0) q.push_back(v);
        }
        count += seen == n;
    }
    return count;
}

bool connectedMask(const SimpleGraph& g, int mask) {
    if (!mask) return false;
    int start = __builtin_ctz(mask), reach = 1 << start;
    for (bool grew = true; grew;) {
        grew = false;
        for (auto [u, v] : g.arcs) {
            bool iu = mask >> u & 1, iv = mask >> v & 1;
            if (iu && iv && ((reach >> u & 1) != (reach >> v & 1))) {
                reach |= (1 << u) | (1 << v);
                grew = true;
            }
        }
    }
    return reach == mask;
}

// ordered splits (S, V \ S), both sides nonempty and connected
long bruteSplits(const SimpleGraph& g) {
    const int n = g.numNodes(), all = (1 << n) - 1;
    long c = 0;
    for (int s = 1; s < all; ++s) c += connectedMask(g, s) && connectedMask(g, all ^ s);
    return c;
}

}  // namespace

TEST(Orientations, CountsMatchBruteForce) {
    for (const auto& g : {completeGraph(3), completeGraph(4), cycleGraph(4), cycleGraph(5), completeBipartite(2, 2),
                          completeBipartite(2, 3), completeBipartite(1, 4)})
        EXPECT_EQ(static_cast<long>(acyclicOrientations(g).size()), bruteAcyclic(g));
    // frozen from the brute force above
    EXPECT_EQ(acyclicOrientations(completeBipartite(2, 2)).size(), 14u);
    EXPECT_EQ(acyclicOrientations(completeBipartite(2, 3)).size(), 46u);
}

TEST(Zonotope, Graphical) {
    EXPECT_EQ(graphicalZonotope(completeBipartite(1, 3)).numVertices(), 8);
    auto hex = graphicalZonotope(completeGraph(3));
    EXPECT_EQ(hex.numVertices(), 6);
    EXPECT_EQ(affineDim(hex.verts), 2);
    EXPECT_EQ(graphicalZonotope(completeBipartite(2, 2)).numVertices(), 14);
}

TEST(Zonotope, FacetCountBySplits) {
    for (int N = 2; N <= 6; ++N)
        for (int n = 1; 2 * n <= N; ++n) {
            auto g = completeBipartite(n, N - n);
            EXPECT_EQ(connectedSplitCount(g), bruteSplits(g));
            EXPECT_EQ(connectedSplitCount(g), static_cast<long>(facets(graphicalZonotope(g)).size()));
        }
    EXPECT_EQ(connectedSplitCount(completeBipartite(2, 3)), 22);
    EXPECT_EQ(connectedSplitCount(completeBipartite(3, 3)), 48);
    EXPECT_EQ(bipartiteFacetFormula(2, 3), 27);
}

TEST(Bipartite, VertexCounts) {
    EXPECT_EQ(bipartiteTruncation(3, 1, TruncKind::P).numVertices(), 7);
    EXPECT_EQ(bipartiteTruncation(3, 1, TruncKind::Q).numVertices(), 6);
    EXPECT_EQ(bipartiteTruncation(2, 2, TruncKind::Q).numVertices(), 12);
    EXPECT_EQ(bipartiteTruncation(1, 1, TruncKind::P).numVertices(), 1);
    EXPECT_THROW(bipartiteTruncation(1, 2, TruncKind::Q), InputError);
    EXPECT_THROW(bipartiteTruncation(0, 2, TruncKind::P), InputError);
    EXPECT_THROW(fVectorZonotopal(1, 2, TruncKind::Q), InputError);
}

TEST(Bipartite, ZonotopalFVectorsMatchLP) {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; n + m <= 5; ++m)
            for (auto kind : {std::optional<TruncKind>{}, std::optional<TruncKind>{TruncKind::P},
                              std::optional<TruncKind>{TruncKind::Q}}) {
                if (kind == TruncKind::Q && n * m <= 2) continue;
                if (!kind && n + m > 4) continue;
                PolytopeV p = kind ? bipartiteTruncation(n, m, *kind) : graphicalZonotope(completeBipartite(n, m));
                if (p.numVertices() < 2) continue;
                p.edgeHint.reset();
                EXPECT_EQ(fVectorZonotopal(n, m, kind), fVectorLP(p)) << n << "," << m;
            }
}

TEST(Wedge, Basics) {
    // the extreme face of a point is the point itself, so no lifted copy appears
    PolytopeV point = makePolytope(pts({{1, 2}}));
    EXPECT_EQ(permutahedralWedge(point, 1, WedgeSide::Max).numVertices(), 1);
    PolytopeV s = bipartiteTruncation(1, 3, TruncKind::P);
    // independent count: every vertex plus a copy for each vertex off the extreme face
    for (int i = 1; i <= s.dim; ++i)
        for (auto side : {WedgeSide::Min, WedgeSide::Max}) {
            Rational ext = s.verts[0][i - 1];
            for (const auto& v : s.verts)
                ext = side == WedgeSide::Min ? std::min(ext, v[i - 1]) : std::max(ext, v[i - 1]);
            int onFace = 0;
            for (const auto& v : s.verts) onFace += v[i - 1] == ext;
            auto w = permutahedralWedge(s, i, side);
            EXPECT_EQ(w.numVertices(), 2 * s.numVertices() - onFace);
            EXPECT_TRUE(redundantVertices(w).empty());
        }
    EXPECT_EQ(permutahedralWedge(s, 1, WedgeSide::Min).numVertices(), 11);
    EXPECT_THROW(permutahedralWedge(s, 0, WedgeSide::Min), InputError);
}

TEST(Wedge, SquareOverEdge) {
    auto sq = matroidPolytope(directSum(uniformMatroid(1, 2), uniformMatroid(1, 2))).polytope;
    auto w = permutahedralWedge(sq, 1, WedgeSide::Min);
    EXPECT_EQ(w.numVertices(), 6);
    EXPECT_EQ(edges(w).size(), 9u);
    EXPECT_EQ(dcDimension(frameworkOf(w)), 2);
}

TEST(Wedge, SegmentToTriangle) {
    PolytopeV seg = makePolytope(pts({{0, 0}, {1, 0}}));
    auto w = permutahedralWedge(seg, 1, WedgeSide::Min);
    EXPECT_EQ(w.numVertices(), 3);
    EXPECT_TRUE(isIndecomposable(frameworkOf(w)));
}

TEST(Matroid, Polytopes) {
    auto u24 = matroidPolytope(uniformMatroid(2, 4));
    EXPECT_EQ(u24.polytope.numVertices(), 6);
    EXPECT_EQ(u24.components, 1);
    auto k4 = graphicMatroid(completeGraph(4));
    EXPECT_EQ(k4.bases.size(), 16u);  // Cayley: 4^2
    EXPECT_TRUE(exchangeAxiom(k4));
    MatroidBases bad{4, {{0, 1}, {2, 3}}};
    EXPECT_FALSE(exchangeAxiom(bad));
    EXPECT_THROW(matroidPolytope(bad), InputError);
    // loops and coloops are not components
    auto withLoop = directSum(uniformMatroid(2, 3), uniformMatroid(0, 1));
    auto withColoop = directSum(withLoop, uniformMatroid(1, 1));
    EXPECT_EQ(matroidPolytope(withColoop).components, 1);
    EXPECT_TRUE(isIndecomposable(frameworkOf(matroidPolytope(withColoop).polytope)));
}

TEST(Matroid, DirectSumDimension) {
    MatroidBases s = uniformMatroid(2, 4);
    s = directSum(s, uniformMatroid(2, 3));
    auto mp = matroidPolytope(s);
    EXPECT_EQ(mp.components, 2);
    EXPECT_EQ(dcDimension(frameworkOf(mp.polytope)), 2);
    EXPECT_TRUE(isDeformedPermutahedron(mp.polytope).ok);
}

TEST(Hyperorder, ApexAdjacentToAll) {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 2}, {5, 2}, {5, 3}}) {
        auto p = hyperorderPolytope(n, k);
        RatVector apex(n);
        for (int t = n - k; t < n; ++t) apex[t] = 1;
        int a = report::vertexAt(p, apex);
        int deg = 0;
        for (const auto& e : edges(p)) deg += e[0] == a || e[1] == a;
        EXPECT_EQ(deg, p.numVertices() - 1) << n << "," << k;
        EXPECT_TRUE(isIndecomposable(frameworkOf(p))) << n << "," << k;
    }
    EXPECT_EQ(hyperorderPolytope(3, 3).numVertices(), 1);
    EXPECT_THROW(hyperorderPolytope(3, 4), InputError);
}

TEST(Product, Basics) {
    auto seg = report::segment();
    auto sq = productPolytope(seg, seg);
    EXPECT_EQ(sq.numVertices(), 4);
    EXPECT_EQ(dcDimension(frameworkOf(sq)), 2);
    auto tri = report::triangle();
    EXPECT_EQ(dcDimension(frameworkOf(productPolytope(tri, seg))), 2);
    auto tt = productPolytope(tri, tri);
    EXPECT_EQ(tt.numVertices(), 9);
    EXPECT_EQ(affineDim(tt.verts), 4);
    EXPECT_EQ(dcDimension(frameworkOf(tt)), 2);
    EXPECT_EQ(sortedEdges(*tt.edgeHint), sortedEdges(edgesLP(tt)));
}

TEST(Truncation, CubeVertex) {
    auto cube = corpus()["cube"].polytope;
    auto t = deepTruncate(cube, {0});
    EXPECT_EQ(fVectorLP(t.polytope), (std::vector<long>{7, 12, 7}));
    EXPECT_EQ(t.omegaComponents, 1);
    EXPECT_TRUE(isIndecomposable(frameworkOf(t.polytope)));
    EXPECT_THROW(deepTruncate(cube, {0, 1}), InputError);  // adjacent
}

TEST(Truncation, UnequalEdgesRefused) {
    PolytopeV z = zonotope({ratVec({2, 0, 0}), ratVec({0, 1, 0}), ratVec({0, 0, 1}), ratVec({1, 1, 1})});
    std::string why;
    EXPECT_FALSE(admitsDeepTruncation(z, edges(z), report::vertexAt(z, ratVec({2, 0, 0})), &why));
    EXPECT_EQ(why.rfind("no deep truncation", 0), 0u);
    EXPECT_THROW(deepTruncate(z, {report::vertexAt(z, ratVec({2, 0, 0}))}), InputError);
}

TEST(Truncation, OmegaSequence) {
    auto g = report::fourGenerators();
    auto z = zonotope(g);
    EXPECT_EQ(z.numVertices(), 14);
    int v0 = report::vertexAt(z, ratVec({0, 0, 0})), vTop = report::vertexAt(z, ratVec({2, 2, 2})),
        vMix = report::vertexAt(z, ratVec({1, 1, 2}));
    auto a = deepTruncate(z, {v0});
    EXPECT_EQ(a.omegaComponents, 2);
    EXPECT_EQ(dcDimension(frameworkOf(a.polytope)), 2);
    auto b = deepTruncate(z, {v0, vTop});
    EXPECT_EQ(b.omegaComponents, 2);
    auto c = deepTruncate(z, {v0, vMix});
    EXPECT_EQ(c.omegaComponents, 1);
    EXPECT_TRUE(isIndecomposable(frameworkOf(c.polytope)));
    EXPECT_EQ(c.boundHypothesis, c.maxXv <= affineDim(z.verts) - 2);
}

TEST(Stacking, Cube) {
    auto cube = corpus()["cube"].polytope;
    auto top = stackVertex(cube, {{"v4", "v5", "v6", "v7"}});
    EXPECT_EQ(top.polytope.numVertices(), 9);
    EXPECT_EQ(dcDimension(frameworkOf(top.polytope)), 2);
    auto two = stackVertex(cube, {{"v1", "v3", "v5", "v7"}, {"v2", "v3", "v6", "v7"}});
    EXPECT_TRUE(isIndecomposable(frameworkOf(two.polytope)));
    EXPECT_EQ(two.points.size(), 2u);
    // reproducible bit for bit
    auto again = stackVertex(cube, {{"v1", "v3", "v5", "v7"}, {"v2", "v3", "v6", "v7"}});
    EXPECT_EQ(again.points, two.points);
    EXPECT_EQ(again.eps, two.eps);
    EXPECT_THROW(stackVertex(cube, {{"v0", "v7"}}), InputError);
}

TEST(Stacking, GammaSequence) {
    auto g = report::fourGenerators();
    auto z = zonotope(g);
    std::vector<std::vector<std::string>> fs;
    int expected = 4;
    for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}}) {
        fs.push_back(report::facetSpannedBy(z, g[i], g[j]));
        auto r = stackVertex(z, fs, g);
        --expected;
        EXPECT_EQ(r.gammaComponents, expected);
        EXPECT_EQ(dcDimension(frameworkOf(r.polytope)), expected);
    }
}

TEST(Smilansky, Counterexamples) {
    auto a = smilanskyCheck(1, 4);
    EXPECT_EQ(a.V, 15);
    EXPECT_EQ(a.F, 9);
    EXPECT_TRUE(a.counterexample());
    auto b = smilanskyCheck(2, 3);
    EXPECT_EQ(b.V, 45);
    EXPECT_EQ(b.F, 23);
    EXPECT_TRUE(b.counterexample());
    EXPECT_THROW(smilanskyCheck(2, 2), InputError);  // a 3-polytope
}

TEST(Wedge, TowerOfStrawberry) {
    auto s = bipartiteTruncation(1, 3, TruncKind::P);
    auto levels = wedgeTower(s, 2);
    ASSERT_EQ(levels.size(), 3u);
    for (int k = 1; k <= 2; ++k) {
        std::set<WedgeFingerprint> seen;
        for (const auto& w : levels[k]) {
            EXPECT_EQ(affineDim(w.verts), affineDim(s.verts) + k);
            EXPECT_TRUE(seen.insert(wedgeFingerprint(w)).second);
            EXPECT_TRUE(isDeformedPermutahedron(w).ok);
            EXPECT_TRUE(isIndecomposable(frameworkOf(w)));
        }
    }
    EXPECT_GT(levels[2].size(), levels[1].size());
}

TEST(Wedge, FingerprintIgnoresTranslation) {
    auto s = bipartiteTruncation(1, 3, TruncKind::P);
    PolytopeV t = s;
    for (auto& v : t.verts) v = add(v, RatVector(v.size(), rat(3, 2)));
    EXPECT_EQ(wedgeFingerprint(s), wedgeFingerprint(t));
    EXPECT_NE(wedgeFingerprint(s), wedgeFingerprint(permutahedralWedge(s, 1, WedgeSide::Min)));
}
