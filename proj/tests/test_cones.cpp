#include "mdc/cones.hpp"
#include "mdc/corpus.hpp"
#include "mdc/report.hpp"

#include <gtest/gtest.h>

using namespace mdc;

TEST(Cones, HexagonBipyramid) {
    Cone c = enumerateRays(frameworkOf(report::hexagon()));
    EXPECT_EQ(c.rays.size(), 5u);
    EXPECT_EQ(c.spanBasis.size(), 4u);
    std::multiset<std::size_t> sizes;
    for (std::size_t r = 0; r < c.rays.size(); ++r) sizes.insert(c.support(r).size());
    EXPECT_EQ(sizes, (std::multiset<std::size_t>{2, 2, 2, 3, 3}));
}

TEST(Cones, TwoRayExamples) {
    for (auto name : {"prism", "triangular_cupola", "hemicube"}) {
        Cone c = enumerateRays(frameworkOf(corpus()[name].polytope));
        EXPECT_EQ(c.rays.size(), 2u) << name;
    }
}

TEST(Cones, RaysSatisfyCycleEquations) {
    for (auto name : {"hexagon", "cube", "chiseled_cube", "kallay_coplanar"}) {
        Framework fw = frameworkOf(corpus()[name].polytope);
        auto ds = deformationSpace(fw);
        for (const auto& r : enumerateRays(ds).rays) {
            EXPECT_TRUE(inDeformationSpan(fw, ds, r)) << name;
            for (const auto& x : r) EXPECT_GE(sgn(x), 0);
        }
    }
}

TEST(Cones, Guard) {
    Framework fw = frameworkOf(report::hexagon());
    EXPECT_THROW(enumerateRays(fw, RayGuard{60, 3}), ResourceError);
    EXPECT_THROW(enumerateRays(fw, RayGuard{5, 12}), ResourceError);
}

TEST(Cones, CharacteristicRay) {
    Framework cube = frameworkOf(corpus()["cube"].polytope);
    auto part = dependencyPartition(cube);
    ASSERT_EQ(part.blocks.size(), 3u);
    auto r = characteristicRay(cube, part.blocks[0]);
    ASSERT_TRUE(r.ray);
    EXPECT_EQ(sgn((*r.ray)[part.blocks[0][0]]), 1);
    std::vector<int> two = part.blocks[0];
    two.insert(two.end(), part.blocks[1].begin(), part.blocks[1].end());
    EXPECT_EQ(characteristicRay(cube, two).reason, "not a full dependency block");
    EXPECT_EQ(characteristicRay(cube, {part.blocks[0][0]}).reason, "not autonomous");
    EXPECT_EQ(characteristicRay(cube, {}).reason, "empty edge set");
}

TEST(Cones, Simplicial) {
    auto cube = isSimplicialByPartition(frameworkOf(corpus()["cube"].polytope));
    EXPECT_TRUE(cube.simplicial);
    EXPECT_EQ(cube.dim, 3);
    EXPECT_FALSE(isSimplicialByPartition(frameworkOf(report::hexagon())).simplicial);
}

TEST(Cones, ProductFactorization) {
    auto r = productFactorization(report::triangle(), report::segment());
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.dimSum, 2);
    auto h = productFactorization(report::hexagon(), report::square());
    EXPECT_TRUE(h.ok());
    EXPECT_EQ(h.dimSum, 6);
}

TEST(Cones, MinkowskiFactorization) {
    auto tri = makePolytope(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
    auto seg = makePolytope(pts({{0, 0, 0}, {0, 0, 1}}));
    auto r = minkowskiFactorization(tri, seg);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.dimSum, 2);
    auto flat = makePolytope(pts({{0, 0, 0}, {1, 1, 0}}));
    auto bad = minkowskiFactorization(tri, flat);
    EXPECT_TRUE(bad.refused);
    EXPECT_EQ(bad.reason.rfind("not in parallelogramic position: ", 0), 0u);
    auto par = minkowskiFactorization(seg, seg);
    EXPECT_TRUE(par.refused);
    EXPECT_NE(par.reason.find("is parallel to edge"), std::string::npos);
}
