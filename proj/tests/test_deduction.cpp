#include "mdc/corpus.hpp"
#include "mdc/deduction.hpp"
#include "mdc/report.hpp"

#include <gtest/gtest.h>

using namespace mdc;

namespace {

Framework fwFrom(int dim, std::vector<std::string> ids, std::vector<RatVector> pts,
                 std::vector<std::pair<std::string, std::string>> es) {
    return build(FrameworkSpec{dim, std::move(ids), std::move(pts), std::move(es)});
}

}  // namespace

TEST(Deduction, CorpusSoundAndReplayable) {
    for (auto& [name, f] : corpus()) {
        auto c = report::certify(f.polytope);
        EXPECT_TRUE(soundnessViolations(c.state).empty()) << name;
        EXPECT_EQ(c.concluded, f.provable) << name;
        EXPECT_TRUE(verifyCertificate(frameworkOf(f.polytope), c.state.log).ok) << name;
        auto b = dimUpperBound(c.state, report::facetFlats(f.polytope));
        ASSERT_TRUE(b.bound) << name;
        EXPECT_GE(*b.bound, dcDimension(frameworkOf(f.polytope))) << name;
        if (f.dimBound) EXPECT_EQ(*b.bound, *f.dimBound) << name;
    }
}

TEST(Deduction, StrawberryOneClass) {
    auto p = bipartiteTruncation(3, 1, TruncKind::P);
    auto st = saturate(frameworkOf(p));
    EXPECT_EQ(st.numClasses(), 1);
}

TEST(Deduction, KallayVerdicts) {
    auto c = report::certify(corpus()["kallay_coplanar"].polytope);
    EXPECT_FALSE(c.concluded);
    EXPECT_GE(c.state.numClasses(), 2);
    auto s = report::certify(corpus()["kallay_skew"].polytope);
    EXPECT_TRUE(s.concluded);
}

TEST(Deduction, HexagonHasNoDependencies) {
    auto p = report::hexagon();
    auto c = report::certify(p);
    EXPECT_FALSE(c.concluded);
    EXPECT_EQ(c.state.numClasses(), 6);
    auto b = dimUpperBound(c.state);
    ASSERT_TRUE(b.bound);
    EXPECT_GE(*b.bound, 4);
}

TEST(Deduction, ChiseledPyramidBound) {
    auto p = corpus()["chiseled_square_pyramid"].polytope;
    auto c = report::certify(p);
    EXPECT_FALSE(c.concluded);
    auto b = dimUpperBound(c.state, report::facetFlats(p));
    ASSERT_TRUE(b.bound);
    EXPECT_EQ(*b.bound, 2);
    EXPECT_TRUE(verifyCertificate(frameworkOf(p), c.state.log).ok);
}

TEST(Deduction, PyramidWithoutFlats) {
    auto p = corpus()["hexagonal_pyramid"].polytope;
    auto st = saturate(frameworkOf(p));
    EXPECT_TRUE(concludeIndecomposable(st, {}).indecomposable);
}

TEST(Deduction, Deterministic) {
    auto fw = frameworkOf(bipartiteTruncation(2, 2, TruncKind::P));
    EXPECT_EQ(saturate(fw).log, saturate(fw).log);
}

TEST(Deduction, CollinearTriangleRejected) {
    auto fw = fwFrom(2, {"a", "b", "c"}, {ratVec({0, 0}), ratVec({1, 0}), ratVec({2, 0})},
                     {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    Step s;
    s.kind = StepKind::Triangle;
    s.vertices = {"a", "b", "c"};
    auto v = verifyCertificate(fw, {s});
    EXPECT_FALSE(v.ok);
    EXPECT_EQ(v.reason, "not affinely independent");
}

TEST(Deduction, FlatMissingSRejected) {
    auto p = corpus()["triangle"].polytope;
    auto fw = frameworkOf(p);
    Step t;
    t.kind = StepKind::Triangle;
    t.vertices = {"v0", "v1", "v2"};
    Step s;
    s.kind = StepKind::CoveringConclusion;
    s.sVertices = {"v0", "v1"};
    s.groups = {{{"v0", "v1"}}};
    s.flats = {{"v2"}, {"v0", "v1"}};
    auto v = verifyCertificate(fw, {t, s});
    EXPECT_FALSE(v.ok);
    EXPECT_EQ(v.index, 1u);
    EXPECT_EQ(v.reason, "flat misses S");
}

TEST(Deduction, DisconnectedFlatIsInputError) {
    auto p = corpus()["cube"].polytope;
    auto st = saturate(frameworkOf(p));
    EXPECT_THROW(concludeIndecomposable(st, {{0, 7}}), InputError);
}

TEST(Deduction, DegenerateContraction) {
    auto fw = report::degenerateFixture();
    auto st = saturate(fw);
    bool seen = false;
    for (const auto& s : st.log) seen = seen || s.kind == StepKind::DegenerateContraction;
    EXPECT_TRUE(seen);
    EXPECT_TRUE(soundnessViolations(st).empty());
    EXPECT_TRUE(concludeIndecomposable(st, {}).indecomposable);
}

TEST(Deduction, MutationsRejected) {
    std::map<StepKind, std::pair<Framework, std::vector<Step>>> sample;
    auto add = [&](const Framework& fw, const std::vector<Step>& log) {
        for (const auto& s : log)
            if (!sample.count(s.kind)) sample[s.kind] = {fw, log};
    };
    for (auto name : {"strawberry", "kallay_skew", "hexagonal_pyramid", "chiseled_cube", "chiseled_square_pyramid"}) {
        auto p = corpus()[name].polytope;
        auto c = report::certify(p);
        if (!c.concluded) dimUpperBound(c.state, report::facetFlats(p));
        add(frameworkOf(p), c.state.log);
    }
    {
        auto fw = report::degenerateFixture();
        auto st = saturate(fw);
        concludeIndecomposable(st, {});
        add(fw, st.log);
    }
    for (auto k : {StepKind::Triangle, StepKind::RigidCycle, StepKind::ProjectionLift, StepKind::DegenerateContraction,
                   StepKind::ImplicitFromPath, StepKind::CoveringConclusion, StepKind::DimBound})
        EXPECT_TRUE(sample.count(k)) << kindName(k);
    for (auto& [kind, pr] : sample) {
        auto& [fw, log] = pr;
        ASSERT_TRUE(verifyCertificate(fw, log).ok) << kindName(kind);
        for (std::size_t i = 0; i < log.size(); ++i) {
            if (log[i].kind != kind) continue;
            auto bad = log;
            bad[i] = report::mutate(log[i], fw);
            auto v = verifyCertificate(fw, bad);
            EXPECT_FALSE(v.ok) << kindName(kind) << " step " << i;
        }
    }
}

TEST(Deduction, RuleTogglesStaySound) {
    RuleConfig only;
    only.rigidCycles = only.projections = only.paths = false;
    for (auto name : {"strawberry", "kallay_skew", "cuboctahedron"}) {
        auto fw = frameworkOf(corpus()[name].polytope);
        auto st = saturate(fw, only);
        EXPECT_TRUE(soundnessViolations(st).empty());
        for (const auto& s : st.log) {
            EXPECT_NE(s.kind, StepKind::ProjectionLift);
            EXPECT_NE(s.kind, StepKind::ImplicitFromPath);
        }
    }
}
