#include "mdc/corpus.hpp"
#include "mdc/io.hpp"
#include "mdc/report.hpp"

#include <gtest/gtest.h>

using namespace mdc;

TEST(Io, RationalsAcceptStringsAndIntegers) {
    auto v = ratVectorFromJson(json::parse(R"(["1/2", 3, "-4"])"));
    EXPECT_EQ(v, (RatVector{rat(1, 2), rat(3), rat(-4)}));
    EXPECT_THROW(ratVectorFromJson(json::parse("[1.5]")), InputError);
    EXPECT_THROW(ratVectorFromJson(json::parse("{}")), InputError);
}

TEST(Io, FrameworkRoundTrip) {
    Framework fw = frameworkOf(corpus()["kallay_skew"].polytope);
    Framework back = frameworkFromJson(json::parse(toJson(fw).dump()));
    EXPECT_EQ(back.ids, fw.ids);
    EXPECT_EQ(back.pts, fw.pts);
    EXPECT_EQ(back.edges, fw.edges);
}

TEST(Io, PolytopeRoundTrip) {
    auto p = corpus()["triangular_cupola"].polytope;
    auto q = polytopeFromJson(json::parse(toJson(p).dump()));
    EXPECT_EQ(q.ids, p.ids);
    EXPECT_EQ(q.verts, p.verts);
    EXPECT_FALSE(hasEdges(toJson(p)));
    EXPECT_TRUE(hasEdges(toJson(frameworkOf(p))));
}

TEST(Io, MalformedInput) {
    EXPECT_THROW(frameworkFromJson(json::parse("[]")), InputError);
    EXPECT_THROW(frameworkFromJson(json::parse(R"({"vertices": []})")), InputError);
    EXPECT_THROW(frameworkFromJson(json::parse(R"({"dim": 2, "vertices": [{"id": "a"}]})")), InputError);
    EXPECT_THROW(frameworkFromJson(json::parse(
                     R"({"dim": 1, "vertices": [{"id": "a", "coords": [0]}, {"id": "b", "coords": [1]}],
                         "edges": [["a"]]})")),
                 InputError);
    EXPECT_THROW(polytopeFromJson(json::parse(
                     R"({"dim": 1, "vertices": [{"id": "a", "coords": [0]}, {"id": "b", "coords": [2]},
                                                {"id": "c", "coords": [1]}]})")),
                 InputError);
    EXPECT_THROW(readJsonFile("/nonexistent/file.json"), InputError);
}

TEST(Io, CertificateRoundTrip) {
    for (auto name : {"strawberry", "kallay_skew", "chiseled_square_pyramid", "persimmon"}) {
        auto p = corpus()[name].polytope;
        auto c = report::certify(p);
        if (!c.concluded) dimUpperBound(c.state, report::facetFlats(p));
        auto back = certificateFromJson(json::parse(certificateJson(c.state.log).dump()));
        EXPECT_EQ(back, c.state.log) << name;
        EXPECT_TRUE(verifyCertificate(frameworkOf(p), back).ok) << name;
    }
}

TEST(Io, NestedStepRoundTrip) {
    Step inner;
    inner.kind = StepKind::Triangle;
    inner.vertices = {"a", "b", "c"};
    Step s;
    s.kind = StepKind::ProjectionLift;
    s.direction = {rat(1, 3), rat(0), rat(-2)};
    s.nested = {inner, inner};
    s.groups = {{{"a", "b"}, {"c", "d"}}};
    auto j = toJson(s);
    EXPECT_FALSE(j.contains("flats"));
    EXPECT_EQ(stepFromJson(j), s);
}

TEST(Io, MalformedCertificate) {
    EXPECT_THROW(certificateFromJson(json::parse(R"({"steps": []})")), InputError);
    EXPECT_THROW(certificateFromJson(json::parse(R"({"format": "mdc-certificate"})")), InputError);
    EXPECT_THROW(certificateFromJson(json::parse(R"({"format": "mdc-certificate", "steps": [{}]})")), InputError);
    EXPECT_THROW(certificateFromJson(json::parse(
                     R"({"format": "mdc-certificate", "steps": [{"kind": "Triangle", "vertices": 3}]})")),
                 InputError);
    EXPECT_THROW(stepFromJson(json::parse(R"({"kind": "NoSuchRule"})")), InputError);
}
