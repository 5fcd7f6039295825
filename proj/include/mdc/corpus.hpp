#pragma once

#include "mdc/constructions.hpp"
#include "mdc/polytope.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mdc {

struct Fixture {
    PolytopeV polytope;
    std::optional<int> dc;
    bool indecomposable = false;
    std::optional<int> blocks;          // number of dependency blocks, when stated
    std::optional<int> dependentPairs;  // number of dependency blocks of size 2, when stated
    std::optional<int> dimBound;        // expected dimUpperBound
    bool provable = false;              // saturate + conclude should succeed
};

inline std::vector<RatVector> pts(std::initializer_list<std::initializer_list<long>> xs) {
    std::vector<RatVector> out;
    for (auto x : xs) out.push_back(ratVec(x));
    return out;
}

inline PolytopeV labeled(std::vector<RatVector> verts, const std::string& prefix = "v") {
    PolytopeV p = makePolytope(std::move(verts), true);
    for (int i = 0; i < p.numVertices(); ++i) p.ids[i] = prefix + std::to_string(i);
    return p;
}

inline PolytopeV kallayCoplanar() {
    auto v = pts({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}});
    v.push_back({rat(1, 2), rat(1, 2), rat(3, 2)});
    v.push_back({rat(1, 2), rat(1, 2), rat(-1, 2)});
    PolytopeV p = makePolytope(v, true);
    p.ids = {"A", "b1", "X", "b3", "B", "t1", "Y", "t3", "top", "bottom"};
    return p;
}

// Top edge sheared from x = 1 to x = 3/4 so that AB and XY become skew.
inline PolytopeV kallaySkew() {
    std::vector<RatVector> v = pts({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    v.push_back({rat(3, 4), 0, 1});
    v.push_back({rat(3, 4), 1, 1});
    v.push_back(ratVec({0, 1, 1}));
    v.push_back({rat(3, 8), rat(1, 2), rat(3, 2)});
    v.push_back({rat(1, 2), rat(1, 2), rat(-1, 2)});
    PolytopeV p = makePolytope(v, true);
    p.ids = {"A", "b1", "X", "b3", "B", "t1", "Y", "t3", "top", "bottom"};
    return p;
}

inline PolytopeV chiseledSquarePyramid() {
    std::vector<RatVector> v = pts({{0, 0, 0}, {4, 0, 0}, {4, 4, 0}, {0, 4, 0}});
    v.push_back({rat(1, 2), rat(1, 2), rat(1, 2)});
    v.push_back(ratVec({3, 1, 1}));
    v.push_back({rat(7, 2), rat(7, 2), rat(1, 2)});
    v.push_back(ratVec({1, 3, 1}));
    return labeled(v);
}

inline std::map<std::string, Fixture> corpus() {
    std::map<std::string, Fixture> c;
    auto put = [&](const std::string& name, PolytopeV p, std::optional<int> dc, bool indec, bool provable) {
        Fixture f;
        f.polytope = std::move(p);
        f.dc = dc;
        f.indecomposable = indec;
        f.provable = provable;
        c[name] = f;
    };
    put("triangle", labeled(pts({{0, 0}, {1, 0}, {0, 1}})), 1, true, true);
    put("parallelogram", labeled(pts({{0, 0}, {2, 0}, {3, 1}, {1, 1}})), 2, false, false);
    // any quadrilateral has 4 edges and 2 independent cycle rows, so dc = 2
    put("trapezoid", labeled(pts({{0, 0}, {3, 0}, {2, 1}, {1, 1}})), 2, false, false);
    c["trapezoid"].blocks = 3;
    c["trapezoid"].dependentPairs = 1;
    put("scalene_quadrilateral", labeled(pts({{0, 0}, {3, 0}, {2, 2}, {0, 1}})), 2, false, false);
    c["scalene_quadrilateral"].blocks = 4;
    c["parallelogram"].blocks = 2;
    put("cube", labeled(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})),
        3, false, false);
    put("prism", labeled(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}})), 2, false, false);
    put("hemicube", minkowskiSum(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), pts({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 2,
        false, false);
    put("hexagon", graphicalZonotope(completeGraph(3)), 4, false, false);
    {
        PolytopeV h = graphicalZonotope(completeGraph(3));
        h.edgeHint.reset();
        h.ids.push_back("apex");
        h.verts.push_back(ratVec({2, 2, 2}));
        put("hexagonal_pyramid", h, 1, true, true);
    }
    put("strawberry", bipartiteTruncation(3, 1, TruncKind::P), 1, true, true);
    put("octahedron", bipartiteTruncation(3, 1, TruncKind::Q), 1, true, true);
    put("persimmon", bipartiteTruncation(2, 2, TruncKind::P), 1, true, true);
    put("cuboctahedron", bipartiteTruncation(2, 2, TruncKind::Q), 2, false, false);
    put("kallay_coplanar", kallayCoplanar(), 2, false, false);
    put("kallay_skew", kallaySkew(), 1, true, true);
    put("triangular_cupola",
        minkowskiSum(pts({{0, 0, 0}, {3, 0, 0}, {0, 3, 0}}), pts({{0, 0, 0}, {-3, 0, 0}, {0, -3, 0}, {-1, -1, 2}})), 2,
        false, false);
    c["triangular_cupola"].dimBound = 2;
    {
        std::vector<RatVector> v = pts({{0, 0, 0}, {2, 0, 0}, {2, 2, 0}, {0, 2, 0}, {0, 0, 1}, {2, 0, 2}, {2, 2, 1}, {0, 2, 2}});
        put("chiseled_cube", labeled(v), 2, false, false);
        c["chiseled_cube"].dimBound = 2;
    }
    put("chiseled_square_pyramid", chiseledSquarePyramid(), 2, false, false);
    c["chiseled_square_pyramid"].dimBound = 2;
    put("triangle_sum", minkowskiSum(pts({{0, 0, 0}, {2, 0, 0}, {1, 2, 0}}), pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 2}})), 2,
        false, false);
    c["triangle_sum"].dimBound = 2;
    put("diminished_trapezohedron",
        minkowskiSum(pts({{0, 0, 0}, {2, 0, 0}, {1, 0, 1}}), pts({{0, 0, 0}, {0, 2, 0}, {0, 1, 1}})), 2, false, false);
    put("gyrobifastigium",
        minkowskiSum(pts({{0, 0, 0}, {2, 0, 0}, {1, 0, 1}}), pts({{0, 0, 0}, {0, 2, 0}, {0, 1, -1}})), 2, false, false);
    return c;
}

}  // namespace mdc
