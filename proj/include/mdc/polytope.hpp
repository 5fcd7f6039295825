#pragma once

#include "mdc/dd.hpp"
#include "mdc/framework.hpp"
#include "mdc/linprog.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mdc {

struct PolytopeV {
    int dim = 0;
    std::vector<std::string> ids;
    std::vector<RatVector> verts;
    std::optional<std::vector<Edge>> edgeHint;  // combinatorial edge list from a generator

    int numVertices() const { return static_cast<int>(verts.size()); }
};

struct Facet {
    RatVector normal;  // normal . x <= rhs, primitive integer
    Rational rhs;
    std::vector<int> verts;
};

struct AffineHull {
    RatVector base;
    Echelon directions;  // RREF of the difference vectors
    int dim() const { return static_cast<int>(directions.pivots.size()); }
    RatVector coords(const RatVector& x) const {
        RatVector out;
        for (auto c : directions.pivots) out.push_back(x[c]);
        return out;
    }
};

inline AffineHull affineHull(const std::vector<RatVector>& pts, std::size_t d) {
    AffineHull h;
    if (pts.empty()) return h;
    h.base = pts[0];
    RatMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    h.directions = rref(diffs, d);
    return h;
}

inline int affineDim(const std::vector<RatVector>& pts) {
    if (pts.empty()) return -1;
    return affineHull(pts, pts[0].size()).dim();
}

inline std::vector<RatVector> pick(const std::vector<RatVector>& pts, const std::vector<int>& idx) {
    std::vector<RatVector> out;
    for (int i : idx) out.push_back(pts[i]);
    return out;
}

// Is x a convex combination of pts (indices in `use`)?
inline bool inConvexHull(const std::vector<RatVector>& pts, const std::vector<int>& use, const RatVector& x) {
    if (use.empty()) return false;
    LinearProgram lp(use.size());
    lp.nonneg.assign(use.size(), true);
    for (std::size_t k = 0; k < x.size(); ++k) {
        RatVector row(use.size());
        for (std::size_t j = 0; j < use.size(); ++j) row[j] = pts[use[j]][k];
        lp.addEq(row, x[k]);
    }
    lp.addEq(RatVector(use.size(), 1), 1);
    return feasible(lp);
}

// Indices of vertices lying in the convex hull of the others (including duplicates).
inline std::vector<int> redundantVertices(const PolytopeV& p) {
    std::vector<int> bad;
    for (int v = 0; v < p.numVertices(); ++v) {
        std::vector<int> others;
        for (int w = 0; w < p.numVertices(); ++w)
            if (w != v) others.push_back(w);
        if (inConvexHull(p.verts, others, p.verts[v])) bad.push_back(v);
    }
    return bad;
}

inline PolytopeV makePolytope(int dim, std::vector<std::string> ids, std::vector<RatVector> verts, bool check = true) {
    PolytopeV p;
    p.dim = dim;
    p.ids = std::move(ids);
    p.verts = std::move(verts);
    if (p.ids.size() != p.verts.size()) throw InputError("label/vertex count mismatch");
    for (const auto& v : p.verts)
        if (static_cast<int>(v.size()) != dim) throw InputError("vertex has wrong dimension");
    if (check) {
        auto bad = redundantVertices(p);
        if (!bad.empty()) throw InputError("vertex '" + p.ids[bad[0]] + "' is not extreme");
    }
    return p;
}

inline PolytopeV makePolytope(std::vector<RatVector> verts, bool check = true) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < verts.size(); ++i) ids.push_back("v" + std::to_string(i));
    int d = verts.empty() ? 0 : static_cast<int>(verts[0].size());
    return makePolytope(d, std::move(ids), std::move(verts), check);
}

// {u,v} is an edge iff the midpoint is not a convex combination putting weight
// on some other vertex (maximize that weight; edge iff the optimum is 0).
inline bool isEdgeLP(const std::vector<RatVector>& hp, int u, int v) {
    const std::size_t n = hp.size(), h = hp[0].size();
    LinearProgram lp(n);
    lp.nonneg.assign(n, true);
    for (std::size_t k = 0; k < h; ++k) {
        RatVector row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = hp[j][k];
        lp.addEq(row, (hp[u][k] + hp[v][k]) / 2);
    }
    lp.addEq(RatVector(n, 1), 1);
    lp.objective.assign(n, 1);
    lp.objective[u] = 0;
    lp.objective[v] = 0;
    lp.sense = Sense::Maximize;
    auto r = solve(lp);
    return r.status == LpStatus::Optimal && sgn(r.value) == 0;
}

// Supporting-functional system: c.(u - v) = 0 and c.(w - u) < 0 for other w,
// the strict rows encoded as <= -1 by scale invariance.
inline LinearProgram edgeSupportSystem(const std::vector<RatVector>& hp, int u, int v) {
    const std::size_t h = hp[0].size();
    LinearProgram lp(std::max<std::size_t>(h, 1));
    if (h == 0) return lp;
    lp.addEq(sub(hp[u], hp[v]), 0);
    for (int w = 0; w < static_cast<int>(hp.size()); ++w)
        if (w != u && w != v) lp.addStrictLt(sub(hp[w], hp[u]), 0);
    return lp;
}

inline std::vector<RatVector> hullCoordinates(const PolytopeV& p) {
    AffineHull h = affineHull(p.verts, p.dim);
    std::vector<RatVector> out;
    for (const auto& v : p.verts) out.push_back(h.coords(v));
    return out;
}

inline std::vector<Edge> edgesLP(const PolytopeV& p) {
    std::vector<Edge> out;
    if (p.numVertices() < 2) return out;
    auto hp = hullCoordinates(p);
    if (hp[0].empty()) return out;
    for (int u = 0; u < p.numVertices(); ++u)
        for (int v = u + 1; v < p.numVertices(); ++v)
            if (isEdgeLP(hp, u, v)) out.push_back({u, v});
    return out;
}

inline std::vector<Edge> edges(const PolytopeV& p) {
    if (p.edgeHint) return *p.edgeHint;
    return edgesLP(p);
}

inline std::vector<Edge> sortedEdges(std::vector<Edge> es) {
    for (auto& e : es)
        if (e[0] > e[1]) std::swap(e[0], e[1]);
    std::sort(es.begin(), es.end());
    return es;
}

// Facets are the extreme rays of {(a, b) : b - a.p >= 0 for all vertices p}, taken
// in hull coordinates and lifted back with zeros off the pivot coordinates.
inline std::vector<Facet> facets(const PolytopeV& p) {
    std::vector<Facet> out;
    if (p.numVertices() < 2) return out;
    AffineHull hull = affineHull(p.verts, p.dim);
    const int h = hull.dim();
    if (h == 0) return out;
    RatMatrix A;
    std::vector<RatVector> hp;
    for (const auto& v : p.verts) {
        RatVector c = hull.coords(v);
        RatVector row;
        for (const auto& x : c) row.push_back(-x);
        row.push_back(1);
        A.push_back(std::move(row));
        hp.push_back(std::move(c));
    }
    for (const auto& ray : extremeRays(A, h + 1)) {
        Facet f;
        f.normal.assign(p.dim, 0);
        for (int k = 0; k < h; ++k) f.normal[hull.directions.pivots[k]] = ray[k];
        f.rhs = ray[h];
        for (int i = 0; i < p.numVertices(); ++i)
            if (dot(f.normal, p.verts[i]) == f.rhs) f.verts.push_back(i);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) { return a.verts < b.verts; });
    return out;
}

inline Framework frameworkOf(const PolytopeV& p, const std::vector<Edge>& es) {
    Framework fw;
    fw.dim = p.dim;
    fw.ids = p.ids;
    fw.pts = p.verts;
    fw.edges = es;
    return fw;
}

inline Framework frameworkOf(const PolytopeV& p) {
    return frameworkOf(p, edges(p));
}

// All nonempty faces as vertex sets (closure of the facets under intersection), with the polytope itself.
inline std::vector<std::vector<int>> faceLattice(const PolytopeV& p, const std::vector<Facet>& fs) {
    std::set<std::vector<int>> faces;
    std::vector<int> all(p.numVertices());
    for (int i = 0; i < p.numVertices(); ++i) all[i] = i;
    faces.insert(all);
    std::vector<std::vector<int>> frontier;
    for (const auto& f : fs)
        if (faces.insert(f.verts).second) frontier.push_back(f.verts);
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& g : frontier) {
            for (const auto& f : fs) {
                std::vector<int> x;
                std::set_intersection(g.begin(), g.end(), f.verts.begin(), f.verts.end(), std::back_inserter(x));
                if (!x.empty() && faces.insert(x).second) next.push_back(x);
            }
        }
        frontier = std::move(next);
    }
    return {faces.begin(), faces.end()};
}

// f_0 .. f_{d-1} of a polytope from its facet incidences.
inline std::vector<long> fVectorLP(const PolytopeV& p) {
    auto fs = facets(p);
    int h = affineDim(p.verts);
    std::vector<long> f(std::max(h, 0), 0);
    if (h <= 0) return f;
    for (const auto& face : faceLattice(p, fs)) {
        int k = affineDim(pick(p.verts, face));
        if (k < h) ++f[k];
    }
    return f;
}

inline long eulerSum(const std::vector<long>& f) {
    long s = 0;
    for (std::size_t k = 0; k < f.size(); ++k) s += (k % 2 == 0 ? 1 : -1) * f[k];
    return s;
}

// Alternating sum must equal 1 - (-1)^d.
inline bool eulerHolds(const std::vector<long>& f) {
    long d = static_cast<long>(f.size());
    return eulerSum(f) == 1 - (d % 2 == 0 ? 1 : -1);
}

struct DirectionCheck {
    bool ok = true;
    std::optional<Edge> witness;
};

inline bool isRootDirection(const RatVector& d) {
    int pos = -1, neg = -1, nz = 0;
    for (int k = 0; k < static_cast<int>(d.size()); ++k) {
        if (sgn(d[k]) == 0) continue;
        ++nz;
        (sgn(d[k]) > 0 ? pos : neg) = k;
    }
    return nz == 2 && pos >= 0 && neg >= 0 && d[pos] == -d[neg];
}

inline DirectionCheck isDeformedPermutahedron(const PolytopeV& p, const std::vector<Edge>& es) {
    DirectionCheck r;
    for (const auto& e : es) {
        if (!isRootDirection(sub(p.verts[e[1]], p.verts[e[0]]))) {
            r.ok = false;
            r.witness = e;
            return r;
        }
    }
    return r;
}

inline DirectionCheck isDeformedPermutahedron(const PolytopeV& p) {
    return isDeformedPermutahedron(p, edges(p));
}

// Necessary condition only: false means some coordinate takes at least three
// values, so p cannot be normally equivalent to a matroid polytope. true is inconclusive.
inline bool matroidCoordinateTest(const PolytopeV& p) {
    for (int k = 0; k < p.dim; ++k) {
        std::set<Rational> vals;
        for (const auto& v : p.verts) vals.insert(v[k]);
        if (vals.size() >= 3) return false;
    }
    return true;
}

}  // namespace mdc
