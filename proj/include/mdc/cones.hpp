#pragma once

#include "mdc/constructions.hpp"
#include "mdc/dd.hpp"
#include "mdc/framework.hpp"
#include "mdc/polytope.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mdc {

struct RayGuard {
    int maxEdges = 60;
    int maxDim = 12;
};

struct Cone {
    std::vector<int> ambientEdges;
    std::vector<RatVector> spanBasis;
    std::vector<RatVector> rays;  // first nonzero coordinate 1, sorted

    std::vector<int> support(std::size_t r) const {
        std::vector<int> s;
        for (std::size_t e = 0; e < rays[r].size(); ++e)
            if (sgn(rays[r][e]) != 0) s.push_back(static_cast<int>(e));
        return s;
    }
};

// Rays of span(basis) ∩ R_+^E: DD in basis coordinates t with rows x_e(t) >= 0.
inline Cone enumerateRays(const DeformationSpace& ds, RayGuard guard = {}) {
    Cone c;
    c.spanBasis = ds.basis;
    const std::size_t E = ds.degenerate.size();
    for (std::size_t e = 0; e < E; ++e) c.ambientEdges.push_back(static_cast<int>(e));
    const std::size_t k = ds.basis.size();
    if (static_cast<int>(E) > guard.maxEdges)
        throw ResourceError("ray enumeration guard: " + std::to_string(E) + " edges exceeds " +
                            std::to_string(guard.maxEdges));
    if (static_cast<int>(k) > guard.maxDim)
        throw ResourceError("ray enumeration guard: dimension " + std::to_string(k) + " exceeds " +
                            std::to_string(guard.maxDim));
    if (k == 0) return c;
    RatMatrix A;
    for (std::size_t e = 0; e < E; ++e) {
        RatVector row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = ds.basis[i][e];
        A.push_back(std::move(row));
    }
    for (const auto& t : extremeRays(A, k)) {
        RatVector x(E);
        for (std::size_t i = 0; i < k; ++i)
            if (sgn(t[i]) != 0)
                for (std::size_t e = 0; e < E; ++e) x[e] += t[i] * ds.basis[i][e];
        c.rays.push_back(normalizeFirst(x));
    }
    std::sort(c.rays.begin(), c.rays.end());
    return c;
}

inline Cone enumerateRays(const Framework& fw, RayGuard guard = {}) {
    return enumerateRays(deformationSpace(fw), guard);
}

inline RatVector characteristicVector(const Framework& fw, const std::vector<int>& X) {
    RatVector l(fw.numEdges());
    for (int e : X) {
        if (e < 0 || e >= fw.numEdges()) throw InputError("edge index out of range");
        l[e] = 1;
    }
    return l;
}

inline bool isAutonomous(const Framework& fw, const DeformationSpace& ds, const std::vector<int>& X) {
    return inDeformationSpan(fw, ds, characteristicVector(fw, X));
}

inline bool isAutonomous(const Framework& fw, const std::vector<int>& X) {
    return isAutonomous(fw, deformationSpace(fw), X);
}

struct RayOrRefusal {
    std::optional<RatVector> ray;
    std::string reason;
};

inline RayOrRefusal characteristicRay(const Framework& fw, std::vector<int> C) {
    RayOrRefusal r;
    if (C.empty()) {
        r.reason = "empty edge set";
        return r;
    }
    std::sort(C.begin(), C.end());
    C.erase(std::unique(C.begin(), C.end()), C.end());
    DeformationSpace ds = deformationSpace(fw);
    if (!isAutonomous(fw, ds, C)) {
        r.reason = "not autonomous";
        return r;
    }
    auto part = dependencyPartition(fw, ds);
    int b = part.blockOf(C[0]);
    if (b < 0 || part.blocks[b] != C) {
        r.reason = "not a full dependency block";
        return r;
    }
    r.ray = characteristicVector(fw, C);
    return r;
}

struct SimplicialReport {
    bool simplicial = false;
    std::vector<RatVector> rays;
    int dim = 0;
};

inline SimplicialReport isSimplicialByPartition(const Framework& fw) {
    SimplicialReport r;
    DeformationSpace ds = deformationSpace(fw);
    auto part = dependencyPartition(fw, ds);
    for (const auto& b : part.blocks) {
        if (!isAutonomous(fw, ds, b)) {
            r.rays.clear();
            return r;
        }
        r.rays.push_back(characteristicVector(fw, b));
    }
    r.simplicial = true;
    r.dim = static_cast<int>(part.blocks.size());
    std::sort(r.rays.begin(), r.rays.end());
    return r;
}

// Partition of edge indices into blocks, canonical (blocks sorted, sorted inside).
inline std::vector<std::vector<int>> canonicalBlocks(std::vector<std::vector<int>> bs) {
    for (auto& b : bs) std::sort(b.begin(), b.end());
    std::sort(bs.begin(), bs.end());
    return bs;
}

struct FactorizationReport {
    bool refused = false;
    std::string reason;
    int dimA = 0, dimB = 0, dimSum = 0;
    bool partitionLifts = false;
    bool ok() const { return !refused && dimSum == dimA + dimB && partitionLifts; }
};

inline FactorizationReport productFactorization(const PolytopeV& a, const PolytopeV& b) {
    FactorizationReport r;
    Framework fa = frameworkOf(a), fb = frameworkOf(b);
    PolytopeV p = productPolytope(a, b);
    Framework fp = frameworkOf(p);
    r.dimA = dcDimension(fa);
    r.dimB = dcDimension(fb);
    r.dimSum = dcDimension(fp);
    // productPolytope lists (edge of a, vertex of b) first, then (vertex of a, edge of b)
    const int nb = b.numVertices(), na = a.numVertices();
    std::vector<std::vector<int>> expect;
    for (const auto& blk : dependencyPartition(fa).blocks) {
        std::vector<int> x;
        for (int e : blk)
            for (int j = 0; j < nb; ++j) x.push_back(e * nb + j);
        expect.push_back(x);
    }
    const int offset = fa.numEdges() * nb;
    for (const auto& blk : dependencyPartition(fb).blocks) {
        std::vector<int> x;
        for (int e : blk)
            for (int i = 0; i < na; ++i) x.push_back(offset + i * fb.numEdges() + e);
        expect.push_back(x);
    }
    // product edges are sorted inside productPolytope; map back through the same construction
    std::vector<Edge> raw;
    for (const auto& e : fa.edges)
        for (int j = 0; j < nb; ++j) raw.push_back({e[0] * nb + j, e[1] * nb + j});
    for (int i = 0; i < na; ++i)
        for (const auto& e : fb.edges) raw.push_back({i * nb + e[0], i * nb + e[1]});
    std::map<Edge, int> at;
    for (int e = 0; e < fp.numEdges(); ++e) at[fp.edges[e]] = e;
    for (auto& blk : expect)
        for (auto& e : blk) {
            Edge x = raw[e];
            if (x[0] > x[1]) std::swap(x[0], x[1]);
            e = at.at(x);
        }
    r.partitionLifts = canonicalBlocks(expect) == canonicalBlocks(dependencyPartition(fp).blocks);
    return r;
}

inline std::vector<RatVector> spanOf(const std::vector<RatVector>& pts, const std::vector<int>& idx) {
    std::vector<RatVector> out;
    for (std::size_t i = 1; i < idx.size(); ++i) out.push_back(sub(pts[idx[i]], pts[idx[0]]));
    return out;
}

inline std::string faceName(const PolytopeV& p, const std::vector<int>& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + p.ids[f[i]];
    return s + "}";
}

// Empty string when no edge of `a` is parallel to an edge or 2-face of `b`; otherwise names the pair.
inline std::string parallelogramicViolation(const PolytopeV& a, const std::string& an, const PolytopeV& b,
                                            const std::string& bn) {
    std::vector<std::vector<int>> low;
    auto eb = edges(b);
    for (const auto& e : eb) low.push_back({e[0], e[1]});
    if (affineDim(b.verts) >= 2) {
        for (const auto& f : faceLattice(b, facets(b)))
            if (affineDim(pick(b.verts, f)) == 2) low.push_back(f);
    }
    for (const auto& e : edges(a)) {
        RatVector d = sub(a.verts[e[1]], a.verts[e[0]]);
        for (const auto& f : low) {
            if (inSpan(spanOf(b.verts, f), d))
                return "edge " + an + faceName(a, {e[0], e[1]}) + " is parallel to " + (f.size() == 2 ? "edge " : "2-face ") +
                       bn + faceName(b, f);
        }
    }
    return "";
}

inline FactorizationReport minkowskiFactorization(const PolytopeV& a, const PolytopeV& b) {
    FactorizationReport r;
    std::string v = parallelogramicViolation(a, "A", b, "B");
    if (v.empty()) v = parallelogramicViolation(b, "B", a, "A");
    if (!v.empty()) {
        r.refused = true;
        r.reason = "not in parallelogramic position: " + v;
        return r;
    }
    Framework fa = frameworkOf(a), fb = frameworkOf(b);
    PolytopeV s = minkowskiSum(a.verts, b.verts);
    Framework fs = frameworkOf(s);
    r.dimA = dcDimension(fa);
    r.dimB = dcDimension(fb);
    r.dimSum = dcDimension(fs);
    // each vertex of the sum splits uniquely as a_i + b_j
    std::vector<std::pair<int, int>> split(s.numVertices(), {-1, -1});
    for (int i = 0; i < a.numVertices(); ++i)
        for (int j = 0; j < b.numVertices(); ++j) {
            RatVector x = add(a.verts[i], b.verts[j]);
            for (int t = 0; t < s.numVertices(); ++t)
                if (s.verts[t] == x) split[t] = {i, j};
        }
    auto pa = dependencyPartition(fa), pb = dependencyPartition(fb);
    std::map<std::pair<int, int>, std::vector<int>> lifted;  // (summand, block) -> sum edges
    for (int e = 0; e < fs.numEdges(); ++e) {
        auto [a1, b1] = split[fs.edges[e][0]];
        auto [a2, b2] = split[fs.edges[e][1]];
        if (b1 == b2 && a1 != a2) {
            lifted[{0, pa.blockOf(fa.edgeIndex(a1, a2))}].push_back(e);
        } else if (a1 == a2 && b1 != b2) {
            lifted[{1, pb.blockOf(fb.edgeIndex(b1, b2))}].push_back(e);
        } else {
            r.partitionLifts = false;
            return r;
        }
    }
    std::vector<std::vector<int>> expect;
    for (auto& [k, v2] : lifted) expect.push_back(v2);
    r.partitionLifts = canonicalBlocks(expect) == canonicalBlocks(dependencyPartition(fs).blocks);
    return r;
}

}  // namespace mdc
