#pragma once

#include "mdc/linprog.hpp"
#include "mdc/rational.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mdc {

struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Edge = std::array<int, 2>;

// Label-level description, as read from a file. Not yet checked.
struct FrameworkSpec {
    int dim = 0;
    std::vector<std::string> ids;
    std::vector<RatVector> coords;
    std::vector<std::pair<std::string, std::string>> edges;
};

struct Framework {
    int dim = 0;
    std::vector<std::string> ids;
    std::vector<RatVector> pts;
    std::vector<Edge> edges;

    int numVertices() const { return static_cast<int>(ids.size()); }
    int numEdges() const { return static_cast<int>(edges.size()); }

    int index(const std::string& label) const {
        for (int i = 0; i < numVertices(); ++i)
            if (ids[i] == label) return i;
        return -1;
    }
    RatVector direction(int e) const { return sub(pts[edges[e][1]], pts[edges[e][0]]); }
    bool degenerate(int e) const { return pts[edges[e][0]] == pts[edges[e][1]]; }
    int edgeIndex(int u, int v) const {
        for (int e = 0; e < numEdges(); ++e)
            if ((edges[e][0] == u && edges[e][1] == v) || (edges[e][0] == v && edges[e][1] == u))
                return e;
        return -1;
    }
};

inline std::vector<std::string> validate(const FrameworkSpec& s) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& id : s.ids)
        if (!seen.insert(id).second) out.push_back("duplicate vertex '" + id + "'");
    if (s.coords.size() != s.ids.size()) out.push_back("coordinate count mismatch");
    for (std::size_t i = 0; i < s.coords.size(); ++i)
        if (static_cast<int>(s.coords[i].size()) != s.dim)
            out.push_back("mixed dimensions at vertex '" + (i < s.ids.size() ? s.ids[i] : "?") + "'");
    std::set<std::pair<std::string, std::string>> es;
    for (const auto& [a, b] : s.edges) {
        if (!seen.count(a) || !seen.count(b)) {
            out.push_back("unknown vertex in edge {" + a + "," + b + "}");
            continue;
        }
        if (a == b) {
            out.push_back("self-loop at '" + a + "'");
            continue;
        }
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        if (!es.insert(key).second) out.push_back("duplicate edge {" + a + "," + b + "}");
    }
    return out;
}

inline std::vector<std::string> validate(const Framework& fw) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& id : fw.ids)
        if (!seen.insert(id).second) out.push_back("duplicate vertex '" + id + "'");
    if (fw.pts.size() != fw.ids.size()) out.push_back("coordinate count mismatch");
    for (std::size_t i = 0; i < fw.pts.size(); ++i)
        if (static_cast<int>(fw.pts[i].size()) != fw.dim) out.push_back("mixed dimensions");
    std::set<std::pair<int, int>> es;
    for (const auto& e : fw.edges) {
        if (e[0] < 0 || e[1] < 0 || e[0] >= fw.numVertices() || e[1] >= fw.numVertices()) {
            out.push_back("unknown vertex");
            continue;
        }
        if (e[0] == e[1]) {
            out.push_back("self-loop");
            continue;
        }
        if (!es.insert({std::min(e[0], e[1]), std::max(e[0], e[1])}).second) out.push_back("duplicate edge");
    }
    return out;
}

inline Framework build(const FrameworkSpec& s) {
    auto v = validate(s);
    if (!v.empty()) throw InputError(v.front());
    Framework fw;
    fw.dim = s.dim;
    fw.ids = s.ids;
    fw.pts = s.coords;
    std::map<std::string, int> at;
    for (int i = 0; i < static_cast<int>(s.ids.size()); ++i) at[s.ids[i]] = i;
    for (const auto& [a, b] : s.edges) fw.edges.push_back({at[a], at[b]});
    return fw;
}

inline FrameworkSpec toSpec(const Framework& fw) {
    FrameworkSpec s;
    s.dim = fw.dim;
    s.ids = fw.ids;
    s.coords = fw.pts;
    for (const auto& e : fw.edges) s.edges.emplace_back(fw.ids[e[0]], fw.ids[e[1]]);
    return s;
}

struct Forest {
    std::vector<int> component;   // component id per vertex
    std::vector<int> parent;      // -1 at roots
    std::vector<int> parentEdge;  // edge to parent
    std::vector<int> depth;
    std::vector<int> roots;       // per component: smallest label
    std::vector<bool> treeEdge;
    int count = 0;
};

inline std::vector<std::vector<std::pair<int, int>>> adjacency(const Framework& fw) {
    std::vector<std::vector<std::pair<int, int>>> adj(fw.numVertices());
    for (int e = 0; e < fw.numEdges(); ++e) {
        adj[fw.edges[e][0]].push_back({fw.edges[e][1], e});
        adj[fw.edges[e][1]].push_back({fw.edges[e][0], e});
    }
    return adj;
}

// BFS forest rooted at the smallest label of each component.
inline Forest spanningForest(const Framework& fw) {
    const int n = fw.numVertices();
    Forest f;
    f.component.assign(n, -1);
    f.parent.assign(n, -1);
    f.parentEdge.assign(n, -1);
    f.depth.assign(n, 0);
    f.treeEdge.assign(fw.numEdges(), false);
    auto adj = adjacency(fw);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fw.ids[a] < fw.ids[b]; });
    for (int s : order) {
        if (f.component[s] != -1) continue;
        int c = f.count++;
        f.roots.push_back(s);
        std::queue<int> q;
        q.push(s);
        f.component[s] = c;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [w, e] : adj[u]) {
                if (f.component[w] != -1) continue;
                f.component[w] = c;
                f.parent[w] = u;
                f.parentEdge[w] = e;
                f.depth[w] = f.depth[u] + 1;
                f.treeEdge[e] = true;
                q.push(w);
            }
        }
    }
    return f;
}

inline bool isConnected(const Framework& fw) {
    return fw.numVertices() <= 1 || spanningForest(fw).count == 1;
}

// Tree path from u to v as a vertex walk (same component assumed).
inline std::vector<int> treePath(const Forest& f, int u, int v) {
    std::vector<int> left{u}, right{v};
    int a = u, b = v;
    while (a != b) {
        if (f.depth[a] >= f.depth[b]) {
            a = f.parent[a];
            left.push_back(a);
        } else {
            b = f.parent[b];
            right.push_back(b);
        }
    }
    right.pop_back();
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
}

// Fundamental cycles of the BFS forest, one per non-tree edge (in edge order).
// Each cycle is a closed walk u_1..u_k; the closing step u_k -> u_1 is the non-tree edge.
inline std::vector<std::vector<int>> cycleBasis(const Framework& fw) {
    Forest f = spanningForest(fw);
    std::vector<std::vector<int>> cycles;
    for (int e = 0; e < fw.numEdges(); ++e) {
        if (f.treeEdge[e]) continue;
        cycles.push_back(treePath(f, fw.edges[e][0], fw.edges[e][1]));
    }
    return cycles;
}

struct DeformationSpace {
    std::vector<RatVector> basis;  // vectors indexed by edges
    std::vector<bool> degenerate;
    std::vector<std::vector<int>> fundamentalCycles;
    Forest forest;

    std::size_t dim() const { return basis.size(); }
};

// Rows Σ λ_{u_i u_{i+1}} (φ_{u_{i+1}} − φ_{u_i}) = 0 for each walk, one per coordinate.
inline RatMatrix cycleEquations(const Framework& fw, const std::vector<std::vector<int>>& cycles) {
    RatMatrix rows;
    std::map<std::pair<int, int>, int> at;
    for (int e = 0; e < fw.numEdges(); ++e) {
        at[{fw.edges[e][0], fw.edges[e][1]}] = e;
        at[{fw.edges[e][1], fw.edges[e][0]}] = e;
    }
    for (const auto& walk : cycles) {
        RatMatrix block(fw.dim, RatVector(fw.numEdges()));
        for (std::size_t i = 0; i < walk.size(); ++i) {
            int a = walk[i], b = walk[(i + 1) % walk.size()];
            auto it = at.find({a, b});
            if (it == at.end()) throw InputError("walk uses a non-edge");
            for (int k = 0; k < fw.dim; ++k) block[k][it->second] += fw.pts[b][k] - fw.pts[a][k];
        }
        for (auto& r : block)
            if (!isZero(r)) rows.push_back(std::move(r));
    }
    return rows;
}

inline DeformationSpace deformationSpace(const Framework& fw) {
    DeformationSpace ds;
    ds.forest = spanningForest(fw);
    ds.fundamentalCycles = cycleBasis(fw);
    RatMatrix rows = cycleEquations(fw, ds.fundamentalCycles);
    ds.degenerate.assign(fw.numEdges(), false);
    for (int e = 0; e < fw.numEdges(); ++e) {
        if (!fw.degenerate(e)) continue;
        ds.degenerate[e] = true;
        RatVector r(fw.numEdges());
        r[e] = 1;
        rows.push_back(std::move(r));
    }
    // The unit vector u (1 on non-degenerate edges, 0 on degenerate ones) is in L
    // and positive on every coordinate not identically zero on L, so it is a
    // relative interior point of L ∩ R_+^E. Hence that cone spans L and dim DC = dim L.
    ds.basis = nullspace(rows, fw.numEdges());
    return ds;
}

inline int dcDimension(const Framework& fw) {
    return static_cast<int>(deformationSpace(fw).dim());
}

inline RatVector unitVector(const Framework& fw) {
    RatVector u(fw.numEdges());
    for (int e = 0; e < fw.numEdges(); ++e) u[e] = fw.degenerate(e) ? 0 : 1;
    return u;
}

// Ground truth: connected and at most one-dimensional deformation cone.
inline bool isIndecomposable(const Framework& fw) {
    if (fw.numVertices() <= 1) return true;
    if (!isConnected(fw)) return false;
    return dcDimension(fw) <= 1;
}

inline bool inDeformationSpan(const Framework& fw, const DeformationSpace& ds, const RatVector& lambda) {
    if (static_cast<int>(lambda.size()) != fw.numEdges()) return false;
    for (int e = 0; e < fw.numEdges(); ++e)
        if (ds.degenerate[e] && sgn(lambda[e]) != 0) return false;
    for (const auto& row : cycleEquations(fw, ds.fundamentalCycles))
        if (sgn(dot(row, lambda)) != 0) return false;
    return true;
}

inline Framework applyDeformation(const Framework& fw, const RatVector& lambda) {
    DeformationSpace ds = deformationSpace(fw);
    if (static_cast<int>(lambda.size()) != fw.numEdges()) throw ContractError("lambda has wrong length");
    for (const auto& x : lambda)
        if (sgn(x) < 0) throw ContractError("lambda has a negative entry");
    if (!inDeformationSpan(fw, ds, lambda)) throw ContractError("lambda violates a cycle equation");
    Framework out = fw;
    const Forest& f = ds.forest;
    auto adj = adjacency(fw);
    std::vector<bool> done(fw.numVertices(), false);
    for (int r : f.roots) {
        std::queue<int> q;
        q.push(r);
        done[r] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [w, e] : adj[u]) {
                if (done[w]) continue;
                done[w] = true;
                out.pts[w] = add(out.pts[u], scale(sub(fw.pts[w], fw.pts[u]), lambda[e]));
                q.push(w);
            }
        }
    }
    return out;
}

// λ with ψ_v − ψ_u = λ_e (φ_v − φ_u) on every edge, if one exists.
inline std::optional<RatVector> edgeDeformationVector(const Framework& fw, const Framework& psi) {
    RatVector lambda(fw.numEdges());
    for (int e = 0; e < fw.numEdges(); ++e) {
        RatVector d = fw.direction(e);
        RatVector dp = sub(psi.pts[fw.edges[e][1]], psi.pts[fw.edges[e][0]]);
        if (isZero(d)) {
            if (!isZero(dp)) return std::nullopt;
            continue;
        }
        std::size_t k = 0;
        while (sgn(d[k]) == 0) ++k;
        Rational c = dp[k] / d[k];
        if (scale(d, c) != dp) return std::nullopt;
        lambda[e] = c;
    }
    return lambda;
}

struct DependencyPartition {
    std::vector<std::vector<int>> blocks;  // edge indices, each sorted; blocks by smallest edge

    int blockOf(int e) const {
        for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
            if (std::binary_search(blocks[b].begin(), blocks[b].end(), e)) return b;
        return -1;
    }
};

inline DependencyPartition dependencyPartition(const Framework& fw, const DeformationSpace& ds) {
    std::map<RatVector, int> key;
    DependencyPartition p;
    for (int e = 0; e < fw.numEdges(); ++e) {
        if (ds.degenerate[e]) continue;
        RatVector sig;
        for (const auto& b : ds.basis) sig.push_back(b[e]);
        auto it = key.find(sig);
        if (it == key.end()) {
            key[sig] = static_cast<int>(p.blocks.size());
            p.blocks.push_back({e});
        } else {
            p.blocks[it->second].push_back(e);
        }
    }
    return p;
}

inline DependencyPartition dependencyPartition(const Framework& fw) {
    return dependencyPartition(fw, deformationSpace(fw));
}

// Per basis vector b, the displacement ψ_v − ψ_u along a tree path, divided by φ_v − φ_u.
// Empty when u, v lie in different components or some displacement leaves span(φ_v − φ_u).
// When φ_u = φ_v the result is all zeros if every displacement vanishes.
inline std::optional<RatVector> pairCoefficients(const Framework& fw, const DeformationSpace& ds, int u, int v) {
    const Forest& f = ds.forest;
    if (f.component[u] != f.component[v]) return std::nullopt;
    std::vector<int> walk = treePath(f, u, v);
    RatVector d = sub(fw.pts[v], fw.pts[u]);
    std::size_t k0 = 0;
    while (k0 < d.size() && sgn(d[k0]) == 0) ++k0;
    RatVector coef;
    for (const auto& b : ds.basis) {
        RatVector disp(fw.dim);
        for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
            int a = walk[i], c = walk[i + 1];
            int e = f.parent[a] == c ? f.parentEdge[a] : f.parentEdge[c];
            if (sgn(b[e]) == 0) continue;
            for (int k = 0; k < fw.dim; ++k) disp[k] += b[e] * (fw.pts[c][k] - fw.pts[a][k]);
        }
        if (k0 == d.size()) {
            if (!isZero(disp)) return std::nullopt;
            coef.push_back(0);
            continue;
        }
        Rational c = disp[k0] / d[k0];
        if (scale(d, c) != disp) return std::nullopt;
        coef.push_back(c);
    }
    return coef;
}

// min of the linear functional t -> coef . t over {Σ t_b b ≥ 0, Σ_e Σ t_b b_e = 1}.
inline std::optional<Rational> minOverNormalizedCone(const DeformationSpace& ds, const RatVector& coef) {
    const std::size_t k = ds.basis.size();
    if (k == 0) return std::nullopt;
    const std::size_t m = ds.basis[0].size();
    LinearProgram lp(k);
    RatVector total(k);
    for (std::size_t e = 0; e < m; ++e) {
        RatVector row(k);
        for (std::size_t j = 0; j < k; ++j) {
            row[j] = ds.basis[j][e];
            total[j] += ds.basis[j][e];
        }
        if (!isZero(row)) lp.addGe(row, 0);
    }
    lp.addEq(total, 1);
    lp.objective = coef;
    auto r = solve(lp);
    if (r.status != LpStatus::Optimal) return std::nullopt;
    return r.value;
}

struct ImplicitEdgeTest {
    bool sameComponent = false;
    bool spanCondition = false;     // (b)
    bool nonnegCondition = false;   // (c)
    bool result() const { return sameComponent && spanCondition && nonnegCondition; }
};

inline ImplicitEdgeTest implicitEdgeTest(const Framework& fw, const DeformationSpace& ds, int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= fw.numVertices() || v >= fw.numVertices())
        throw InputError("implicit edge query needs two distinct known vertices");
    ImplicitEdgeTest t;
    t.sameComponent = ds.forest.component[u] == ds.forest.component[v];
    if (!t.sameComponent) return t;
    auto coef = pairCoefficients(fw, ds, u, v);
    t.spanCondition = coef.has_value();
    if (!coef) return t;
    if (fw.pts[u] == fw.pts[v] || isZero(*coef)) {
        t.nonnegCondition = true;
        return t;
    }
    auto mn = minOverNormalizedCone(ds, *coef);
    t.nonnegCondition = !mn || sgn(*mn) >= 0;
    return t;
}

inline bool isImplicitEdge(const Framework& fw, const DeformationSpace& ds, int u, int v) {
    return implicitEdgeTest(fw, ds, u, v).result();
}

inline bool isImplicitEdge(const Framework& fw, const std::string& u, const std::string& v) {
    int a = fw.index(u), b = fw.index(v);
    if (a < 0 || b < 0) throw InputError("unknown vertex label");
    return isImplicitEdge(fw, deformationSpace(fw), a, b);
}

inline Framework closure(const Framework& fw) {
    DeformationSpace ds = deformationSpace(fw);
    Framework out = fw;
    std::set<std::pair<int, int>> have;
    for (const auto& e : fw.edges) have.insert({std::min(e[0], e[1]), std::max(e[0], e[1])});
    for (int u = 0; u < fw.numVertices(); ++u)
        for (int v = u + 1; v < fw.numVertices(); ++v)
            if (!have.count({u, v}) && isImplicitEdge(fw, ds, u, v)) out.edges.push_back({u, v});
    return out;
}

struct Quotient {
    Framework fw;
    std::vector<int> classOf;  // old vertex -> new vertex
};

inline Quotient quotientDegenerate(const Framework& fw) {
    const int n = fw.numVertices();
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    std::function<int(int)> find = [&](int x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };
    for (int e = 0; e < fw.numEdges(); ++e) {
        if (!fw.degenerate(e)) continue;
        int a = find(fw.edges[e][0]), b = find(fw.edges[e][1]);
        if (a != b) rep[std::max(a, b)] = std::min(a, b);
    }
    Quotient q;
    q.fw.dim = fw.dim;
    q.classOf.assign(n, -1);
    std::vector<int> newIndex(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (newIndex[r] == -1) {
            newIndex[r] = q.fw.numVertices();
            q.fw.ids.push_back(fw.ids[r]);
            q.fw.pts.push_back(fw.pts[r]);
        }
        q.classOf[v] = newIndex[r];
    }
    std::set<std::pair<int, int>> have;
    for (const auto& e : fw.edges) {
        int a = q.classOf[e[0]], b = q.classOf[e[1]];
        if (a == b) continue;
        if (have.insert({std::min(a, b), std::max(a, b)}).second) q.fw.edges.push_back({a, b});
    }
    return q;
}

// Linear map with kernel span(W): complete the RREF of W with the standard basis
// vectors of its non-pivot columns and keep those coordinates.
struct Projection {
    Echelon w;
    std::vector<std::size_t> keep;
    int source = 0;

    RatVector apply(const RatVector& x) const {
        RatVector y = x;
        for (std::size_t i = 0; i < w.rows.size(); ++i) {
            Rational c = x[w.pivots[i]];
            if (sgn(c) == 0) continue;
            for (std::size_t j = 0; j < y.size(); ++j) y[j] -= c * w.rows[i][j];
        }
        RatVector out;
        for (auto j : keep) out.push_back(y[j]);
        return out;
    }
};

inline Projection projectionAlong(const std::vector<RatVector>& W, int d) {
    Projection p;
    p.source = d;
    p.w = rref(W, static_cast<std::size_t>(d));
    std::vector<bool> piv(d, false);
    for (auto c : p.w.pivots) piv[c] = true;
    for (int j = 0; j < d; ++j)
        if (!piv[j]) p.keep.push_back(j);
    return p;
}

inline Framework project(const Framework& fw, const std::vector<RatVector>& W) {
    Projection p = projectionAlong(W, fw.dim);
    Framework out = fw;
    out.dim = static_cast<int>(p.keep.size());
    for (auto& x : out.pts) x = p.apply(x);
    return out;
}

inline Framework inducedSubframework(const Framework& fw, const std::vector<int>& verts) {
    Framework out;
    out.dim = fw.dim;
    std::vector<int> at(fw.numVertices(), -1);
    for (int v : verts) {
        at[v] = out.numVertices();
        out.ids.push_back(fw.ids[v]);
        out.pts.push_back(fw.pts[v]);
    }
    for (const auto& e : fw.edges)
        if (at[e[0]] >= 0 && at[e[1]] >= 0) out.edges.push_back({at[e[0]], at[e[1]]});
    return out;
}

}  // namespace mdc
