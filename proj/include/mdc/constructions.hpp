#pragma once

#include "mdc/framework.hpp"
#include "mdc/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mdc {

struct SimpleGraph {
    std::vector<std::string> nodes;
    std::vector<Edge> arcs;

    int numNodes() const { return static_cast<int>(nodes.size()); }
};

inline SimpleGraph completeBipartite(int n, int m) {
    SimpleGraph g;
    for (int i = 1; i <= n; ++i) g.nodes.push_back("a" + std::to_string(i));
    for (int j = 1; j <= m; ++j) g.nodes.push_back("b" + std::to_string(j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) g.arcs.push_back({i, n + j});
    return g;
}

inline SimpleGraph completeGraph(int n) {
    SimpleGraph g;
    for (int i = 1; i <= n; ++i) g.nodes.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.arcs.push_back({i, j});
    return g;
}

inline SimpleGraph cycleGraph(int n) {
    SimpleGraph g;
    for (int i = 1; i <= n; ++i) g.nodes.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i) g.arcs.push_back({i, (i + 1) % n});
    return g;
}

// reversed[a] == false means arcs[a][0] -> arcs[a][1].
struct AcyclicOrientation {
    std::vector<bool> reversed;

    Edge directed(const SimpleGraph& g, int a) const {
        return reversed[a] ? Edge{g.arcs[a][1], g.arcs[a][0]} : g.arcs[a];
    }
};

inline bool reaches(const std::vector<std::vector<int>>& out, int from, int to) {
    std::vector<bool> seen(out.size(), false);
    std::vector<int> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x == to) return true;
        for (int y : out[x])
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
    }
    return false;
}

// Backtracking over arcs in order, forward before reversed, so the output is
// sorted lexicographically by direction map.
inline std::vector<AcyclicOrientation> acyclicOrientations(const SimpleGraph& g) {
    std::vector<AcyclicOrientation> out;
    std::vector<std::vector<int>> adj(g.numNodes());
    AcyclicOrientation cur;
    cur.reversed.assign(g.arcs.size(), false);
    std::function<void(std::size_t)> rec = [&](std::size_t a) {
        if (a == g.arcs.size()) {
            out.push_back(cur);
            return;
        }
        for (int r = 0; r < 2; ++r) {
            int u = g.arcs[a][r], v = g.arcs[a][1 - r];
            if (reaches(adj, v, u)) continue;
            cur.reversed[a] = r == 1;
            adj[u].push_back(v);
            rec(a + 1);
            adj[u].pop_back();
        }
    };
    rec(0);
    return out;
}

inline RatVector inDegreeVector(const SimpleGraph& g, const AcyclicOrientation& o) {
    RatVector v(g.numNodes());
    for (std::size_t a = 0; a < g.arcs.size(); ++a) v[o.directed(g, static_cast<int>(a))[1]] += 1;
    return v;
}

inline std::string orientationLabel(const AcyclicOrientation& o) {
    std::string s = "o";
    for (bool r : o.reversed) s += r ? '1' : '0';
    return s;
}

// Vertices v_rho = sum of in-degrees; edges join orientations differing on one arc.
inline PolytopeV graphicalZonotope(const SimpleGraph& g) {
    auto os = acyclicOrientations(g);
    PolytopeV p;
    p.dim = g.numNodes();
    std::map<std::vector<bool>, int> at;
    for (const auto& o : os) {
        at[o.reversed] = p.numVertices();
        p.ids.push_back(orientationLabel(o));
        p.verts.push_back(inDegreeVector(g, o));
    }
    std::vector<Edge> es;
    for (int i = 0; i < p.numVertices(); ++i) {
        for (std::size_t a = 0; a < g.arcs.size(); ++a) {
            auto flip = os[i].reversed;
            flip[a] = !flip[a];
            auto it = at.find(flip);
            if (it != at.end() && it->second > i) es.push_back({i, it->second});
        }
    }
    p.edgeHint = sortedEdges(es);
    return p;
}

enum class TruncKind { P, Q };

// Z(K_{n,m}) with v_{n->m} (and for Q also v_{n<-m}) removed.
// For nm > 2 edges follow the combinatorial description; smaller cases use LP edges.
inline PolytopeV bipartiteTruncation(int n, int m, TruncKind kind) {
    if (n < 1 || m < 1) throw InputError("bipartite truncation needs n, m >= 1");
    if (kind == TruncKind::Q && n * m <= 2) throw InputError("Q_{n,m} needs nm > 2");
    SimpleGraph g = completeBipartite(n, m);
    auto os = acyclicOrientations(g);
    const std::size_t A = g.arcs.size();
    // arcs are a_i -> b_j when not reversed
    auto countReversed = [&](const AcyclicOrientation& o) {
        return static_cast<std::size_t>(std::count(o.reversed.begin(), o.reversed.end(), true));
    };
    auto removed = [&](const AcyclicOrientation& o) {
        std::size_t r = countReversed(o);
        return r == 0 || (kind == TruncKind::Q && r == A);
    };
    PolytopeV p;
    p.dim = n + m;
    std::map<std::vector<bool>, int> at;
    std::vector<int> reversedArc;  // for almost left-right / right-left orientations
    std::vector<int> side;         // 0 none, 1 almost left-right, 2 almost right-left
    for (const auto& o : os) {
        if (removed(o)) continue;
        at[o.reversed] = p.numVertices();
        p.ids.push_back(orientationLabel(o));
        p.verts.push_back(inDegreeVector(g, o));
        std::size_t r = countReversed(o);
        int s = 0, arc = -1;
        if (r == 1) {
            s = 1;
            arc = static_cast<int>(std::find(o.reversed.begin(), o.reversed.end(), true) - o.reversed.begin());
        } else if (kind == TruncKind::Q && r + 1 == A) {
            s = 2;
            arc = static_cast<int>(std::find(o.reversed.begin(), o.reversed.end(), false) - o.reversed.begin());
        }
        side.push_back(s);
        reversedArc.push_back(arc);
    }
    if (n * m <= 2) return p;
    std::set<Edge> es;
    for (const auto& [rev, i] : at) {
        for (std::size_t a = 0; a < A; ++a) {
            auto flip = rev;
            flip[a] = !flip[a];
            auto it = at.find(flip);
            if (it != at.end() && it->second > i) es.insert({i, it->second});
        }
    }
    for (int i = 0; i < p.numVertices(); ++i) {
        for (int j = i + 1; j < p.numVertices(); ++j) {
            if (side[i] == 0 || side[i] != side[j]) continue;
            const Edge& g1 = g.arcs[reversedArc[i]];
            const Edge& g2 = g.arcs[reversedArc[j]];
            if (g1[0] == g2[0] || g1[1] == g2[1]) es.insert({i, j});
        }
    }
    p.edgeHint = std::vector<Edge>(es.begin(), es.end());
    return p;
}

enum class WedgeSide { Min, Max };

// i is 1-based. Vertices v x {0} and v + (v_i - extreme_i)(e_{n+1} - e_i); coincident copies collapse.
inline PolytopeV permutahedralWedge(const PolytopeV& p, int i, WedgeSide side) {
    if (i < 1 || i > p.dim) throw InputError("wedge coordinate out of range");
    const int k = i - 1;
    Rational ext = p.verts.at(0)[k];
    for (const auto& v : p.verts) ext = side == WedgeSide::Min ? std::min(ext, v[k]) : std::max(ext, v[k]);
    PolytopeV w;
    w.dim = p.dim + 1;
    for (int a = 0; a < p.numVertices(); ++a) {
        RatVector v = p.verts[a];
        v.push_back(0);
        w.ids.push_back(p.ids[a]);
        w.verts.push_back(v);
    }
    for (int a = 0; a < p.numVertices(); ++a) {
        Rational t = p.verts[a][k] - ext;
        if (sgn(t) == 0) continue;
        RatVector v = p.verts[a];
        v.push_back(t);
        v[k] -= t;
        w.ids.push_back(p.ids[a] + "^");
        w.verts.push_back(v);
    }
    return w;
}

// Normal-equivalence invariants only: equal fingerprints do not prove normal equivalence.
struct WedgeFingerprint {
    std::vector<long> fVector;
    std::vector<RatVector> normals;  // primitive facet normals, sorted
    auto operator<=>(const WedgeFingerprint&) const = default;
};

inline WedgeFingerprint wedgeFingerprint(const PolytopeV& p) {
    WedgeFingerprint f;
    f.fVector = fVectorLP(p);
    for (const auto& x : facets(p)) f.normals.push_back(primitiveInteger(x.normal));
    std::sort(f.normals.begin(), f.normals.end());
    return f;
}

// levels[0] = {p}; levels[k] = wedges of levels[k-1] over every coordinate and side that raise the dimension,
// one representative per fingerprint.
inline std::vector<std::vector<PolytopeV>> wedgeTower(const PolytopeV& p, int depth) {
    std::vector<std::vector<PolytopeV>> levels{{p}};
    for (int k = 0; k < depth; ++k) {
        std::map<WedgeFingerprint, PolytopeV> next;
        for (const auto& q : levels.back()) {
            const int d = affineDim(q.verts);
            for (int i = 1; i <= q.dim; ++i)
                for (auto side : {WedgeSide::Min, WedgeSide::Max}) {
                    PolytopeV w = permutahedralWedge(q, i, side);
                    if (affineDim(w.verts) != d + 1) continue;
                    next.emplace(wedgeFingerprint(w), std::move(w));
                }
        }
        levels.emplace_back();
        for (auto& [f, w] : next) levels.back().push_back(std::move(w));
    }
    return levels;
}

struct MatroidBases {
    int groundSize = 0;
    std::vector<std::vector<int>> bases;  // sorted 0-based subsets
};

inline MatroidBases normalized(MatroidBases m) {
    for (auto& b : m.bases) std::sort(b.begin(), b.end());
    std::sort(m.bases.begin(), m.bases.end());
    m.bases.erase(std::unique(m.bases.begin(), m.bases.end()), m.bases.end());
    return m;
}

inline bool exchangeAxiom(const MatroidBases& mb) {
    if (mb.bases.empty()) return false;
    std::set<std::vector<int>> all(mb.bases.begin(), mb.bases.end());
    for (const auto& b : mb.bases)
        if (b.size() != mb.bases[0].size()) return false;
    for (const auto& a : mb.bases) {
        for (const auto& b : mb.bases) {
            for (int x : a) {
                if (std::binary_search(b.begin(), b.end(), x)) continue;
                bool found = false;
                for (int y : b) {
                    if (std::binary_search(a.begin(), a.end(), y)) continue;
                    std::vector<int> c;
                    for (int z : a)
                        if (z != x) c.push_back(z);
                    c.push_back(y);
                    std::sort(c.begin(), c.end());
                    if (all.count(c)) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

inline MatroidBases uniformMatroid(int k, int n) {
    MatroidBases m;
    m.groundSize = n;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            m.bases.push_back(cur);
            return;
        }
        for (int x = start; x < n; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return m;
}

inline MatroidBases directSum(const MatroidBases& a, const MatroidBases& b) {
    MatroidBases m;
    m.groundSize = a.groundSize + b.groundSize;
    for (const auto& x : a.bases)
        for (const auto& y : b.bases) {
            auto z = x;
            for (int e : y) z.push_back(e + a.groundSize);
            m.bases.push_back(z);
        }
    return normalized(m);
}

// Spanning trees of g as bases over its arcs.
inline MatroidBases graphicMatroid(const SimpleGraph& g) {
    MatroidBases m;
    m.groundSize = static_cast<int>(g.arcs.size());
    const int r = g.numNodes() - 1;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == r) {
            std::vector<int> rep(g.numNodes());
            for (int i = 0; i < g.numNodes(); ++i) rep[i] = i;
            std::function<int(int)> find = [&](int x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };
            for (int a : cur) {
                int u = find(g.arcs[a][0]), v = find(g.arcs[a][1]);
                if (u == v) return;
                rep[u] = v;
            }
            m.bases.push_back(cur);
            return;
        }
        for (int a = start; a < m.groundSize; ++a) {
            cur.push_back(a);
            rec(a + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return m;
}

struct MatroidPolytope {
    PolytopeV polytope;
    int components = 0;  // connected components with at least two elements (loops and coloops stripped)
};

inline MatroidPolytope matroidPolytope(const MatroidBases& in) {
    MatroidBases mb = normalized(in);
    if (!exchangeAxiom(mb)) throw InputError("basis exchange axiom fails");
    MatroidPolytope out;
    PolytopeV& p = out.polytope;
    p.dim = mb.groundSize;
    for (const auto& b : mb.bases) {
        RatVector v(mb.groundSize);
        std::string id = "B";
        for (int e : b) {
            v[e] = 1;
            id += "_" + std::to_string(e + 1);
        }
        p.ids.push_back(id);
        p.verts.push_back(v);
    }
    std::vector<Edge> es;
    for (int i = 0; i < p.numVertices(); ++i)
        for (int j = i + 1; j < p.numVertices(); ++j) {
            std::vector<int> d;
            std::set_symmetric_difference(mb.bases[i].begin(), mb.bases[i].end(), mb.bases[j].begin(),
                                          mb.bases[j].end(), std::back_inserter(d));
            if (d.size() == 2) es.push_back({i, j});
        }
    p.edgeHint = es;
    // fundamental graph of the lexicographically first basis
    const auto& B = mb.bases.front();
    std::set<std::vector<int>> all(mb.bases.begin(), mb.bases.end());
    std::vector<int> rep(mb.groundSize);
    for (int i = 0; i < mb.groundSize; ++i) rep[i] = i;
    std::function<int(int)> find = [&](int x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };
    for (int x : B) {
        for (int y = 0; y < mb.groundSize; ++y) {
            if (std::binary_search(B.begin(), B.end(), y)) continue;
            std::vector<int> c;
            for (int z : B)
                if (z != x) c.push_back(z);
            c.push_back(y);
            std::sort(c.begin(), c.end());
            if (all.count(c)) rep[find(x)] = find(y);
        }
    }
    std::map<int, int> size;
    for (int e = 0; e < mb.groundSize; ++e) ++size[find(e)];
    for (const auto& [r, s] : size)
        if (s >= 2) ++out.components;
    return out;
}

inline PolytopeV productPolytope(const PolytopeV& a, const PolytopeV& b) {
    PolytopeV p;
    p.dim = a.dim + b.dim;
    auto ea = edges(a), eb = edges(b);
    for (int i = 0; i < a.numVertices(); ++i)
        for (int j = 0; j < b.numVertices(); ++j) {
            RatVector v = a.verts[i];
            v.insert(v.end(), b.verts[j].begin(), b.verts[j].end());
            p.ids.push_back(a.ids[i] + "|" + b.ids[j]);
            p.verts.push_back(v);
        }
    const int nb = b.numVertices();
    std::vector<Edge> es;
    for (const auto& e : ea)
        for (int j = 0; j < nb; ++j) es.push_back({e[0] * nb + j, e[1] * nb + j});
    for (int i = 0; i < a.numVertices(); ++i)
        for (const auto& e : eb) es.push_back({i * nb + e[0], i * nb + e[1]});
    p.edgeHint = sortedEdges(es);
    return p;
}

// Extreme points of {a + b}, deduplicated, in lexicographic order.
inline PolytopeV minkowskiSum(const std::vector<RatVector>& A, const std::vector<RatVector>& B) {
    std::set<RatVector> pts;
    for (const auto& a : A)
        for (const auto& b : B) pts.insert(add(a, b));
    std::vector<RatVector> all(pts.begin(), pts.end());
    std::vector<RatVector> keep;
    for (std::size_t i = 0; i < all.size(); ++i) {
        std::vector<int> others;
        for (std::size_t j = 0; j < all.size(); ++j)
            if (j != i) others.push_back(static_cast<int>(j));
        if (!inConvexHull(all, others, all[i])) keep.push_back(all[i]);
    }
    return makePolytope(keep, false);
}

inline PolytopeV hyperorderPolytope(int n, int k) {
    if (k < 1 || k > n) throw InputError("hyperorder needs 1 <= k <= n");
    std::set<RatVector> pts;
    for (int j = 0; j <= k; ++j) {
        if (j == k) {
            RatVector v(n);
            for (int t = n - j; t < n; ++t) v[t] = 1;
            pts.insert(v);
            continue;
        }
        for (int i = std::max(1, k - j); i <= n - j; ++i) {
            RatVector v(n);
            for (int t = n - j - i; t < n - j; ++t) v[t] = rat(k - j, i);
            for (int t = n - j; t < n; ++t) v[t] = 1;
            pts.insert(v);
        }
    }
    return makePolytope(std::vector<RatVector>(pts.begin(), pts.end()), true);
}

// Groups edges by direction up to scaling; class ids in order of first appearance.
inline std::vector<int> directionClasses(const PolytopeV& p, const std::vector<Edge>& es, int* count = nullptr) {
    std::map<RatVector, int> at;
    std::vector<int> cls;
    for (const auto& e : es) {
        RatVector d = normalizeFirst(sub(p.verts[e[1]], p.verts[e[0]]));
        auto it = at.find(d);
        if (it == at.end()) it = at.emplace(d, static_cast<int>(at.size())).first;
        cls.push_back(it->second);
    }
    if (count) *count = static_cast<int>(at.size());
    return cls;
}

inline int countComponents(int n, const std::vector<Edge>& arcs) {
    std::vector<int> rep(n);
    for (int i = 0; i < n; ++i) rep[i] = i;
    std::function<int(int)> find = [&](int x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };
    int c = n;
    for (const auto& a : arcs) {
        int u = find(a[0]), v = find(a[1]);
        if (u != v) {
            rep[u] = v;
            --c;
        }
    }
    return c;
}

struct TruncationResult {
    PolytopeV polytope;
    int classes = 0;
    std::vector<Edge> omegaArcs;  // between direction classes of the input
    int omegaComponents = 0;
    bool stable = true;
    int maxXv = 0;                // max over classes of |X_v|
    bool boundHypothesis = true;  // |X_v| <= dim - 2 for every class
};

// Deep truncation precondition: the neighbours of x span a hyperplane of the hull
// and no other vertex lies strictly on x's side.
inline bool admitsDeepTruncation(const PolytopeV& p, const std::vector<Edge>& es, int x, std::string* why = nullptr) {
    auto hp = hullCoordinates(p);
    const int h = hp.empty() ? 0 : static_cast<int>(hp[0].size());
    std::vector<int> nb;
    for (const auto& e : es) {
        if (e[0] == x) nb.push_back(e[1]);
        if (e[1] == x) nb.push_back(e[0]);
    }
    std::vector<RatVector> npts = pick(hp, nb);
    if (affineDim(npts) != h - 1) {
        if (why) *why = "no deep truncation: neighbours do not span a hyperplane";
        return false;
    }
    // hyperplane a.y = b through the neighbours
    RatMatrix rows;
    for (const auto& q : npts) {
        RatVector r = q;
        r.push_back(-1);
        rows.push_back(r);
    }
    auto ns = nullspace(rows, h + 1);
    RatVector a(ns[0].begin(), ns[0].begin() + h);
    Rational b = ns[0][h];
    int sx = sgn(dot(a, hp[x]) - b);
    if (sx == 0) {
        if (why) *why = "no deep truncation: vertex lies on its neighbours' hyperplane";
        return false;
    }
    for (int v = 0; v < p.numVertices(); ++v) {
        if (v == x) continue;
        if (sgn(dot(a, hp[v]) - b) == sx) {
            if (why) *why = "no deep truncation: vertex '" + p.ids[v] + "' lies beyond the cut";
            return false;
        }
    }
    return true;
}

inline TruncationResult deepTruncate(const PolytopeV& p, const std::vector<int>& X) {
    auto es = edges(p);
    TruncationResult r;
    std::set<int> xs(X.begin(), X.end());
    for (const auto& e : es)
        if (xs.count(e[0]) && xs.count(e[1])) r.stable = false;
    if (!r.stable) throw InputError("truncated vertices must be pairwise non-adjacent");
    for (int x : X) {
        std::string why;
        if (!admitsDeepTruncation(p, es, x, &why)) throw InputError(why);
    }
    auto cls = directionClasses(p, es, &r.classes);
    std::vector<std::set<int>> Xv(r.classes);
    std::set<Edge> omega;
    for (int x : X) {
        std::vector<int> around;
        for (std::size_t k = 0; k < es.size(); ++k)
            if (es[k][0] == x || es[k][1] == x) {
                around.push_back(cls[k]);
                Xv[cls[k]].insert(x);
            }
        std::sort(around.begin(), around.end());
        around.erase(std::unique(around.begin(), around.end()), around.end());
        for (std::size_t i = 0; i < around.size(); ++i)
            for (std::size_t j = i + 1; j < around.size(); ++j) omega.insert({around[i], around[j]});
    }
    r.omegaArcs.assign(omega.begin(), omega.end());
    r.omegaComponents = countComponents(r.classes, r.omegaArcs);
    const int dim = affineDim(p.verts);
    for (const auto& s : Xv) {
        r.maxXv = std::max(r.maxXv, static_cast<int>(s.size()));
        if (static_cast<int>(s.size()) > dim - 2) r.boundHypothesis = false;
    }
    PolytopeV out;
    out.dim = p.dim;
    for (int v = 0; v < p.numVertices(); ++v) {
        if (xs.count(v)) continue;
        out.ids.push_back(p.ids[v]);
        out.verts.push_back(p.verts[v]);
    }
    r.polytope = out;
    return r;
}

struct StackResult {
    PolytopeV polytope;
    std::vector<RatVector> points;  // q_F in stacking order
    std::vector<Rational> eps;
    std::vector<Edge> gammaArcs;    // between declared classes
    int gammaComponents = 0;
};

inline RatVector barycenter(const std::vector<RatVector>& pts) {
    RatVector c(pts[0].size());
    for (const auto& p : pts) c = add(c, p);
    return scale(c, Rational(1, static_cast<long>(pts.size())));
}

// Stacks one vertex beyond each listed facet (given by vertex-label sets of p),
// one after the other; facets are recomputed after every stack.
// `generators` declares the summand edge classes used for the stacking graph.
inline StackResult stackVertex(const PolytopeV& p, const std::vector<std::vector<std::string>>& facetLabels,
                               const std::vector<RatVector>& generators = {}) {
    if (affineDim(p.verts) != p.dim) throw InputError("stacking needs a full-dimensional polytope");
    StackResult r;
    PolytopeV cur = p;
    std::set<Edge> gamma;
    auto es = edges(p);
    for (std::size_t k = 0; k < facetLabels.size(); ++k) {
        std::set<std::string> want(facetLabels[k].begin(), facetLabels[k].end());
        auto fs = facets(cur);
        int target = -1;
        for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
            std::set<std::string> have;
            for (int v : fs[f].verts) have.insert(cur.ids[v]);
            if (have == want) target = f;
        }
        if (target < 0) throw InputError("stacking target is not a facet");
        RatVector c = barycenter(pick(cur.verts, fs[target].verts));
        Rational eps = 1;
        RatVector q;
        for (;;) {
            q = add(c, scale(fs[target].normal, eps));
            bool ok = true;
            for (int f = 0; f < static_cast<int>(fs.size()) && ok; ++f)
                if (f != target && dot(fs[f].normal, q) >= fs[f].rhs) ok = false;
            if (ok) break;
            eps /= 2;
        }
        cur.ids.push_back("q" + std::to_string(k + 1));
        cur.verts.push_back(q);
        cur.edgeHint.reset();
        r.points.push_back(q);
        r.eps.push_back(eps);
        if (!generators.empty()) {
            std::set<int> seen;
            for (const auto& e : es) {
                if (!want.count(p.ids[e[0]]) || !want.count(p.ids[e[1]])) continue;
                RatVector d = sub(p.verts[e[1]], p.verts[e[0]]);
                for (int gi = 0; gi < static_cast<int>(generators.size()); ++gi)
                    if (rank({d, generators[gi]}) == 1) seen.insert(gi);
            }
            std::vector<int> s(seen.begin(), seen.end());
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j) gamma.insert({s[i], s[j]});
        }
    }
    r.polytope = cur;
    r.gammaArcs.assign(gamma.begin(), gamma.end());
    r.gammaComponents = generators.empty() ? 0 : countComponents(static_cast<int>(generators.size()), r.gammaArcs);
    return r;
}

inline PolytopeV zonotope(const std::vector<RatVector>& generators) {
    std::vector<RatVector> pts{RatVector(generators.at(0).size())};
    for (const auto& g : generators) {
        std::vector<RatVector> next;
        for (const auto& p : pts) {
            next.push_back(p);
            next.push_back(add(p, g));
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        pts = std::move(next);
    }
    return minkowskiSum(pts, {RatVector(generators[0].size())});
}


inline bool inducesConnected(const SimpleGraph& g, const std::vector<int>& part) {
    if (part.empty()) return false;
    std::set<int> in(part.begin(), part.end());
    std::vector<Edge> arcs;
    std::map<int, int> at;
    for (int x : part) at[x] = static_cast<int>(at.size());
    for (const auto& a : g.arcs)
        if (in.count(a[0]) && in.count(a[1])) arcs.push_back({at[a[0]], at[a[1]]});
    return countComponents(static_cast<int>(part.size()), arcs) == 1;
}

// Nonempty proper subsets S with both S and its complement inducing connected subgraphs.
inline long connectedSplitCount(const SimpleGraph& g) {
    const int N = g.numNodes();
    long c = 0;
    for (unsigned long mask = 1; mask + 1 < (1UL << N); ++mask) {
        std::vector<int> s, t;
        for (int i = 0; i < N; ++i) ((mask >> i) & 1 ? s : t).push_back(i);
        if (inducesConnected(g, s) && inducesConnected(g, t)) ++c;
    }
    return c;
}

inline long bipartiteFacetFormula(int n, int m) {
    const long N = n + m;
    return (1L << N) + N + 2 - ((1L << n) + (1L << (N - n)));
}

// Faces of Z_G as (partition into connected parts, acyclic orientation of the contraction).
// `avoid` lists orientations (as reversed-masks) whose vertices are deeply truncated.
// Returns f_0 .. f_{d-1}.
inline std::vector<long> fVectorZonotopal(const SimpleGraph& g, const std::vector<std::vector<bool>>& avoid = {}) {
    const int N = g.numNodes();
    const int d = N - countComponents(N, g.arcs);
    // cnt[k][j]: faces of dim k containing exactly j truncated vertices
    std::vector<std::vector<long>> cnt(d + 1, std::vector<long>(avoid.size() + 1, 0));
    std::vector<int> part(N, -1);
    std::function<void(int, int)> rec = [&](int x, int parts) {
        if (x == N) {
            std::vector<std::vector<int>> blocks(parts);
            for (int i = 0; i < N; ++i) blocks[part[i]].push_back(i);
            for (const auto& b : blocks)
                if (!inducesConnected(g, b)) return;
            SimpleGraph h;
            for (int i = 0; i < parts; ++i) h.nodes.push_back(std::to_string(i));
            std::set<Edge> arcs;
            for (const auto& a : g.arcs) {
                int p = part[a[0]], q = part[a[1]];
                if (p != q) arcs.insert({std::min(p, q), std::max(p, q)});
            }
            h.arcs.assign(arcs.begin(), arcs.end());
            const int k = N - parts;
            for (const auto& o : acyclicOrientations(h)) {
                std::map<Edge, Edge> dir;
                for (std::size_t a = 0; a < h.arcs.size(); ++a) dir[h.arcs[a]] = o.directed(h, static_cast<int>(a));
                int hits = 0;
                for (const auto& av : avoid) {
                    bool inside = true;
                    for (std::size_t a = 0; a < g.arcs.size() && inside; ++a) {
                        Edge e = av[a] ? Edge{g.arcs[a][1], g.arcs[a][0]} : g.arcs[a];
                        int p = part[e[0]], q = part[e[1]];
                        if (p == q) continue;
                        if (dir[{std::min(p, q), std::max(p, q)}] != Edge{p, q}) inside = false;
                    }
                    if (inside) ++hits;
                }
                ++cnt[k][hits];
            }
            return;
        }
        for (int b = 0; b <= parts; ++b) {
            part[x] = b;
            rec(x + 1, std::max(parts, b + 1));
        }
    };
    rec(0, 0);
    std::vector<long> f(d, 0);
    for (int k = 0; k < d; ++k) {
        for (std::size_t j = 0; j < cnt[k].size(); ++j) {
            // F minus the cut vertices survives when 2-dimensional or more; each cut vertex adds F cap H
            if (j == 0 || k >= 2) f[k] += cnt[k][j];
            if (k >= 1) f[k] += static_cast<long>(j) * cnt[k + 1][j];
        }
    }
    return f;
}

inline std::vector<long> fVectorZonotopal(int n, int m, std::optional<TruncKind> kind) {
    SimpleGraph g = completeBipartite(n, m);
    std::vector<std::vector<bool>> avoid;
    if (kind) avoid.push_back(std::vector<bool>(g.arcs.size(), false));
    if (kind == TruncKind::Q) {
        if (n * m <= 2) throw InputError("zonotopal face count for Q_{n,m} needs nm > 2");
        avoid.push_back(std::vector<bool>(g.arcs.size(), true));
    }
    return fVectorZonotopal(g, avoid);
}

struct SmilanskyReport {
    long V = 0, F = 0;
    bool inequality = false;  // V >= 2F - 4
    bool indecomposable = false;
    bool counterexample() const { return inequality && indecomposable; }
};

inline SmilanskyReport smilanskyCheck(const PolytopeV& p, const std::vector<long>& f) {
    if (f.size() != 4) throw InputError("smilansky check needs a 4-polytope");
    SmilanskyReport r;
    r.V = f[0];
    r.F = f[3];
    r.inequality = r.V >= 2 * r.F - 4;
    r.indecomposable = isIndecomposable(frameworkOf(p));
    return r;
}

inline SmilanskyReport smilanskyCheck(int n, int m) {
    return smilanskyCheck(bipartiteTruncation(n, m, TruncKind::P), fVectorZonotopal(n, m, TruncKind::P));
}

}  // namespace mdc
