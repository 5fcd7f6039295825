#pragma once

#include "mdc/framework.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mdc {

enum class StepKind { Triangle, RigidCycle, ProjectionLift, DegenerateContraction, ImplicitFromPath, CoveringConclusion, DimBound };

inline const char* kindName(StepKind k) {
    switch (k) {
        case StepKind::Triangle: return "Triangle";
        case StepKind::RigidCycle: return "RigidCycle";
        case StepKind::ProjectionLift: return "ProjectionLift";
        case StepKind::DegenerateContraction: return "DegenerateContraction";
        case StepKind::ImplicitFromPath: return "ImplicitFromPath";
        case StepKind::CoveringConclusion: return "CoveringConclusion";
        case StepKind::DimBound: return "DimBound";
    }
    return "?";
}

inline StepKind kindFromName(const std::string& s) {
    for (auto k : {StepKind::Triangle, StepKind::RigidCycle, StepKind::ProjectionLift, StepKind::DegenerateContraction,
                   StepKind::ImplicitFromPath, StepKind::CoveringConclusion, StepKind::DimBound})
        if (s == kindName(k)) return k;
    throw InputError("unknown step kind '" + s + "'");
}

using LabelPair = std::array<std::string, 2>;

// Payload fields by kind:
//   Triangle               vertices = cycle a,b,c
//   RigidCycle             vertices = cycle u_1..u_k, subset = positions i of edges u_i u_{i+1} in S
//   DegenerateContraction  vertices = u,v,w with uv degenerate; yields vw ~ uw
//   ImplicitFromPath       vertices = u,v,w with uv ~ vw; yields uw ~ uv
//   ProjectionLift         direction, nested (steps in the projection), groups (edges merged per group)
//   CoveringConclusion     sVertices, groups[0] = edges linking S, flats
//   DimBound               groups = one edge list per class, optional sVertices + flats, bound
struct Step {
    StepKind kind = StepKind::Triangle;
    std::vector<std::string> vertices;
    std::vector<int> subset;
    RatVector direction;
    std::vector<Step> nested;
    std::vector<std::vector<LabelPair>> groups;
    std::vector<std::vector<std::string>> flats;
    std::vector<std::string> sVertices;
    int bound = 0;

    bool operator==(const Step&) const = default;
};

struct RuleConfig {
    bool triangles = true;
    bool fourCycles = true;
    bool rigidCycles = true;
    bool degenerate = true;
    bool paths = true;
    bool projections = true;
    int kMax = 6;
    int sMax = 2;
    long cycleBudget = 20000;
    int projectionDepth = 1;
};

struct DeductionState {
    Framework base;
    Framework known;  // base plus discovered implicit edges
    std::vector<int> parent;
    std::vector<Step> log;
    std::map<Edge, int> at;
    std::map<std::string, int> vid;

    explicit DeductionState(const Framework& fw = {}) : base(fw), known(fw) {
        for (int v = 0; v < fw.numVertices(); ++v) vid[fw.ids[v]] = v;
        for (int e = 0; e < fw.numEdges(); ++e) {
            parent.push_back(e);
            at[key(fw.edges[e][0], fw.edges[e][1])] = e;
        }
    }

    static Edge key(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

    int find(int e) {
        while (parent[e] != e) e = parent[e] = parent[parent[e]];
        return e;
    }
    int find(int e) const {
        while (parent[e] != e) e = parent[e];
        return e;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
    int edge(int u, int v) const {
        auto it = at.find(key(u, v));
        return it == at.end() ? -1 : it->second;
    }
    int addEdge(int u, int v) {
        int e = edge(u, v);
        if (e >= 0) return e;
        e = known.numEdges();
        known.edges.push_back({u, v});
        parent.push_back(e);
        at[key(u, v)] = e;
        return e;
    }
    int vertex(const std::string& s) const {
        auto it = vid.find(s);
        return it == vid.end() ? -1 : it->second;
    }
    bool degenerateEdge(int e) const { return known.degenerate(e); }
    int classOf(int e) const { return degenerateEdge(e) ? -1 : find(e); }

    // Non-degenerate known edges grouped by class, ordered by smallest member.
    std::vector<std::vector<int>> classes() const {
        std::map<int, std::vector<int>> m;
        for (int e = 0; e < known.numEdges(); ++e)
            if (!degenerateEdge(e)) m[find(e)].push_back(e);
        std::vector<std::vector<int>> out;
        for (auto& [r, es] : m) out.push_back(es);
        return out;
    }
    int numClasses() const { return static_cast<int>(classes().size()); }

    LabelPair labels(int e) const { return {known.ids[known.edges[e][0]], known.ids[known.edges[e][1]]}; }
};

inline std::size_t rankOf(const std::vector<RatVector>& vs) {
    RatMatrix m;
    for (const auto& v : vs)
        if (!isZero(v)) m.push_back(v);
    return m.empty() ? 0 : rank(m);
}

namespace detail {

inline std::string cycleProblem(const DeductionState& st, const std::vector<int>& cyc) {
    std::set<int> distinct(cyc.begin(), cyc.end());
    if (distinct.size() != cyc.size()) return "cycle repeats a vertex";
    for (std::size_t i = 0; i < cyc.size(); ++i)
        if (st.edge(cyc[i], cyc[(i + 1) % cyc.size()]) < 0) return "cycle uses an unknown edge";
    return "";
}

inline std::vector<RatVector> cycleDirections(const DeductionState& st, const std::vector<int>& cyc) {
    std::vector<RatVector> d;
    for (std::size_t i = 0; i < cyc.size(); ++i) d.push_back(sub(st.known.pts[cyc[(i + 1) % cyc.size()]], st.known.pts[cyc[i]]));
    return d;
}

inline std::string rigidCycleProblem(const DeductionState& st, const std::vector<int>& cyc, const std::vector<int>& S) {
    const int k = static_cast<int>(cyc.size());
    if (k < 3) return "cycle too short";
    std::string why = cycleProblem(st, cyc);
    if (!why.empty()) return why;
    std::set<int> s(S.begin(), S.end());
    if (s.size() != S.size()) return "subset repeats an edge";
    for (int i : S)
        if (i < 0 || i >= k) return "subset index out of range";
    if (static_cast<int>(s.size()) >= k - 1) return "fewer than two edges outside S";
    auto d = cycleDirections(st, cyc);
    std::vector<RatVector> ws;
    for (int i : S) ws.push_back(d[i]);
    const std::size_t rs = rankOf(ws);
    for (int i = 0; i < k; ++i) {
        if (s.count(i)) continue;
        auto w = ws;
        w.push_back(d[i]);
        if (rankOf(w) == rs) return "edge direction lies in W_S";
    }
    if (static_cast<long>(rankOf(d)) - static_cast<long>(rs) != k - static_cast<long>(S.size()) - 1)
        return "dimension condition fails";
    return "";
}

}  // namespace detail

struct ReplayError {
    std::size_t index = 0;
    std::string reason;
};

inline bool flatConnected(const Framework& fw, const std::vector<int>& flat) {
    if (flat.empty()) return false;
    std::set<int> in(flat.begin(), flat.end());
    std::map<int, int> at;
    for (int v : in) at[v] = static_cast<int>(at.size());
    std::vector<int> rep(in.size());
    std::iota(rep.begin(), rep.end(), 0);
    std::function<int(int)> find = [&](int x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };
    int comps = static_cast<int>(in.size());
    for (const auto& e : fw.edges) {
        if (!in.count(e[0]) || !in.count(e[1])) continue;
        int a = find(at[e[0]]), b = find(at[e[1]]);
        if (a != b) {
            rep[a] = b;
            --comps;
        }
    }
    return comps == 1;
}

inline std::vector<RatVector> flatDirection(const Framework& fw, const std::vector<int>& flat) {
    std::vector<RatVector> d;
    for (std::size_t i = 1; i < flat.size(); ++i) d.push_back(sub(fw.pts[flat[i]], fw.pts[flat[0]]));
    return d;
}

// Vertices not pinned by the flats containing them (intersection of directions nonzero).
inline std::vector<int> unpinnedVertices(const Framework& fw, const std::vector<std::vector<int>>& flats) {
    std::vector<std::vector<RatVector>> normals;
    for (const auto& f : flats) {
        RatMatrix dir;
        for (auto& x : flatDirection(fw, f))
            if (!isZero(x)) dir.push_back(x);
        normals.push_back(dir.empty() ? nullspace(RatMatrix{RatVector(fw.dim)}, fw.dim) : nullspace(dir, fw.dim));
    }
    std::vector<int> out;
    for (int v = 0; v < fw.numVertices(); ++v) {
        std::vector<RatVector> all;
        for (std::size_t f = 0; f < flats.size(); ++f)
            if (std::find(flats[f].begin(), flats[f].end(), v) != flats[f].end())
                all.insert(all.end(), normals[f].begin(), normals[f].end());
        if (static_cast<int>(rankOf(all)) != fw.dim) out.push_back(v);
    }
    return out;
}

inline std::string resolveFlats(const DeductionState& st, const std::vector<std::vector<std::string>>& in,
                                std::vector<std::vector<int>>& out) {
    out.clear();
    for (const auto& f : in) {
        std::vector<int> x;
        for (const auto& s : f) {
            int v = st.vertex(s);
            if (v < 0) return "unknown vertex '" + s + "' in flat";
            x.push_back(v);
        }
        std::sort(x.begin(), x.end());
        x.erase(std::unique(x.begin(), x.end()), x.end());
        if (!flatConnected(st.base, x)) return "flat is not connected";
        out.push_back(x);
    }
    return "";
}

// Checks S is linked by the listed edges, each known and either degenerate or in `cls` (a single class).
inline std::string dependentSetProblem(DeductionState& st, const std::vector<int>& S, const std::vector<LabelPair>& links,
                                       std::set<int>* classesUsed = nullptr) {
    if (S.empty()) return "empty dependent set";
    std::set<int> inS(S.begin(), S.end());
    std::set<int> cls;
    std::map<int, int> at;
    for (int v : inS) at[v] = static_cast<int>(at.size());
    std::vector<int> rep(inS.size());
    std::iota(rep.begin(), rep.end(), 0);
    std::function<int(int)> find = [&](int x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };
    int comps = static_cast<int>(inS.size());
    for (const auto& l : links) {
        int u = st.vertex(l[0]), v = st.vertex(l[1]);
        if (u < 0 || v < 0) return "unknown vertex in link";
        int e = st.edge(u, v);
        if (e < 0) return "link " + l[0] + "-" + l[1] + " is not a known edge";
        if (!inS.count(u) || !inS.count(v)) return "link leaves S";
        if (!st.degenerateEdge(e)) cls.insert(st.find(e));
        int a = find(at[u]), b = find(at[v]);
        if (a != b) {
            rep[a] = b;
            --comps;
        }
    }
    if (comps != 1) return "S is not linked";
    if (classesUsed) {
        *classesUsed = cls;
    } else if (cls.size() > 1) {
        return "links span several classes";
    }
    return "";
}

// Validates one step against the current state and applies it. Empty string on success.
inline std::string applyStep(DeductionState& st, const Step& s, const RuleConfig& cfg);

inline std::optional<ReplayError> replay(DeductionState& st, const std::vector<Step>& steps, const RuleConfig& cfg = {}) {
    for (std::size_t i = 0; i < steps.size(); ++i) {
        std::string why = applyStep(st, steps[i], cfg);
        if (!why.empty()) return ReplayError{i, why};
    }
    return std::nullopt;
}

inline std::string applyStep(DeductionState& st, const Step& s, const RuleConfig& cfg) {
    std::vector<int> vs;
    for (const auto& l : s.vertices) {
        int v = st.vertex(l);
        if (v < 0) return "unknown vertex '" + l + "'";
        vs.push_back(v);
    }
    switch (s.kind) {
        case StepKind::Triangle: {
            if (vs.size() != 3) return "triangle needs 3 vertices";
            std::string why = detail::cycleProblem(st, vs);
            if (!why.empty()) return why;
            if (rankOf({sub(st.known.pts[vs[1]], st.known.pts[vs[0]]), sub(st.known.pts[vs[2]], st.known.pts[vs[0]])}) != 2)
                return "not affinely independent";
            st.unite(st.edge(vs[0], vs[1]), st.edge(vs[1], vs[2]));
            st.unite(st.edge(vs[0], vs[1]), st.edge(vs[2], vs[0]));
            return "";
        }
        case StepKind::RigidCycle: {
            std::string why = detail::rigidCycleProblem(st, vs, s.subset);
            if (!why.empty()) return why;
            std::set<int> S(s.subset.begin(), s.subset.end());
            const int k = static_cast<int>(vs.size());
            int first = -1;
            for (int i = 0; i < k; ++i) {
                if (S.count(i)) continue;
                int e = st.edge(vs[i], vs[(i + 1) % k]);
                if (first < 0) first = e;
                st.unite(first, e);
            }
            return "";
        }
        case StepKind::DegenerateContraction: {
            if (vs.size() != 3 || vs[0] == vs[1] || vs[1] == vs[2] || vs[0] == vs[2]) return "needs 3 distinct vertices";
            int uv = st.edge(vs[0], vs[1]), uw = st.edge(vs[0], vs[2]);
            if (uv < 0 || uw < 0) return "uses an unknown edge";
            if (!st.degenerateEdge(uv)) return "edge uv is not degenerate";
            if (st.degenerateEdge(uw)) return "edge uw is degenerate";
            int vw = st.addEdge(vs[1], vs[2]);
            st.unite(uw, vw);
            return "";
        }
        case StepKind::ImplicitFromPath: {
            if (vs.size() != 3 || vs[0] == vs[1] || vs[1] == vs[2] || vs[0] == vs[2]) return "needs 3 distinct vertices";
            int uv = st.edge(vs[0], vs[1]), vw = st.edge(vs[1], vs[2]);
            if (uv < 0 || vw < 0) return "uses an unknown edge";
            if (st.degenerateEdge(uv) || st.degenerateEdge(vw)) return "path edge is degenerate";
            if (st.find(uv) != st.find(vw)) return "path edges are not in one class";
            if (st.known.pts[vs[0]] == st.known.pts[vs[2]]) return "path endpoints coincide";
            int uw = st.addEdge(vs[0], vs[2]);
            st.unite(uv, uw);
            return "";
        }
        case StepKind::ProjectionLift: {
            if (s.direction.size() != static_cast<std::size_t>(st.known.dim) || isZero(s.direction))
                return "projection direction is zero or has wrong length";
            Framework proj = project(st.known, {s.direction});
            DeductionState inner(proj);
            RuleConfig sub = cfg;
            if (auto err = replay(inner, s.nested, sub))
                return "nested step " + std::to_string(err->index) + ": " + err->reason;
            if (s.groups.empty()) return "no groups to lift";
            for (const auto& g : s.groups) {
                if (g.size() < 2) return "group needs two edges";
                int root = -1, first = -1;
                for (const auto& l : g) {
                    int u = st.vertex(l[0]), v = st.vertex(l[1]);
                    int e = (u < 0 || v < 0) ? -1 : st.edge(u, v);
                    if (e < 0) return "group edge " + l[0] + "-" + l[1] + " is not known";
                    int ie = inner.edge(u, v);
                    if (inner.degenerateEdge(ie)) return "group edge " + l[0] + "-" + l[1] + " is parallel to the direction";
                    if (root < 0) root = inner.find(ie);
                    if (inner.find(ie) != root) return "group edges are not in one projected class";
                    if (first < 0) first = e;
                    st.unite(first, e);
                }
            }
            return "";
        }
        case StepKind::CoveringConclusion: {
            std::vector<int> S;
            for (const auto& l : s.sVertices) {
                int v = st.vertex(l);
                if (v < 0) return "unknown vertex '" + l + "' in S";
                S.push_back(v);
            }
            std::sort(S.begin(), S.end());
            S.erase(std::unique(S.begin(), S.end()), S.end());
            if (s.groups.size() != 1) return "conclusion needs one link group";
            std::string why = dependentSetProblem(st, S, s.groups[0]);
            if (!why.empty()) return why;
            std::vector<std::vector<int>> flats;
            why = resolveFlats(st, s.flats, flats);
            if (!why.empty()) return why;
            if (flats.empty()) {
                if (static_cast<int>(S.size()) != st.known.numVertices()) return "no flats and S is not every vertex";
                return "";
            }
            for (const auto& f : flats) {
                bool meets = false;
                for (int v : f) meets = meets || std::binary_search(S.begin(), S.end(), v);
                if (!meets) return "flat misses S";
            }
            auto bad = unpinnedVertices(st.known, flats);
            if (!bad.empty()) return "vertex '" + st.known.ids[bad[0]] + "' is not pinned";
            return "";
        }
        case StepKind::DimBound: {
            if (s.bound != static_cast<int>(s.groups.size())) return "bound differs from the number of classes";
            std::set<int> roots;
            std::vector<LabelPair> all;
            for (const auto& g : s.groups) {
                if (g.empty()) return "empty class group";
                int root = -1;
                for (const auto& l : g) {
                    int u = st.vertex(l[0]), v = st.vertex(l[1]);
                    int e = (u < 0 || v < 0) ? -1 : st.edge(u, v);
                    if (e < 0) return "edge " + l[0] + "-" + l[1] + " is not known";
                    if (st.degenerateEdge(e)) continue;
                    if (root < 0) root = st.find(e);
                    if (st.find(e) != root) return "group mixes classes";
                }
                if (root >= 0 && !roots.insert(root).second) return "two groups share a class";
                all.insert(all.end(), g.begin(), g.end());
            }
            std::vector<int> S;
            if (s.sVertices.empty()) {
                S.resize(st.known.numVertices());
                std::iota(S.begin(), S.end(), 0);
            } else {
                for (const auto& l : s.sVertices) {
                    int v = st.vertex(l);
                    if (v < 0) return "unknown vertex '" + l + "' in S";
                    S.push_back(v);
                }
                std::sort(S.begin(), S.end());
                S.erase(std::unique(S.begin(), S.end()), S.end());
            }
            std::set<int> used;
            std::string why = dependentSetProblem(st, S, all, &used);
            if (!why.empty()) return why;
            if (s.sVertices.empty()) return "";
            std::vector<std::vector<int>> flats;
            why = resolveFlats(st, s.flats, flats);
            if (!why.empty()) return why;
            if (flats.empty()) return "partial S needs covering flats";
            for (const auto& f : flats) {
                bool meets = false;
                for (int v : f) meets = meets || std::binary_search(S.begin(), S.end(), v);
                if (!meets) return "flat misses S";
            }
            auto bad = unpinnedVertices(st.known, flats);
            if (!bad.empty()) return "vertex '" + st.known.ids[bad[0]] + "' is not pinned";
            return "";
        }
    }
    return "unknown step kind";
}

namespace detail {

inline bool tryStep(DeductionState& st, const Step& s, const RuleConfig& cfg) {
    int classesBefore = st.numClasses();
    int edgesBefore = st.known.numEdges();
    DeductionState trial = st;
    if (!applyStep(trial, s, cfg).empty()) return false;
    if (trial.numClasses() == classesBefore && trial.known.numEdges() == edgesBefore) return false;
    trial.log.push_back(s);
    st = std::move(trial);
    return true;
}

inline std::vector<std::vector<int>> neighbours(const DeductionState& st) {
    std::vector<std::vector<int>> nb(st.known.numVertices());
    for (const auto& e : st.known.edges) {
        nb[e[0]].push_back(e[1]);
        nb[e[1]].push_back(e[0]);
    }
    for (auto& x : nb) std::sort(x.begin(), x.end());
    return nb;
}

inline Step cycleStep(const DeductionState& st, StepKind kind, const std::vector<int>& cyc, std::vector<int> S = {}) {
    Step s;
    s.kind = kind;
    for (int v : cyc) s.vertices.push_back(st.known.ids[v]);
    s.subset = std::move(S);
    return s;
}

inline bool allSameClass(const DeductionState& st, const std::vector<int>& es) {
    int r = -2;
    for (int e : es) {
        int c = st.classOf(e);
        if (c < 0) return false;
        if (r == -2) r = c;
        if (c != r) return false;
    }
    return true;
}

inline bool ruleDegenerate(DeductionState& st, const RuleConfig& cfg) {
    bool any = false;
    for (int e = 0; e < st.known.numEdges(); ++e) {
        if (!st.degenerateEdge(e)) continue;
        for (int side = 0; side < 2; ++side) {
            int u = st.known.edges[e][side], v = st.known.edges[e][1 - side];
            auto nb = neighbours(st);
            for (int w : nb[u]) {
                if (w == v) continue;
                int uw = st.edge(u, w);
                if (st.degenerateEdge(uw)) continue;
                int vw = st.edge(v, w);
                if (vw >= 0 && st.classOf(vw) == st.classOf(uw)) continue;
                Step s = cycleStep(st, StepKind::DegenerateContraction, {u, v, w});
                any = tryStep(st, s, cfg) || any;
            }
        }
    }
    return any;
}

inline bool ruleTriangles(DeductionState& st, const RuleConfig& cfg) {
    bool any = false;
    auto nb = neighbours(st);
    for (int u = 0; u < st.known.numVertices(); ++u)
        for (int v : nb[u]) {
            if (v <= u) continue;
            for (int w : nb[v]) {
                if (w <= v || st.edge(u, w) < 0) continue;
                if (allSameClass(st, {st.edge(u, v), st.edge(v, w), st.edge(u, w)})) continue;
                any = tryStep(st, cycleStep(st, StepKind::Triangle, {u, v, w}), cfg) || any;
            }
        }
    return any;
}

inline bool ruleFourCycles(DeductionState& st, const RuleConfig& cfg) {
    bool any = false;
    auto nb = neighbours(st);
    for (int a = 0; a < st.known.numVertices(); ++a)
        for (int b : nb[a]) {
            if (b <= a) continue;
            for (int d : nb[a]) {
                if (d <= b) continue;
                for (int c : nb[b]) {
                    if (c <= a || c == d || st.edge(c, d) < 0) continue;
                    std::vector<int> cyc{a, b, c, d};
                    for (std::vector<int> S : {std::vector<int>{0, 2}, std::vector<int>{1, 3}}) {
                        std::vector<int> merged;
                        for (int i = 0; i < 4; ++i)
                            if (i != S[0] && i != S[1]) merged.push_back(st.edge(cyc[i], cyc[(i + 1) % 4]));
                        if (allSameClass(st, merged)) continue;
                        if (!rigidCycleProblem(st, cyc, S).empty()) continue;
                        any = tryStep(st, cycleStep(st, StepKind::RigidCycle, cyc, S), cfg) || any;
                    }
                }
            }
        }
    return any;
}

inline void subsetsUpTo(int k, int sMax, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) == sMax) return;
        for (int i = start; i < k; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

inline bool ruleRigidCycles(DeductionState& st, const RuleConfig& cfg) {
    bool any = false;
    long budget = cfg.cycleBudget;
    auto nb = neighbours(st);
    const int n = st.known.numVertices();
    std::vector<int> path;
    std::vector<bool> on(n, false);
    std::map<int, std::vector<std::vector<int>>> subsets;
    for (int k = 4; k <= cfg.kMax; ++k) subsetsUpTo(k, cfg.sMax, subsets[k]);
    std::function<void(int)> grow = [&](int s) {
        if (budget <= 0) return;
        int last = path.back();
        const int k = static_cast<int>(path.size());
        if (k >= 4 && path[1] < last && st.edge(last, s) >= 0) {
            --budget;
            std::vector<int> es;
            for (int i = 0; i < k; ++i) es.push_back(st.edge(path[i], path[(i + 1) % k]));
            if (!allSameClass(st, es)) {
                for (const auto& S : subsets[k]) {
                    if (k == 4 && S.size() == 2) continue;
                    std::vector<int> merged;
                    std::set<int> in(S.begin(), S.end());
                    for (int i = 0; i < k; ++i)
                        if (!in.count(i)) merged.push_back(es[i]);
                    if (merged.size() < 2 || allSameClass(st, merged)) continue;
                    if (!rigidCycleProblem(st, path, S).empty()) continue;
                    if (tryStep(st, cycleStep(st, StepKind::RigidCycle, path, S), cfg)) any = true;
                }
            }
        }
        if (k == cfg.kMax) return;
        for (int w : nb[last]) {
            if (w <= s || on[w]) continue;
            on[w] = true;
            path.push_back(w);
            grow(s);
            path.pop_back();
            on[w] = false;
        }
    };
    for (int s = 0; s < n && budget > 0; ++s) {
        path = {s};
        on[s] = true;
        grow(s);
        on[s] = false;
    }
    return any;
}

inline bool rulePaths(DeductionState& st, const RuleConfig& cfg) {
    bool any = false;
    const int n = st.known.numVertices();
    for (int v = 0; v < n; ++v) {
        auto nb = neighbours(st);
        for (int u : nb[v])
            for (int w : nb[v]) {
                if (w <= u) continue;
                int uv = st.edge(u, v), vw = st.edge(v, w);
                if (st.degenerateEdge(uv) || st.degenerateEdge(vw) || st.find(uv) != st.find(vw)) continue;
                if (st.known.pts[u] == st.known.pts[w]) continue;
                int uw = st.edge(u, w);
                if (uw >= 0 && st.classOf(uw) == st.find(uv)) continue;
                any = tryStep(st, cycleStep(st, StepKind::ImplicitFromPath, {u, v, w}), cfg) || any;
            }
    }
    return any;
}

}  // namespace detail

inline DeductionState saturate(const Framework& fw, const RuleConfig& cfg = {});

namespace detail {

inline bool ruleProjections(DeductionState& st, const RuleConfig& cfg) {
    std::set<RatVector> dirs;
    for (int e = 0; e < st.known.numEdges(); ++e)
        if (!st.degenerateEdge(e)) dirs.insert(normalizeFirst(st.known.direction(e)));
    bool any = false;
    for (const auto& d : dirs) {
        if (st.numClasses() <= 1) break;
        Framework proj = project(st.known, {d});
        RuleConfig inner = cfg;
        inner.projectionDepth = cfg.projectionDepth - 1;
        inner.projections = inner.projectionDepth > 0;
        DeductionState sub = saturate(proj, inner);
        std::map<int, std::vector<int>> byClass;
        for (int e = 0; e < st.known.numEdges(); ++e)
            if (!sub.degenerateEdge(e)) byClass[sub.find(e)].push_back(e);
        Step s;
        s.kind = StepKind::ProjectionLift;
        s.direction = d;
        s.nested = sub.log;
        for (auto& [r, es] : byClass) {
            std::set<int> outer;
            for (int e : es) outer.insert(st.classOf(e));
            if (outer.size() < 2) continue;
            std::vector<LabelPair> g;
            for (int e : es) g.push_back(st.labels(e));
            s.groups.push_back(g);
        }
        if (s.groups.empty()) continue;
        any = tryStep(st, s, cfg) || any;
    }
    return any;
}

}  // namespace detail

inline DeductionState saturate(const Framework& fw, const RuleConfig& cfg) {
    DeductionState st(fw);
    for (;;) {
        bool changed = true;
        while (changed) {
            if (st.numClasses() <= 1) return st;
            changed = false;
            if (cfg.degenerate) changed = detail::ruleDegenerate(st, cfg) || changed;
            if (cfg.triangles) changed = detail::ruleTriangles(st, cfg) || changed;
            if (cfg.fourCycles) changed = detail::ruleFourCycles(st, cfg) || changed;
        }
        if (st.numClasses() <= 1) return st;
        if (cfg.rigidCycles && detail::ruleRigidCycles(st, cfg)) continue;
        if (cfg.paths && detail::rulePaths(st, cfg)) continue;
        if (cfg.projections && cfg.projectionDepth > 0 && detail::ruleProjections(st, cfg)) continue;
        return st;
    }
}

struct Conclusion {
    bool indecomposable = false;
    std::optional<Step> step;
};

inline std::vector<std::vector<std::string>> flatLabels(const Framework& fw, const std::vector<std::vector<int>>& flats) {
    std::vector<std::vector<std::string>> out;
    for (const auto& f : flats) {
        std::vector<std::string> x;
        for (int v : f) x.push_back(fw.ids[v]);
        out.push_back(x);
    }
    return out;
}

namespace detail {

// Components of the graph on edges `es` plus all degenerate known edges, each with the edges inside it.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> linkedComponents(const DeductionState& st,
                                                                                    const std::vector<int>& es) {
    const int n = st.known.numVertices();
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    std::function<int(int)> find = [&](int x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };
    std::vector<int> use = es;
    for (int e = 0; e < st.known.numEdges(); ++e)
        if (st.degenerateEdge(e)) use.push_back(e);
    std::vector<bool> touched(n, false);
    for (int e : use) {
        int a = st.known.edges[e][0], b = st.known.edges[e][1];
        touched[a] = touched[b] = true;
        rep[find(a)] = find(b);
    }
    std::map<int, std::pair<std::vector<int>, std::vector<int>>> m;
    for (int v = 0; v < n; ++v)
        if (touched[v] || n == 1) m[find(v)].first.push_back(v);
    for (int e : use) m[find(st.known.edges[e][0])].second.push_back(e);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (auto& [r, c] : m) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// flats: vertex-index sets of the base framework; empty means only S = V may conclude.
inline Conclusion concludeIndecomposable(DeductionState& st, const std::vector<std::vector<int>>& flats) {
    Conclusion c;
    for (const auto& f : flats)
        if (!flatConnected(st.base, f)) throw InputError("flat is not connected");
    auto classes = st.classes();
    if (classes.empty()) classes.push_back({});
    const int n = st.known.numVertices();
    for (const auto& cls : classes) {
        for (const auto& [S, es] : detail::linkedComponents(st, cls)) {
            Step s;
            s.kind = StepKind::CoveringConclusion;
            for (int v : S) s.sVertices.push_back(st.known.ids[v]);
            std::vector<LabelPair> links;
            for (int e : es) links.push_back(st.labels(e));
            s.groups.push_back(links);
            if (static_cast<int>(S.size()) != n) s.flats = flatLabels(st.known, flats);
            if (static_cast<int>(S.size()) != n && flats.empty()) continue;
            DeductionState trial = st;
            if (!applyStep(trial, s, {}).empty()) continue;
            st.log.push_back(s);
            c.indecomposable = true;
            c.step = s;
            return c;
        }
    }
    return c;
}

struct BoundResult {
    std::optional<int> bound;  // empty means no finite bound was certified
    std::optional<Step> step;
};

inline BoundResult dimUpperBound(DeductionState& st, const std::vector<std::vector<int>>& flats = {}, long budget = 20000) {
    BoundResult r;
    auto classes = st.classes();
    const int n = st.known.numVertices();
    if (n <= 1) {
        r.bound = n == 1 ? 1 : 0;
        return r;
    }
    const int k = static_cast<int>(classes.size());
    for (int size = 1; size <= k; ++size) {
        std::vector<int> pick;
        std::optional<Step> found;
        std::function<void(int)> rec = [&](int start) {
            if (found || budget <= 0) return;
            if (static_cast<int>(pick.size()) == size) {
                --budget;
                std::vector<int> es;
                for (int i : pick) es.insert(es.end(), classes[i].begin(), classes[i].end());
                for (const auto& [S, used] : detail::linkedComponents(st, es)) {
                    bool whole = static_cast<int>(S.size()) == n;
                    if (!whole && flats.empty()) continue;
                    Step s;
                    s.kind = StepKind::DimBound;
                    s.bound = size;
                    for (int i : pick) {
                        std::vector<LabelPair> g;
                        for (int e : classes[i]) g.push_back(st.labels(e));
                        s.groups.push_back(g);
                    }
                    // degenerate links go with the first group
                    for (int e : used)
                        if (st.degenerateEdge(e)) s.groups[0].push_back(st.labels(e));
                    if (!whole) {
                        for (int v : S) s.sVertices.push_back(st.known.ids[v]);
                        s.flats = flatLabels(st.known, flats);
                    }
                    DeductionState trial = st;
                    if (!applyStep(trial, s, {}).empty()) continue;
                    found = s;
                    return;
                }
                return;
            }
            for (int i = start; i < k; ++i) {
                pick.push_back(i);
                rec(i + 1);
                pick.pop_back();
            }
        };
        rec(0);
        if (found) {
            st.log.push_back(*found);
            r.bound = size;
            r.step = found;
            return r;
        }
    }
    return r;
}

struct VerifyResult {
    bool ok = true;
    std::size_t index = 0;
    std::string reason;
};

inline VerifyResult verifyCertificate(const Framework& fw, const std::vector<Step>& steps, const RuleConfig& cfg = {}) {
    DeductionState st(fw);
    VerifyResult v;
    if (auto err = replay(st, steps, cfg)) {
        v.ok = false;
        v.index = err->index;
        v.reason = err->reason;
    }
    return v;
}

// Pairs merged by the state that the oracle does not consider dependent.
inline std::vector<std::pair<int, int>> soundnessViolations(const DeductionState& st) {
    DeformationSpace ds = deformationSpace(st.base);
    auto part = dependencyPartition(st.base, ds);
    std::vector<std::pair<int, int>> bad;
    std::map<int, int> firstOf;
    for (int e = 0; e < st.base.numEdges(); ++e) {
        if (st.base.degenerate(e)) continue;
        int r = st.find(e);
        auto it = firstOf.find(r);
        if (it == firstOf.end()) {
            firstOf[r] = e;
            continue;
        }
        if (part.blockOf(e) != part.blockOf(it->second)) bad.push_back({it->second, e});
    }
    return bad;
}

}  // namespace mdc
