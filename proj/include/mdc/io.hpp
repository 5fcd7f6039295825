#pragma once

#include "mdc/deduction.hpp"
#include "mdc/framework.hpp"
#include "mdc/polytope.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace mdc {

using json = nlohmann::json;

inline json toJson(const RatVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(toString(x));
    return a;
}

inline RatVector ratVectorFromJson(const json& j) {
    if (!j.is_array()) throw InputError("expected an array of rationals");
    RatVector v;
    for (const auto& x : j) {
        if (x.is_string()) v.push_back(parseRational(x.get<std::string>()));
        else if (x.is_number_integer()) v.emplace_back(x.get<long>());
        else throw InputError("rationals must be strings \"p/q\" or integers");
    }
    return v;
}

inline json verticesJson(const std::vector<std::string>& ids, const std::vector<RatVector>& pts) {
    json vs = json::array();
    for (std::size_t i = 0; i < ids.size(); ++i) vs.push_back({{"id", ids[i]}, {"coords", toJson(pts[i])}});
    return vs;
}

inline json toJson(const Framework& fw) {
    json j;
    j["dim"] = fw.dim;
    j["vertices"] = verticesJson(fw.ids, fw.pts);
    json es = json::array();
    for (const auto& e : fw.edges) es.push_back({fw.ids[e[0]], fw.ids[e[1]]});
    j["edges"] = es;
    return j;
}

inline json toJson(const PolytopeV& p) {
    json j;
    j["dim"] = p.dim;
    j["vertices"] = verticesJson(p.ids, p.verts);
    return j;
}

namespace detail {

inline void readVertices(const json& j, int& dim, std::vector<std::string>& ids, std::vector<RatVector>& pts) {
    if (!j.is_object()) throw InputError("malformed file: top level must be an object");
    if (!j.contains("dim") || !j["dim"].is_number_integer()) throw InputError("malformed file: missing integer 'dim'");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw InputError("malformed file: missing 'vertices' array");
    dim = j["dim"].get<int>();
    if (dim < 0) throw InputError("malformed file: negative dimension");
    for (const auto& v : j["vertices"]) {
        if (!v.is_object() || !v.contains("id") || !v["id"].is_string() || !v.contains("coords"))
            throw InputError("malformed file: vertex needs 'id' and 'coords'");
        ids.push_back(v["id"].get<std::string>());
        pts.push_back(ratVectorFromJson(v["coords"]));
    }
}

}  // namespace detail

inline Framework frameworkFromJson(const json& j) {
    FrameworkSpec s;
    detail::readVertices(j, s.dim, s.ids, s.coords);
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw InputError("malformed file: edge must be a pair of labels");
            s.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    }
    return build(s);
}

inline PolytopeV polytopeFromJson(const json& j, bool checkVertices = true) {
    int dim = 0;
    std::vector<std::string> ids;
    std::vector<RatVector> pts;
    detail::readVertices(j, dim, ids, pts);
    FrameworkSpec s{dim, ids, pts, {}};
    auto v = validate(s);
    if (!v.empty()) throw InputError(v.front());
    return makePolytope(dim, std::move(ids), std::move(pts), checkVertices);
}

inline bool hasEdges(const json& j) { return j.is_object() && j.contains("edges"); }

inline json readJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed file: ") + e.what());
    }
}

inline void writeJsonFile(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

// Certificate schema:
//   {"format": "mdc-certificate", "version": 1, "steps": [step...]}
//   step = {"kind": name, and only the non-empty fields of
//           "vertices": [label], "subset": [int], "direction": [rational],
//           "nested": [step], "groups": [[[u, v]]], "flats": [[label]], "s": [label], "bound": int}
inline json toJson(const Step& s) {
    json j;
    j["kind"] = kindName(s.kind);
    if (!s.vertices.empty()) j["vertices"] = s.vertices;
    if (!s.subset.empty()) j["subset"] = s.subset;
    if (!s.direction.empty()) j["direction"] = toJson(s.direction);
    if (!s.nested.empty()) {
        json n = json::array();
        for (const auto& x : s.nested) n.push_back(toJson(x));
        j["nested"] = n;
    }
    if (!s.groups.empty()) {
        json g = json::array();
        for (const auto& grp : s.groups) {
            json a = json::array();
            for (const auto& p : grp) a.push_back({p[0], p[1]});
            g.push_back(a);
        }
        j["groups"] = g;
    }
    if (!s.flats.empty()) j["flats"] = s.flats;
    if (!s.sVertices.empty()) j["s"] = s.sVertices;
    if (s.bound != 0) j["bound"] = s.bound;
    return j;
}

inline Step stepFromJson(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InputError("malformed certificate: step without 'kind'");
    Step s;
    s.kind = kindFromName(j["kind"].get<std::string>());
    try {
        if (j.contains("vertices")) s.vertices = j["vertices"].get<std::vector<std::string>>();
        if (j.contains("subset")) s.subset = j["subset"].get<std::vector<int>>();
        if (j.contains("direction")) s.direction = ratVectorFromJson(j["direction"]);
        if (j.contains("nested"))
            for (const auto& x : j["nested"]) s.nested.push_back(stepFromJson(x));
        if (j.contains("groups"))
            for (const auto& grp : j["groups"]) {
                std::vector<LabelPair> g;
                for (const auto& p : grp) {
                    if (!p.is_array() || p.size() != 2) throw InputError("malformed certificate: group entry");
                    g.push_back({p[0].get<std::string>(), p[1].get<std::string>()});
                }
                s.groups.push_back(g);
            }
        if (j.contains("flats")) s.flats = j["flats"].get<std::vector<std::vector<std::string>>>();
        if (j.contains("s")) s.sVertices = j["s"].get<std::vector<std::string>>();
        if (j.contains("bound")) s.bound = j["bound"].get<int>();
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed certificate: ") + e.what());
    }
    return s;
}

inline json certificateJson(const std::vector<Step>& steps) {
    json j;
    j["format"] = "mdc-certificate";
    j["version"] = 1;
    json a = json::array();
    for (const auto& s : steps) a.push_back(toJson(s));
    j["steps"] = a;
    return j;
}

inline std::vector<Step> certificateFromJson(const json& j) {
    if (!j.is_object() || j.value("format", "") != "mdc-certificate")
        throw InputError("malformed certificate: wrong or missing 'format'");
    if (!j.contains("steps") || !j["steps"].is_array()) throw InputError("malformed certificate: missing 'steps'");
    std::vector<Step> out;
    for (const auto& s : j["steps"]) out.push_back(stepFromJson(s));
    return out;
}

}  // namespace mdc
