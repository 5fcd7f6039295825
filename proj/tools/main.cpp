#include "mdc/io.hpp"
#include "mdc/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

using namespace mdc;

namespace {

struct Options {
    bool json = false;
    bool timing = false;
    bool seedless = true;
    int maxRaysDim = 12;
    int maxVertices = 5000;
};

struct Input {
    Framework fw;
    std::optional<PolytopeV> polytope;
};

Input load(const std::string& path, const Options& o) {
    json j = readJsonFile(path);
    Input in;
    if (hasEdges(j)) {
        in.fw = frameworkFromJson(j);
    } else {
        in.polytope = polytopeFromJson(j);
        if (in.polytope->numVertices() > o.maxVertices)
            throw ResourceError("vertex guard: " + std::to_string(in.polytope->numVertices()) + " vertices exceeds " +
                                std::to_string(o.maxVertices));
        in.fw = frameworkOf(*in.polytope);
    }
    if (in.fw.numVertices() > o.maxVertices)
        throw ResourceError("vertex guard: " + std::to_string(in.fw.numVertices()) + " vertices exceeds " +
                            std::to_string(o.maxVertices));
    return in;
}

json blocksJson(const Framework& fw, const DependencyPartition& part) {
    json a = json::array();
    for (const auto& b : part.blocks) {
        json blk = json::array();
        for (int e : b) blk.push_back({fw.ids[fw.edges[e][0]], fw.ids[fw.edges[e][1]]});
        a.push_back(blk);
    }
    return a;
}

int analyze(const std::string& file, bool rays, bool deps, const Options& o) {
    auto t0 = std::chrono::steady_clock::now();
    Input in = load(file, o);
    DeformationSpace ds = deformationSpace(in.fw);
    json r;
    r["input"] = file;
    r["vertices"] = in.fw.numVertices();
    r["edges"] = in.fw.numEdges();
    r["dcDimension"] = ds.dim();
    r["indecomposable"] = isIndecomposable(in.fw);
    if (in.polytope && affineDim(in.polytope->verts) >= 1) r["fVector"] = fVectorLP(*in.polytope);
    auto part = dependencyPartition(in.fw, ds);
    r["blocks"] = part.blocks.size();
    if (deps) r["dependencyBlocks"] = blocksJson(in.fw, part);
    if (rays) {
        Cone c = enumerateRays(ds, RayGuard{1 << 20, o.maxRaysDim});
        json a = json::array();
        for (const auto& x : c.rays) a.push_back(toJson(x));
        r["rays"] = a;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.timing) r["seconds"] = secs;
    if (o.json) {
        std::cout << r.dump(2) << "\n";
        return 0;
    }
    std::cout << "input: " << file << "\n";
    std::cout << "vertices: " << in.fw.numVertices() << "  edges: " << in.fw.numEdges() << "\n";
    if (r.contains("fVector")) {
        std::cout << "f-vector:";
        for (auto x : r["fVector"]) std::cout << " " << x.get<long>();
        std::cout << "\n";
    }
    std::cout << "dcDimension: " << ds.dim() << "\n";
    std::cout << (r["indecomposable"].get<bool>() ? "indecomposable" : "decomposable") << "\n";
    std::cout << "dependency blocks: " << part.blocks.size() << "\n";
    if (deps)
        for (const auto& b : r["dependencyBlocks"]) {
            std::cout << "  {";
            bool first = true;
            for (const auto& e : b) {
                std::cout << (first ? "" : ", ") << e[0].get<std::string>() << e[1].get<std::string>();
                first = false;
            }
            std::cout << "}\n";
        }
    if (rays) {
        std::cout << "rays: " << r["rays"].size() << "\n";
        for (const auto& x : r["rays"]) {
            std::cout << " ";
            for (const auto& y : x) std::cout << " " << y.get<std::string>();
            std::cout << "\n";
        }
    }
    if (o.timing) std::cout << "time: " << secs << " s\n";
    return 0;
}

int oracle(const std::string& file, const Options& o) {
    Input in = load(file, o);
    int dc = dcDimension(in.fw);
    bool indec = isIndecomposable(in.fw);
    if (o.json) {
        std::cout << json{{"input", file}, {"dcDimension", dc}, {"indecomposable", indec}}.dump(2) << "\n";
    } else {
        std::cout << (indec ? "indecomposable" : "decomposable") << ", dcDimension " << dc << "\n";
    }
    return 0;
}

int certifyCmd(const std::string& file, const std::string& flatsMode, const std::string& out, const Options& o) {
    Input in = load(file, o);
    DeductionState st = saturate(in.fw);
    std::vector<std::vector<int>> flats;
    if (flatsMode == "facets") {
        if (!in.polytope) throw InputError("--flats facets needs a polytope file");
        flats = report::facetFlats(*in.polytope);
    } else if (flatsMode != "none") {
        throw InputError("unknown --flats value '" + flatsMode + "'");
    }
    auto concl = concludeIndecomposable(st, flats);
    std::optional<int> bound;
    if (!concl.indecomposable) bound = dimUpperBound(st, flats).bound;
    json cert = certificateJson(st.log);
    if (!out.empty()) writeJsonFile(out, cert);
    json r{{"input", file},
           {"classes", st.numClasses()},
           {"steps", st.log.size()},
           {"indecomposable", concl.indecomposable}};
    if (bound) r["dimUpperBound"] = *bound;
    if (o.json) {
        if (out.empty()) r["certificate"] = cert;
        std::cout << r.dump(2) << "\n";
        return 0;
    }
    std::cout << "classes: " << st.numClasses() << "  steps: " << st.log.size() << "\n";
    if (concl.indecomposable) std::cout << "proved indecomposable\n";
    else if (bound) std::cout << "no proof; dcDimension <= " << *bound << "\n";
    else std::cout << "no proof and no bound\n";
    if (out.empty()) std::cout << cert.dump(2) << "\n";
    else std::cout << "certificate written to " << out << "\n";
    return 0;
}

int verifyCmd(const std::string& file, const std::string& certFile, const Options& o) {
    Input in = load(file, o);
    auto steps = certificateFromJson(readJsonFile(certFile));
    auto v = verifyCertificate(in.fw, steps);
    if (o.json) {
        json r{{"ok", v.ok}};
        if (!v.ok) {
            r["index"] = v.index;
            r["reason"] = v.reason;
        }
        std::cout << r.dump(2) << "\n";
    } else if (v.ok) {
        std::cout << "certificate ok (" << steps.size() << " steps)\n";
    } else {
        std::cout << "certificate invalid at step " << v.index << ": " << v.reason << "\n";
    }
    return v.ok ? 0 : 1;
}

std::vector<RatVector> parseGenerators(const std::string& s) {
    std::vector<RatVector> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        RatVector v;
        std::stringstream is(item);
        std::string x;
        while (std::getline(is, x, ',')) v.push_back(parseRational(x));
        if (!v.empty()) out.push_back(v);
    }
    if (out.empty()) throw InputError("no generators given");
    for (const auto& v : out)
        if (v.size() != out[0].size()) throw InputError("generators have mixed dimensions");
    return out;
}

int labelIndex(const PolytopeV& p, const std::string& l) {
    for (int i = 0; i < p.numVertices(); ++i)
        if (p.ids[i] == l) return i;
    throw InputError("unknown vertex '" + l + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mdc: Minkowski decomposability and deformation cones"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_flag("--timing", o.timing, "report wall-clock time");
    app.add_flag("--seedless", o.seedless, "deterministic mode (the only mode)");
    app.add_option("--max-rays-dim", o.maxRaysDim, "largest deformation space for ray enumeration");
    app.add_option("--max-vertices", o.maxVertices, "largest accepted input");

    std::string file, certFile, out, flatsMode = "facets";
    bool rays = false, deps = false;

    auto* an = app.add_subcommand("analyze", "deformation cone of a framework or polytope file");
    an->add_option("file", file)->required();
    an->add_flag("--rays", rays);
    an->add_flag("--deps", deps);

    auto* ce = app.add_subcommand("certify", "run the deduction engine and write a certificate");
    ce->add_option("file", file)->required();
    ce->add_option("--flats", flatsMode, "facets or none");
    ce->add_option("-o,--output", out);

    auto* ve = app.add_subcommand("verify", "replay a certificate");
    ve->add_option("file", file)->required();
    ve->add_option("certificate", certFile)->required();

    auto* orc = app.add_subcommand("oracle", "ground-truth verdict only");
    orc->add_option("file", file)->required();

    auto* co = app.add_subcommand("construct", "build a polytope family");
    std::string family, generators, kindStr = "P", sideStr = "min", input, inputB, name;
    int n = 1, m = 1, k = 1, coord = 1;
    std::vector<std::string> uniform, facetsArg, verticesArg;
    std::vector<int> graphic;
    co->add_option("family", family, "zonotope|bipartite-trunc|wedge|matroid|product|hyperorder|stack|truncate|corpus")
        ->required();
    co->add_option("-o,--output", out)->required();
    co->add_option("--generators", generators, "\"1,0,0;0,1,0\"");
    co->add_option("--n", n);
    co->add_option("--m", m);
    co->add_option("--k", k);
    co->add_option("--kind", kindStr, "P, Q or Z");
    co->add_option("--input", input);
    co->add_option("--other", inputB);
    co->add_option("--coordinate", coord, "1-based");
    co->add_option("--side", sideStr, "min or max");
    co->add_option("--uniform", uniform, "k,n (repeatable, summed)");
    co->add_option("--graphic-complete", graphic, "N (repeatable, summed)");
    co->add_option("--facet", facetsArg, "comma-separated vertex labels (repeatable)");
    co->add_option("--vertex", verticesArg, "vertex label (repeatable)");
    co->add_option("--name", name, "corpus fixture");

    auto* rp = app.add_subcommand("report", "reproduce the acceptance table");
    std::string what;
    rp->add_option("what", what)->required()->check(CLI::IsMember({"paper"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*an) return analyze(file, rays, deps, o);
        if (*orc) return oracle(file, o);
        if (*ce) return certifyCmd(file, flatsMode, out, o);
        if (*ve) return verifyCmd(file, certFile, o);
        if (*rp) {
            bool ok = true;
            for (const auto& c : runAcceptance()) {
                std::cout << criterionLine(c) << "\n";
                ok = ok && c.pass();
            }
            return ok ? 0 : 1;
        }
        if (*co) {
            auto loadP = [&](const std::string& f) {
                if (f.empty()) throw InputError("--input is required for " + family);
                return polytopeFromJson(readJsonFile(f));
            };
            PolytopeV p;
            if (family == "zonotope") {
                p = zonotope(parseGenerators(generators));
            } else if (family == "bipartite-trunc") {
                if (kindStr == "Z") p = graphicalZonotope(completeBipartite(n, m));
                else if (kindStr == "P" || kindStr == "Q")
                    p = bipartiteTruncation(n, m, kindStr == "P" ? TruncKind::P : TruncKind::Q);
                else throw InputError("--kind must be P, Q or Z");
            } else if (family == "wedge") {
                if (sideStr != "min" && sideStr != "max") throw InputError("--side must be min or max");
                p = permutahedralWedge(loadP(input), coord, sideStr == "min" ? WedgeSide::Min : WedgeSide::Max);
            } else if (family == "matroid") {
                std::optional<MatroidBases> mb;
                auto add = [&](const MatroidBases& x) { mb = mb ? directSum(*mb, x) : x; };
                for (const auto& u : uniform) {
                    auto c = u.find(',');
                    if (c == std::string::npos) throw InputError("--uniform expects k,n");
                    add(uniformMatroid(std::stoi(u.substr(0, c)), std::stoi(u.substr(c + 1))));
                }
                for (int g : graphic) add(graphicMatroid(completeGraph(g)));
                if (!mb) throw InputError("matroid needs --uniform or --graphic-complete");
                p = matroidPolytope(*mb).polytope;
            } else if (family == "product") {
                if (inputB.empty()) throw InputError("--other is required for product");
                p = productPolytope(loadP(input), loadP(inputB));
            } else if (family == "hyperorder") {
                p = hyperorderPolytope(n, k);
            } else if (family == "stack") {
                PolytopeV base = loadP(input);
                std::vector<std::vector<std::string>> fs;
                for (const auto& f : facetsArg) {
                    std::vector<std::string> labels;
                    std::stringstream ss(f);
                    std::string x;
                    while (std::getline(ss, x, ',')) labels.push_back(x);
                    fs.push_back(labels);
                }
                auto r = stackVertex(base, fs);
                p = r.polytope;
            } else if (family == "truncate") {
                PolytopeV base = loadP(input);
                std::vector<int> X;
                for (const auto& l : verticesArg) X.push_back(labelIndex(base, l));
                p = deepTruncate(base, X).polytope;
            } else if (family == "corpus") {
                auto c = corpus();
                auto it = c.find(name);
                if (it == c.end()) throw InputError("unknown corpus fixture '" + name + "'");
                p = it->second.polytope;
            } else {
                throw InputError("unknown family '" + family + "'");
            }
            writeJsonFile(out, toJson(p));
            if (!o.json) std::cout << family << ": " << p.numVertices() << " vertices written to " << out << "\n";
            return 0;
        }
    } catch (const ResourceError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
