// hypersurf: generators, checkers, builders, and audits for tight
// connectivity and spanning surfaces in 3-uniform hypergraphs.
//
// Exit codes: 0 success / property holds, 1 property fails, 2 usage or
// parse error, 3 resource budget exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypersurf/constructions.hpp"
#include "hypersurf/cover.hpp"
#include "hypersurf/error.hpp"
#include "hypersurf/framework.hpp"
#include "hypersurf/io.hpp"
#include "hypersurf/oracle.hpp"
#include "hypersurf/sphere_builder.hpp"

using nlohmann::json;
using namespace hypersurf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

int defaultThreads() {
    if (const char* env = std::getenv("HYPERSURF_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

std::vector<int> parseSizes(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw ParameterError("--sizes needs a comma-separated list of positive integers");
    return out;
}

std::string partsMetadata(const PartitionedGraph& pg) {
    std::string s;
    for (const auto& [name, range] : pg.parts) {
        if (!s.empty()) s += " ";
        s += name + "=[" + std::to_string(range.first) + "," + std::to_string(range.second) + ")";
    }
    return s;
}

std::string sizesMetadata(const std::vector<int>& sizes) {
    std::string s;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(sizes[i]);
    }
    return s;
}

void emitReport(const json& j, bool asJson, std::ostream& out) {
    if (asJson) {
        out << j.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : j.items()) {
        if (value.is_array()) {
            int i = 0;
            for (const auto& item : value) {
                out << key << " " << i++ << ":";
                if (item.is_object()) {
                    for (const auto& [k2, v2] : item.items())
                        out << " " << k2 << "=" << (v2.is_string() ? v2.get<std::string>() : v2.dump());
                } else {
                    out << " " << item.dump();
                }
                out << "\n";
            }
        } else if (value.is_string()) {
            out << key << ": " << value.get<std::string>() << "\n";
        } else {
            out << key << ": " << value.dump() << "\n";
        }
    }
}

struct GenOptions {
    std::string name;
    int n = 0;
    int k = 3;
    int g = 0;
    int ell = 0;
    int xSize = -1;
    int zSize = 1;
    std::string sizes;
    std::string fixtureName;
    std::string output;
    std::string hostOutput;
};

int runGen(const GenOptions& opt) {
    auto writeGraph = [&](const Hypergraph& g, std::vector<std::pair<std::string, std::string>> meta) {
        if (opt.output.empty())
            write_hypergraph(std::cout, g, meta);
        else
            write_hypergraph_file(opt.output, g, meta);
    };

    if (opt.name == "fig1") {
        PartitionedGraph pg = fig1(opt.n, opt.xSize, opt.zSize);
        writeGraph(pg.graph, {{"generator", "fig1 n=" + std::to_string(opt.n) + " xSize=" +
                                                std::to_string(pg.params.at("xSize")) + " zSize=" +
                                                std::to_string(pg.params.at("zSize"))},
                              {"parts", partsMetadata(pg)}});
    } else if (opt.name == "surface-lower-bound") {
        PartitionedGraph pg = surface_lower_bound(opt.n, opt.g);
        writeGraph(pg.graph, {{"generator", "surface-lower-bound n=" + std::to_string(opt.n) +
                                                " g=" + std::to_string(opt.g)},
                              {"parts", partsMetadata(pg)}});
    } else if (opt.name == "kgraph-lower-bound") {
        PartitionedGraph pg = kgraph_lower_bound(opt.n, opt.k);
        writeGraph(pg.graph, {{"generator", "kgraph-lower-bound n=" + std::to_string(opt.n) +
                                                " k=" + std::to_string(opt.k)},
                              {"parts", partsMetadata(pg)}});
    } else if (opt.name == "kpartite") {
        std::vector<int> sizes = parseSizes(opt.sizes);
        BlowUp b = complete_kpartite(static_cast<int>(sizes.size()), sizes);
        writeGraph(b.result, {{"generator", "kpartite"}, {"cluster-sizes", sizesMetadata(sizes)}});
    } else if (opt.name == "path-blowup") {
        std::vector<int> sizes = parseSizes(opt.sizes);
        BlowUp b = path_blowup(opt.k, static_cast<int>(sizes.size()), sizes);
        writeGraph(b.result, {{"generator", "path-blowup k=" + std::to_string(opt.k)},
                              {"cluster-sizes", sizesMetadata(sizes)}});
    } else if (opt.name == "cycle-blowup") {
        std::vector<int> sizes = parseSizes(opt.sizes);
        BlowUp b = cycle_blowup(opt.k, static_cast<int>(sizes.size()), sizes);
        writeGraph(b.result, {{"generator", "cycle-blowup k=" + std::to_string(opt.k)},
                              {"cluster-sizes", sizesMetadata(sizes)}});
    } else if (opt.name == "tight-path") {
        writeGraph(tight_path(opt.k, opt.ell),
                   {{"generator", "tight-path k=" + std::to_string(opt.k) + " ell=" + std::to_string(opt.ell)}});
    } else if (opt.name == "tight-cycle") {
        writeGraph(tight_cycle(opt.k, opt.n),
                   {{"generator", "tight-cycle k=" + std::to_string(opt.k) + " n=" + std::to_string(opt.n)}});
    } else if (opt.name == "fixture") {
        FixtureName which;
        if (opt.fixtureName == "T9")
            which = FixtureName::T9;
        else if (opt.fixtureName == "P12")
            which = FixtureName::P12;
        else
            throw ParameterError("--name must be T9 or P12");
        const Fixture& fx = fixture(which);
        std::vector<std::pair<std::string, std::string>> meta{
            {"generator", "fixture " + opt.fixtureName},
            {"host-cluster-sizes", sizesMetadata(fx.host.sizes)}};
        if (opt.output.empty())
            write_surface(std::cout, fx.surface, meta);
        else
            write_surface_file(opt.output, fx.surface, meta);
        if (!opt.hostOutput.empty())
            write_hypergraph_file(opt.hostOutput, fx.host.result,
                                  {{"generator", "fixture-host " + opt.fixtureName},
                                   {"cluster-sizes", sizesMetadata(fx.host.sizes)}});
    } else {
        throw ParameterError("unknown generator " + opt.name);
    }
    return kExitOk;
}

json componentsToJson(const Hypergraph& g, const ComponentDecomposition& comps) {
    json parts = json::array();
    for (std::size_t p = 0; p < comps.parts.size(); ++p)
        parts.push_back({{"edges", comps.parts[p].size()}, {"vertices", comps.vertexSets[p].size()}});
    return json{{"k", g.uniformity()},
                {"n", g.vertexCount()},
                {"edges", g.edgeCount()},
                {"components", comps.parts.size()},
                {"spanning", comps.spanningPartIndex.has_value()},
                {"spanning_index", comps.spanningPartIndex ? json(*comps.spanningPartIndex) : json(nullptr)},
                {"parts", parts}};
}

int runClassify(const std::string& file, bool asJson, const std::string& expectKind, int expectGenus) {
    Surface2 s = read_surface_file(file);
    SurfaceClass cls = classify_surface(s);
    json rep{{"kind", to_string(cls.kind)},
             {"genus", cls.genus},
             {"chi", cls.euler},
             {"v", s.supportVertices().size()},
             {"e", s.edgeFaceIncidence().size()},
             {"f", s.faceCount()}};
    emitReport(rep, asJson, std::cout);
    if (cls.kind == SurfaceKind::NotAClosedSurface) return kExitPropertyFails;
    if (!expectKind.empty() && to_string(cls.kind) != expectKind) return kExitPropertyFails;
    if (expectGenus >= 0 && cls.genus != expectGenus) return kExitPropertyFails;
    return kExitOk;
}

int runBuildSphere(int n, const std::string& outPrefix, bool asJson) {
    builder::EmbeddedSurface emb = builder::build_spanning_sphere(3, n);
    SurfaceClass cls = classify_surface(emb.surface);
    bool spanning = is_spanning_in_blowup(surface_as_hypergraph(emb.surface), emb.host);
    if (!outPrefix.empty()) {
        write_surface_file(outPrefix + ".surf", emb.surface,
                           {{"generator", "build-sphere n=" + std::to_string(n)}});
        write_hypergraph_file(outPrefix + ".host.hg", emb.host.result,
                              {{"generator", "build-sphere-host n=" + std::to_string(n)},
                               {"cluster-sizes", sizesMetadata(emb.host.sizes)}});
    }
    json rep{{"kind", to_string(cls.kind)},
             {"n", emb.surface.vertexCount()},
             {"faces", emb.surface.faceCount()},
             {"max_cluster", emb.host.maxClusterSize()},
             {"spanning", spanning},
             {"doubly_edge_covering", emb.cover.has_value()}};
    emitReport(rep, asJson, std::cout);
    return spanning && cls.kind == SurfaceKind::Sphere ? kExitOk : kExitPropertyFails;
}

int runBuildSurface(const std::string& kindName, int genus, int n, const std::string& outPrefix, bool asJson) {
    SurfaceKind kind;
    if (kindName == "sphere")
        kind = SurfaceKind::Sphere;
    else if (kindName == "orientable")
        kind = SurfaceKind::Orientable;
    else if (kindName == "nonorientable")
        kind = SurfaceKind::NonOrientable;
    else
        throw ParameterError("--kind must be sphere, orientable, or nonorientable");

    builder::EmbeddedSurface emb = builder::build_spanning_surface(kind, genus, n);
    SurfaceClass cls = classify_surface(emb.surface);
    bool spanning = is_spanning_in_blowup(surface_as_hypergraph(emb.surface), emb.host);
    if (!outPrefix.empty()) {
        write_surface_file(outPrefix + ".surf", emb.surface,
                           {{"generator", "build-surface kind=" + kindName + " genus=" + std::to_string(genus) +
                                              " n=" + std::to_string(n)}});
        write_hypergraph_file(outPrefix + ".host.hg", emb.host.result,
                              {{"generator", "build-surface-host"},
                               {"cluster-sizes", sizesMetadata(emb.host.sizes)}});
    }
    json rep{{"kind", to_string(cls.kind)},
             {"genus", cls.genus},
             {"chi", cls.euler},
             {"n", emb.surface.vertexCount()},
             {"faces", emb.surface.faceCount()},
             {"max_cluster", emb.host.maxClusterSize()},
             {"cluster_bound", builder::surface_cluster_bound(kind)},
             {"spanning", spanning}};
    emitReport(rep, asJson, std::cout);
    bool ok = spanning && ((kind == SurfaceKind::Sphere && cls.kind == SurfaceKind::Sphere) ||
                           (kind != SurfaceKind::Sphere && cls.kind == kind && cls.genus == genus));
    return ok ? kExitOk : kExitPropertyFails;
}

int runCheckFramework(const std::string& file, int componentIndex, bool asJson) {
    Hypergraph g = read_hypergraph_file(file);
    std::optional<std::vector<std::size_t>> subset;
    if (componentIndex >= 0) {
        ComponentDecomposition comps = tight_components(g);
        if (static_cast<std::size_t>(componentIndex) >= comps.parts.size())
            throw ParameterError("--component-index out of range");
        subset = std::vector<std::size_t>(comps.parts[static_cast<std::size_t>(componentIndex)].begin(),
                                          comps.parts[static_cast<std::size_t>(componentIndex)].end());
    }
    FrameworkReport rep = framework_report(g, subset);
    json thresholds = json::array();
    for (const auto& t : rep.thresholds) {
        json entry{{"family", t.family}, {"d", "k-" + std::to_string(t.dBelowK)}, {"status", t.status}};
        if (t.fixedK) entry["k"] = *t.fixedK;
        if (t.value) entry["value"] = to_string(*t.value);
        if (t.upperBound) entry["upper_bound"] = to_string(*t.upperBound);
        thresholds.push_back(entry);
    }
    json j{{"f1", rep.f1},
           {"f1_reason", rep.f1Reason},
           {"f2", rep.f2.has_value()},
           {"f2_size", rep.f2 ? json(to_string(rep.f2->size)) : json(nullptr)},
           {"f3", rep.f3},
           {"f3_witness", rep.f3Witness ? json(*rep.f3Witness) : json(nullptr)},
           {"holds", rep.holds()},
           {"thresholds", thresholds}};
    emitReport(j, asJson, std::cout);
    return rep.holds() ? kExitOk : kExitPropertyFails;
}

int runAuditTheorem(int n, bool exhaustive, std::uint64_t samples, std::uint64_t seed, double p, int threads,
                    const std::string& witnessPrefix, bool asJson) {
    oracle::AuditResult res = exhaustive
                                  ? oracle::verify_spanning_component_theorem(n, threads)
                                  : oracle::verify_spanning_component_theorem(n, oracle::SampleMode{samples, seed, p});
    std::cerr << "elapsed: " << res.elapsedSeconds << " s\n";
    if (!witnessPrefix.empty()) {
        for (std::size_t i = 0; i < res.counterexamples.size(); ++i)
            write_hypergraph_file(witnessPrefix + "-counterexample-" + std::to_string(i) + ".hg",
                                  res.counterexamples[i], {});
        if (res.extremal)
            write_hypergraph_file(witnessPrefix + "-extremal.hg", res.extremal->second,
                                  {{"min-degree", std::to_string(res.extremal->first)}});
    }
    json j{{"n", res.n},
           {"mode", exhaustive ? "exhaustive" : "sample"},
           {"tested", res.tested},
           {"counterexamples", res.counterexamples.size()},
           {"extremal_min_degree", res.extremal ? json(res.extremal->first) : json(nullptr)}};
    if (!exhaustive) {
        j["seed"] = seed;
        j["p"] = p;
    }
    emitReport(j, asJson, std::cout);
    return res.counterexamples.empty() ? kExitOk : kExitPropertyFails;
}

int runAuditThreshold(int n, const std::string& witnessFile, bool asJson) {
    oracle::ThresholdResult res = oracle::exact_component_threshold(n);
    if (!witnessFile.empty())
        write_hypergraph_file(witnessFile, res.witness,
                              {{"min-degree", std::to_string(res.threshold - 1)},
                               {"role", "extremal graph without a spanning component"}});
    json j{{"n", res.n},
           {"threshold", res.threshold},
           {"tested", res.tested},
           {"witness_edges", res.witness.edgeCount()}};
    emitReport(j, asJson, std::cout);
    return kExitOk;
}

int runAuditCodegree(const std::string& file, bool random, int k, int n, std::uint64_t samples,
                     std::uint64_t seed, double p, bool asJson) {
    if (random) {
        oracle::CodegreeBatchResult res = oracle::codegree_probe_random(k, n, samples, seed, p);
        json j{{"mode", "random"},
               {"k", k},
               {"n", n},
               {"tested", res.tested},
               {"applicable", res.applicable},
               {"counterexamples", res.counterexamples.size()},
               {"seed", seed},
               {"p", p}};
        emitReport(j, asJson, std::cout);
        return res.counterexamples.empty() ? kExitOk : kExitPropertyFails;
    }
    Hypergraph g = read_hypergraph_file(file);
    oracle::CodegreeProbe probe = oracle::codegree_component_probe(g);
    json j{{"codegree", probe.codegree},
           {"threshold", to_string(probe.threshold)},
           {"applies", probe.applies},
           {"spanning", probe.spanning},
           {"counterexample", probe.counterexample}};
    emitReport(j, asJson, std::cout);
    return probe.counterexample ? kExitPropertyFails : kExitOk;
}

int runSearchSphere(const std::string& file, std::uint64_t budget, const std::string& outFile, bool asJson) {
    Hypergraph g = read_hypergraph_file(file);
    oracle::SphereSearchResult res = oracle::search_spanning_sphere(g, oracle::SearchBudget{budget});
    std::string status = res.status == oracle::SearchStatus::Found
                             ? "found"
                             : (res.status == oracle::SearchStatus::Absent ? "absent" : "budget-exhausted");
    json j{{"status", status}, {"nodes", res.nodes}, {"reason", res.reason}};
    if (res.sphere) {
        j["faces"] = res.sphere->faceCount();
        if (!outFile.empty())
            write_surface_file(outFile, *res.sphere, {{"generator", "search-sphere " + file}});
    }
    emitReport(j, asJson, std::cout);
    switch (res.status) {
        case oracle::SearchStatus::Found: return kExitOk;
        case oracle::SearchStatus::Absent: return kExitPropertyFails;
        default: return kExitResource;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tight components and spanning surfaces in 3-uniform hypergraphs"};
    app.require_subcommand(1);
    bool asJson = false;
    app.add_flag("--json", asJson, "emit machine-readable JSON reports");

    GenOptions gen;
    auto* genCmd = app.add_subcommand("gen", "generate a named construction");
    genCmd->add_option("generator", gen.name,
                       "fig1 | surface-lower-bound | kgraph-lower-bound | kpartite | path-blowup | "
                       "cycle-blowup | tight-path | tight-cycle | fixture")
        ->required();
    genCmd->add_option("--n", gen.n, "vertex count");
    genCmd->add_option("--k", gen.k, "uniformity (default 3)");
    genCmd->add_option("--g", gen.g, "genus parameter");
    genCmd->add_option("--ell", gen.ell, "path length");
    genCmd->add_option("--x-size", gen.xSize, "override |X|");
    genCmd->add_option("--z-size", gen.zSize, "override |Z|");
    genCmd->add_option("--sizes", gen.sizes, "comma-separated cluster sizes");
    genCmd->add_option("--name", gen.fixtureName, "fixture name: T9 | P12");
    genCmd->add_option("-o,--output", gen.output, "output file (stdout when omitted)");
    genCmd->add_option("--host-out", gen.hostOutput, "also write the fixture host blow-up");

    std::string componentsFile;
    auto* compCmd = app.add_subcommand("components", "tight component decomposition of a hypergraph file");
    compCmd->add_option("file", componentsFile)->required();

    std::string degreeFile;
    int degreeD = 1;
    auto* degCmd = app.add_subcommand("degree", "minimum d-degree of a hypergraph file");
    degCmd->add_option("file", degreeFile)->required();
    degCmd->add_option("--d", degreeD, "degree order (default 1)");

    std::string classifyFile, expectKind;
    int expectGenus = -1;
    auto* classifyCmd = app.add_subcommand("classify", "classify a surface file");
    classifyCmd->add_option("file", classifyFile)->required();
    classifyCmd->add_option("--expect", expectKind, "fail unless the kind matches");
    classifyCmd->add_option("--expect-genus", expectGenus, "fail unless the genus matches");

    int sphereN = 0;
    std::string sphereOut;
    auto* sphereCmd = app.add_subcommand("build-sphere", "build a spanning sphere in a path blow-up");
    sphereCmd->add_option("--n", sphereN, "vertex count")->required();
    sphereCmd->add_option("-o,--output", sphereOut, "output prefix (.surf and .host.hg)");

    std::string surfKind;
    int surfGenus = 0, surfN = 0;
    std::string surfOut;
    auto* surfCmd = app.add_subcommand("build-surface", "build a spanning surface in a path blow-up");
    surfCmd->add_option("--kind", surfKind, "sphere | orientable | nonorientable")->required();
    surfCmd->add_option("--genus", surfGenus, "genus / crosscap count");
    surfCmd->add_option("--n", surfN, "vertex count")->required();
    surfCmd->add_option("-o,--output", surfOut, "output prefix");

    std::string frameworkFile;
    int componentIndex = -1;
    auto* fwCmd = app.add_subcommand("check-framework", "evaluate the framework properties F1-F3");
    fwCmd->add_option("file", frameworkFile)->required();
    fwCmd->add_option("--component-index", componentIndex, "use this tight component as F");

    auto* auditCmd = app.add_subcommand("audit", "exhaustive and randomized audits");
    auditCmd->require_subcommand(1);
    int auditN = 5;
    bool auditExhaustive = false;
    std::uint64_t auditSamples = 0, auditSeed = 1;
    double auditP = 0.7;
    int auditThreads = defaultThreads();
    std::string witnessPrefix;
    auto* theoremCmd = auditCmd->add_subcommand("theorem", "spanning-component degree theorem");
    theoremCmd->add_option("--n", auditN, "vertex count")->required();
    theoremCmd->add_flag("--exhaustive", auditExhaustive, "scan all 2^C(n,3) graphs");
    theoremCmd->add_option("--samples", auditSamples, "number of random samples");
    theoremCmd->add_option("--seed", auditSeed, "sampling seed (default 1)");
    theoremCmd->add_option("--p", auditP, "edge probability for sampling (default 0.7)");
    theoremCmd->add_option("--threads", auditThreads, "worker threads for exhaustive mode");
    theoremCmd->add_option("--witness-out", witnessPrefix, "write witness graphs with this prefix");

    int thresholdN = 4;
    std::string thresholdWitness;
    auto* thresholdCmd = auditCmd->add_subcommand("threshold", "exact small-n component threshold");
    thresholdCmd->add_option("--n", thresholdN, "vertex count")->required();
    thresholdCmd->add_option("--witness-out", thresholdWitness, "write the extremal witness graph");

    std::string codegreeFile;
    bool codegreeRandom = false;
    int codegreeK = 4, codegreeN = 10;
    std::uint64_t codegreeSamples = 1000, codegreeSeed = 1;
    double codegreeP = 0.9;
    auto* codegreeCmd = auditCmd->add_subcommand("codegree", "codegree spanning-component conjecture probe");
    codegreeCmd->add_option("file", codegreeFile, "hypergraph file to probe");
    codegreeCmd->add_flag("--random", codegreeRandom, "probe random k-graphs instead of a file");
    codegreeCmd->add_option("--k", codegreeK, "uniformity for random mode");
    codegreeCmd->add_option("--n", codegreeN, "vertex count for random mode");
    codegreeCmd->add_option("--samples", codegreeSamples, "sample count for random mode");
    codegreeCmd->add_option("--seed", codegreeSeed, "sampling seed");
    codegreeCmd->add_option("--p", codegreeP, "edge probability for random mode");

    auto* searchCmd = app.add_subcommand("search", "backtracking searches");
    searchCmd->require_subcommand(1);
    std::string searchFile, searchOut;
    std::uint64_t searchBudget = 10'000'000;
    auto* searchSphereCmd = searchCmd->add_subcommand("sphere", "search for a spanning sphere subcomplex");
    searchSphereCmd->add_option("file", searchFile)->required();
    searchSphereCmd->add_option("--budget", searchBudget, "node budget (default 10^7)");
    searchSphereCmd->add_option("-o,--output", searchOut, "write the found sphere");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*genCmd) return runGen(gen);
        if (*compCmd) {
            Hypergraph g = read_hypergraph_file(componentsFile);
            emitReport(componentsToJson(g, tight_components(g)), asJson, std::cout);
            return kExitOk;
        }
        if (*degCmd) {
            Hypergraph g = read_hypergraph_file(degreeFile);
            json j{{"k", g.uniformity()},
                   {"n", g.vertexCount()},
                   {"d", degreeD},
                   {"min_degree", min_d_degree(g, degreeD)}};
            emitReport(j, asJson, std::cout);
            return kExitOk;
        }
        if (*classifyCmd) return runClassify(classifyFile, asJson, expectKind, expectGenus);
        if (*sphereCmd) return runBuildSphere(sphereN, sphereOut, asJson);
        if (*surfCmd) return runBuildSurface(surfKind, surfGenus, surfN, surfOut, asJson);
        if (*fwCmd) return runCheckFramework(frameworkFile, componentIndex, asJson);
        if (*theoremCmd) {
            if (!auditExhaustive && auditSamples == 0)
                throw ParameterError("audit theorem needs --exhaustive or --samples N");
            return runAuditTheorem(auditN, auditExhaustive, auditSamples, auditSeed, auditP, auditThreads,
                                   witnessPrefix, asJson);
        }
        if (*thresholdCmd) return runAuditThreshold(thresholdN, thresholdWitness, asJson);
        if (*codegreeCmd) {
            if (!codegreeRandom && codegreeFile.empty())
                throw ParameterError("audit codegree needs a file or --random");
            return runAuditCodegree(codegreeFile, codegreeRandom, codegreeK, codegreeN, codegreeSamples,
                                    codegreeSeed, codegreeP, asJson);
        }
        if (*searchSphereCmd) return runSearchSphere(searchFile, searchBudget, searchOut, asJson);
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
}
