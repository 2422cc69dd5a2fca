// gcurv: curvature calculations and theorem checks on finite graphs.
//
//   gcurv gen <family> [params...] -o graph.json
//   gcurv curv --notion {combinatorial|bakry-emery|ollivier|lly} [options] graph.json
//   gcurv spec graph.json
//   gcurv heat graph.json --t 1.0 --f f.json
//   gcurv cheeger graph.json
//   gcurv verify [--only t1,t2] [--zoo default|zoo.json] [--json report.json]

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcurv/bakry_emery.hpp"
#include "gcurv/generators.hpp"
#include "gcurv/json_io.hpp"
#include "gcurv/spectral.hpp"
#include "gcurv/tessellation.hpp"
#include "gcurv/transport.hpp"
#include "gcurv/verify.hpp"

namespace {

using namespace gcurv;

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::optional<RotationSystem> canonical_rotation(const std::string& family, int n) {
    if (family == "cycle") return cycle_tessellation(n).rotation;
    if (family == "prism") return prism_tessellation(n).rotation;
    if (family == "antiprism") return antiprism_tessellation(n).rotation;
    return std::nullopt;
}

int cmd_gen(const std::string& family, const std::vector<int>& params,
            const std::string& out) {
    Graph g;
    std::optional<RotationSystem> rot;
    if (family == "tetrahedron") {
        auto t = tetrahedron_tessellation();
        g = t.graph;
        rot = t.rotation;
    } else if (family == "icosahedron") {
        auto t = icosahedron_tessellation();
        g = t.graph;
        rot = t.rotation;
    } else {
        g = generate(family, params);
        if (params.size() == 1) rot = canonical_rotation(family, params[0]);
    }
    save_graph_json(out, g, rot);
    std::cout << "wrote " << out << ": " << g.vertex_count() << " vertices, "
              << g.edge_count() << " edges" << (rot ? ", with rotation" : "") << "\n";
    if (family == "antitree") {
        auto exact = antitree_untruncated_vertices(params.at(0));
        std::cout << "note: this is a finite truncation; vertices 0.."
                  << (exact.empty() ? -1 : exact.back())
                  << " (levels 1.." << std::max(0, params.at(0) - 2)
                  << ") have 2-balls unaffected by the cut\n";
    }
    return 0;
}

int cmd_curv(const std::string& path, const std::string& notion, const std::string& dim,
             const std::string& p_text, bool certify, bool cache_distances) {
    auto file = load_graph_json(path);
    const Graph& g = file.graph;
    std::optional<AllPairsDistances> table;
    if (cache_distances) table.emplace(g);
    const AllPairsDistances* cache = table ? &*table : nullptr;
    if (notion == "combinatorial") {
        if (!file.rotation)
            throw ParseError("combinatorial curvature needs a \"rotation\" in " + path);
        auto t = make_tessellation(g, *file.rotation);
        std::cout << "vertex,num,den\n";
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            Rat k = vertex_curvature(t, v);
            std::cout << v << "," << numerator(k) << "," << denominator(k) << "\n";
        }
        return 0;
    }
    if (notion == "bakry-emery") {
        Dimension n = parse_dimension(dim);
        std::cout << "vertex,K,certificate_slack\n";
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            auto r = be_curvature(g, v, n);
            std::cout << v << "," << fmt(r.curvature) << "," << fmt(r.slack) << "\n";
        }
        return 0;
    }
    if (notion == "ollivier" || notion == "lly") {
        Rat p = parse_rational(p_text);
        nlohmann::ordered_json certificates = nlohmann::ordered_json::array();
        std::cout << "x,y,num,den\n";
        for (auto [x, y] : g.edges()) {
            Rat k = notion == "lly" ? lly_curvature(g, x, y, cache)
                                    : ollivier_curvature(g, x, y, p, cache);
            std::cout << x << "," << y << "," << numerator(k) << "," << denominator(k)
                      << "\n";
            if (certify) {
                Rat pp = notion == "lly" ? Rat(1, 2) : p;
                auto cert = wasserstein(g, mu(g, x, pp), mu(g, y, pp), cache);
                nlohmann::ordered_json c;
                c["x"] = x;
                c["y"] = y;
                c["p"] = rat_string(pp);
                c["w1"] = rat_string(cert.value);
                c["plan"] = nlohmann::ordered_json::array();
                for (const auto& e : cert.plan.entries)
                    c["plan"].push_back({e.from, e.to, rat_string(e.mass)});
                c["potential"] = nlohmann::ordered_json::object();
                for (const auto& [v, val] : cert.potential.values)
                    c["potential"][std::to_string(v)] = rat_string(val);
                certificates.push_back(std::move(c));
            }
        }
        if (certify) std::cerr << certificates.dump(2) << "\n";
        return 0;
    }
    throw ParseError("unknown notion " + notion);
}

int cmd_faces(const std::string& path) {
    auto file = load_graph_json(path);
    if (!file.rotation) throw ParseError("face tracing needs a \"rotation\" in " + path);
    auto t = make_tessellation(file.graph, *file.rotation);
    std::cout << faces_to_json(t.faces);
    return 0;
}

int cmd_spec(const std::string& path) {
    auto file = load_graph_json(path);
    auto s = spectrum(file.graph);
    nlohmann::ordered_json j;
    j["lambda"] = nlohmann::ordered_json::array();
    for (int i = 0; i < s.eigenvalues.size(); ++i)
        j["lambda"].push_back(round_sig(s.eigenvalues[i]));
    j["lambda1"] = round_sig(s.lambda1());
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_heat(const std::string& path, double t, const std::string& f_path) {
    auto file = load_graph_json(path);
    std::ifstream in(f_path);
    if (!in) throw ParseError("cannot open " + f_path);
    nlohmann::ordered_json jf;
    in >> jf;
    std::vector<double> f;
    for (const auto& x : jf) f.push_back(x.get<double>());
    if (static_cast<int>(f.size()) != file.graph.vertex_count())
        throw ParseError("function length does not match vertex count");
    auto out = heat_apply(file.graph, f, t);
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (double x : out) j.push_back(round_sig(x));
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_cheeger(const std::string& path, int limit) {
    auto file = load_graph_json(path);
    auto res = cheeger_constant(file.graph, limit);
    std::cout << "alpha = " << rat_string(res.value) << "\nwitness =";
    for (Vertex v : res.witness) std::cout << " " << v;
    std::cout << "\n";
    return 0;
}

int cmd_verify(const std::string& only_csv, const std::string& zoo,
               const std::string& json_out) {
    SuiteConfig config;
    config.zoo = zoo;
    if (!only_csv.empty()) {
        std::string item;
        std::istringstream is(only_csv);
        while (std::getline(is, item, ',')) config.only.push_back(item);
    }
    auto result = run_suite(config);
    std::cout << result.summary();
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        out << result.to_json().dump(2) << "\n";
        std::cout << "report written to " << json_out << "\n";
    }
    return result.failed_count() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete curvature toolkit"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a graph family as JSON");
    std::string family, out = "graph.json";
    std::vector<int> params;
    gen->add_option("family", family,
                    "complete|cycle|path|hypercube|prism|antiprism|dumbbell|antitree|"
                    "tetrahedron|icosahedron")
        ->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("-o,--out", out, "output file");

    auto* curv = app.add_subcommand("curv", "per-vertex or per-edge curvature as CSV");
    std::string notion, graph_path, dim = "inf", p_text = "0";
    bool certify = false, cache_distances = false;
    curv->add_option("--notion", notion, "combinatorial|bakry-emery|ollivier|lly")
        ->required();
    curv->add_option("--dim", dim, "dimension for bakry-emery (rational or inf)");
    curv->add_option("--p", p_text, "idleness for ollivier, e.g. 1/4");
    curv->add_flag("--certify", certify, "dump transport plans and potentials as JSON");
    curv->add_flag("--cache-distances", cache_distances,
                   "precompute the all-pairs distance table for edge sweeps");
    curv->add_option("graph", graph_path, "graph JSON file")->required();

    auto* faces = app.add_subcommand("faces", "trace faces from the rotation system");
    std::string faces_path;
    faces->add_option("graph", faces_path, "graph JSON file with rotation")->required();

    auto* spec_cmd = app.add_subcommand("spec", "normalized Laplacian spectrum");
    std::string spec_path;
    spec_cmd->add_option("graph", spec_path, "graph JSON file")->required();

    auto* heat = app.add_subcommand("heat", "apply the heat semigroup");
    std::string heat_path, f_path;
    double t = 1.0;
    heat->add_option("graph", heat_path, "graph JSON file")->required();
    heat->add_option("--t", t, "time")->required();
    heat->add_option("--f", f_path, "JSON array with the initial function")->required();

    auto* cheeger = app.add_subcommand("cheeger", "exact Cheeger constant (brute force)");
    std::string cheeger_path;
    int limit = 20;
    cheeger->add_option("graph", cheeger_path, "graph JSON file")->required();
    cheeger->add_option("--limit", limit, "brute-force vertex limit");

    auto* verify = app.add_subcommand("verify", "run the theorem suite over the zoo");
    std::string only, zoo = "default", json_out;
    verify->add_option("--only", only, "comma-separated theorem filter");
    verify->add_option("--zoo", zoo, "default or a zoo JSON file");
    verify->add_option("--json", json_out, "write the JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(family, params, out);
        if (curv->parsed())
            return cmd_curv(graph_path, notion, dim, p_text, certify, cache_distances);
        if (faces->parsed()) return cmd_faces(faces_path);
        if (spec_cmd->parsed()) return cmd_spec(spec_path);
        if (heat->parsed()) return cmd_heat(heat_path, t, f_path);
        if (cheeger->parsed()) return cmd_cheeger(cheeger_path, limit);
        if (verify->parsed()) return cmd_verify(only, zoo, json_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
