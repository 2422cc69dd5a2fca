#include "gcurv/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gcurv/generators.hpp"
#include "gcurv/parallel.hpp"
#include "gcurv/spectral.hpp"
#include "gcurv/transport.hpp"

namespace gcurv {

namespace {

// floats only ever meet bounds up to this tolerance; exact comparisons stay exact
constexpr double kFloatTol = 1e-8;
// a float curvature below this does not establish the K > 0 hypothesis
constexpr double kPositivityTol = 1e-8;

}  // namespace

double round_sig(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "Holds";
        case Verdict::Vacuous: return "Vacuous";
        case Verdict::Failed: return "FAILED";
    }
    return "?";
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["theorem"] = theorem;
    j["graph"] = graph_desc;
    j["hypothesis"] = hypothesis;
    j["verdict"] = verdict_name(verdict);
    j["slack"] = round_sig(slack);
    if (!witness.is_null()) j["witness"] = witness;
    return j;
}

bool replay_witness(const VerificationReport& report) {
    if (report.verdict != Verdict::Failed) return false;
    const auto& w = report.witness;
    if (!w.contains("lhs") || !w.contains("rhs") || !w.contains("relation")) return false;
    double lhs = w["lhs"].get<double>();
    double rhs = w["rhs"].get<double>();
    std::string rel = w["relation"].get<std::string>();
    // the report claims "lhs rel rhs" was REQUIRED and failed
    if (rel == "<=") return !(lhs <= rhs + kFloatTol);
    if (rel == ">=") return !(lhs >= rhs - kFloatTol);
    if (rel == "==") return lhs != rhs;
    return false;
}

VerificationReport verify_gauss_bonnet(const Tessellation& t, const std::string& desc) {
    VerificationReport rep;
    rep.theorem = "gauss-bonnet";
    rep.graph_desc = desc;
    Rat sum = gauss_bonnet_sum(t);
    rep.hypothesis["vertices"] = t.graph.vertex_count();
    rep.hypothesis["faces"] = static_cast<int>(t.faces.size());
    rep.hypothesis["curvature_sum"] = rat_string(sum);
    rep.verdict = (sum == 2) ? Verdict::Holds : Verdict::Failed;
    rep.slack = 0.0;
    if (rep.verdict == Verdict::Failed) {
        rep.witness["relation"] = "==";
        rep.witness["lhs"] = to_double(sum);
        rep.witness["rhs"] = 2.0;
        nlohmann::ordered_json per_vertex = nlohmann::ordered_json::array();
        for (Vertex v = 0; v < t.graph.vertex_count(); ++v)
            per_vertex.push_back(rat_string(vertex_curvature(t, v)));
        rep.witness["vertex_curvatures"] = per_vertex;
    }
    return rep;
}

VerificationReport verify_lichnerowicz_be(const Graph& g, const Dimension& n,
                                          const std::string& desc, double lambda1_scale) {
    if (!n.is_infinite() && n.value() <= 1)
        throw TooSmallError("Lichnerowicz needs dimension > 1 (or infinite)");
    VerificationReport rep;
    rep.theorem = "lichnerowicz-be";
    rep.graph_desc = desc;
    double K = cd_constant(g, n);
    double lambda1 = spectrum(g).lambda1() * lambda1_scale;
    double factor =
        n.is_infinite() ? 1.0 : to_double(n.value() / (n.value() - 1));
    rep.hypothesis["dimension"] = n.str();
    rep.hypothesis["K"] = round_sig(K);
    rep.hypothesis["lambda1"] = round_sig(lambda1);
    if (K <= kPositivityTol) {
        rep.verdict = Verdict::Vacuous;
        return rep;
    }
    double bound = factor * K;
    rep.slack = lambda1 - bound;
    rep.verdict = (lambda1 >= bound - kFloatTol) ? Verdict::Holds : Verdict::Failed;
    if (rep.verdict == Verdict::Failed) {
        rep.witness["relation"] = ">=";
        rep.witness["lhs"] = round_sig(lambda1);
        rep.witness["rhs"] = round_sig(bound);
        // the vertex attaining the CD constant and its certifying function
        Vertex argmin = 0;
        BECurvatureResult best;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            auto r = be_curvature(g, v, n);
            if (v == 0 || r.curvature < best.curvature) {
                best = r;
                argmin = v;
            }
        }
        rep.witness["curvature_vertex"] = argmin;
        rep.witness["minimizer"] = best.minimizer;
    }
    return rep;
}

VerificationReport verify_bonnet_myers_be(const Graph& g, const std::string& desc) {
    VerificationReport rep;
    rep.theorem = "bonnet-myers-be";
    rep.graph_desc = desc;
    double K = cd_constant(g, Dimension::infinite());
    auto diam = diameter(g);
    if (!diam) throw DisconnectedError("Bonnet-Myers needs a connected graph");
    rep.hypothesis["K"] = round_sig(K);
    rep.hypothesis["diameter"] = *diam;
    if (K <= kPositivityTol) {
        rep.verdict = Verdict::Vacuous;
        return rep;
    }
    double bound = 2.0 / K;
    rep.slack = bound - *diam;
    rep.verdict = (*diam <= bound + kFloatTol) ? Verdict::Holds : Verdict::Failed;
    if (rep.verdict == Verdict::Failed) {
        rep.witness["relation"] = "<=";
        rep.witness["lhs"] = static_cast<double>(*diam);
        rep.witness["rhs"] = round_sig(bound);
    }
    return rep;
}

VerificationReport verify_bonnet_myers_ollivier(const Graph& g, const Rat& p,
                                                const std::string& desc) {
    if (p < 0 || p >= 1) throw IdlenessOutOfRangeError(rat_string(p));
    VerificationReport rep;
    rep.theorem = "bonnet-myers-ollivier";
    rep.graph_desc = desc;
    Rat K = global_curvature_bound(g, p);
    auto diam = diameter(g);
    if (!diam) throw DisconnectedError("Bonnet-Myers needs a connected graph");
    rep.hypothesis["p"] = rat_string(p);
    rep.hypothesis["K"] = rat_string(K);
    rep.hypothesis["diameter"] = *diam;
    if (K <= 0) {
        rep.verdict = Verdict::Vacuous;
        return rep;
    }
    Rat bound = 2 * (Rat(1) - p) / K;  // exact comparison, no tolerance
    rep.slack = to_double(bound - *diam);
    rep.verdict = (Rat(*diam) <= bound) ? Verdict::Holds : Verdict::Failed;
    if (rep.verdict == Verdict::Failed) {
        rep.witness["relation"] = "<=";
        rep.witness["lhs"] = static_cast<double>(*diam);
        rep.witness["rhs"] = to_double(bound);
        // the flattest edge certifies K
        for (auto [x, y] : g.edges())
            if (ollivier_curvature(g, x, y, p) == K) {
                rep.witness["edge"] = {x, y};
                break;
            }
    }
    return rep;
}

VerificationReport verify_lichnerowicz_ollivier(const Graph& g, const std::string& desc,
                                                double lambda1_scale) {
    VerificationReport rep;
    rep.theorem = "lichnerowicz-ollivier";
    rep.graph_desc = desc;
    auto edge_list = g.edges();
    if (edge_list.empty() || !g.is_connected())
        throw DisconnectedError("Lichnerowicz needs a connected graph with an edge");
    Rat K;
    std::pair<Vertex, Vertex> argmin = edge_list.front();
    bool first = true;
    for (auto [x, y] : edge_list) {
        Rat k = lly_curvature(g, x, y);
        if (first || k < K) {
            K = k;
            argmin = {x, y};
            first = false;
        }
    }
    double lambda1 = spectrum(g).lambda1() * lambda1_scale;
    rep.hypothesis["K_lly"] = rat_string(K);
    rep.hypothesis["lambda1"] = round_sig(lambda1);
    if (K <= 0) {
        rep.verdict = Verdict::Vacuous;
        return rep;
    }
    rep.slack = lambda1 - to_double(K);
    rep.verdict = (lambda1 >= to_double(K) - kFloatTol) ? Verdict::Holds : Verdict::Failed;
    if (rep.verdict == Verdict::Failed) {
        rep.witness["relation"] = ">=";
        rep.witness["lhs"] = round_sig(lambda1);
        rep.witness["rhs"] = round_sig(to_double(K));
        rep.witness["edge"] = {argmin.first, argmin.second};
    }
    return rep;
}

Graph fused_cycles_graph() {
    // 4-cycle 0,1,3,2 and 5-cycle 0,4,5,6,1 sharing the edge (0,1)
    std::vector<std::pair<Vertex, Vertex>> e = {{0, 1}, {1, 3}, {3, 2}, {2, 0},
                                                {0, 4}, {4, 5}, {5, 6}, {6, 1}};
    return Graph::from_edge_list(7, e);
}

int SuiteResult::failed_count() const {
    int n = 0;
    for (const auto& r : reports)
        if (r.verdict == Verdict::Failed) ++n;
    return n;
}

nlohmann::ordered_json SuiteResult::to_json() const {
    nlohmann::ordered_json j;
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) j["reports"].push_back(r.to_json());
    j["failed"] = failed_count();
    return j;
}

std::string SuiteResult::summary() const {
    std::ostringstream os;
    int holds = 0, vacuous = 0;
    for (const auto& r : reports) {
        os << "[" << verdict_name(r.verdict) << "] " << r.theorem << " on "
           << r.graph_desc;
        if (r.verdict == Verdict::Holds) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6g", r.slack);
            os << " (slack " << buf << ")";
            ++holds;
        } else if (r.verdict == Verdict::Vacuous) {
            ++vacuous;
        }
        os << "\n";
    }
    os << reports.size() << " checks: " << holds << " hold, " << vacuous
       << " vacuous, " << failed_count() << " FAILED\n";
    return os.str();
}

namespace {

struct ZooEntry {
    std::string family;
    std::vector<int> params;

    std::string desc() const {
        std::string s = family;
        if (!params.empty()) {
            s += "(";
            for (size_t i = 0; i < params.size(); ++i)
                s += (i ? "," : "") + std::to_string(params[i]);
            s += ")";
        }
        return s;
    }
};

struct Zoo {
    std::vector<ZooEntry> tessellations;
    std::vector<ZooEntry> graphs;
};

Zoo default_zoo() {
    Zoo zoo;
    for (int n = 3; n <= 12; ++n) zoo.tessellations.push_back({"prism", {n}});
    for (int n = 3; n <= 12; ++n) zoo.tessellations.push_back({"antiprism", {n}});
    zoo.tessellations.push_back({"tetrahedron", {}});
    zoo.tessellations.push_back({"icosahedron", {}});

    for (int n = 2; n <= 8; ++n) zoo.graphs.push_back({"complete", {n}});
    for (int n = 3; n <= 12; ++n) zoo.graphs.push_back({"cycle", {n}});
    for (int n = 2; n <= 5; ++n) zoo.graphs.push_back({"hypercube", {n}});
    for (int n = 3; n <= 12; ++n) zoo.graphs.push_back({"prism", {n}});
    for (int n = 3; n <= 12; ++n) zoo.graphs.push_back({"antiprism", {n}});
    for (int n = 3; n <= 5; ++n) zoo.graphs.push_back({"dumbbell", {n, n}});
    for (int n = 4; n <= 7; ++n) zoo.graphs.push_back({"antitree", {n}});
    zoo.graphs.push_back({"fused-cycles", {}});
    return zoo;
}

Zoo load_zoo(const std::string& spec) {
    if (spec == "default") return default_zoo();
    std::ifstream in(spec);
    if (!in) throw ParseError("cannot open zoo file " + spec);
    nlohmann::ordered_json j;
    in >> j;
    Zoo zoo;
    auto parse_list = [](const nlohmann::ordered_json& arr) {
        std::vector<ZooEntry> out;
        for (const auto& item : arr) {
            ZooEntry e;
            e.family = item.at(0).get<std::string>();
            for (size_t k = 1; k < item.size(); ++k) e.params.push_back(item[k].get<int>());
            out.push_back(std::move(e));
        }
        return out;
    };
    if (j.contains("tessellations")) zoo.tessellations = parse_list(j["tessellations"]);
    if (j.contains("graphs")) zoo.graphs = parse_list(j["graphs"]);
    return zoo;
}

Tessellation zoo_tessellation(const ZooEntry& e) {
    if (e.family == "prism") return prism_tessellation(e.params.at(0));
    if (e.family == "antiprism") return antiprism_tessellation(e.params.at(0));
    if (e.family == "tetrahedron") return tetrahedron_tessellation();
    if (e.family == "icosahedron") return icosahedron_tessellation();
    if (e.family == "cycle") return cycle_tessellation(e.params.at(0));
    throw ParseError("no canonical tessellation for family " + e.family);
}

Graph zoo_graph(const ZooEntry& e) {
    if (e.family == "fused-cycles") return fused_cycles_graph();
    if (e.family == "tetrahedron") return complete(4);
    if (e.family == "icosahedron") return icosahedron_tessellation().graph;
    return generate(e.family, e.params);
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& config) {
    Zoo zoo = load_zoo(config.zoo);
    auto selected = [&](const std::string& theorem) {
        return config.only.empty() ||
               std::find(config.only.begin(), config.only.end(), theorem) !=
                   config.only.end();
    };

    std::vector<std::function<VerificationReport()>> jobs;
    if (selected("gauss-bonnet")) {
        for (const auto& e : zoo.tessellations)
            jobs.push_back([e] { return verify_gauss_bonnet(zoo_tessellation(e), e.desc()); });
    }
    for (const auto& e : zoo.graphs) {
        if (selected("lichnerowicz-be"))
            jobs.push_back([e, &config] {
                return verify_lichnerowicz_be(zoo_graph(e), Dimension::infinite(), e.desc(),
                                              config.lambda1_scale);
            });
        if (selected("bonnet-myers-be"))
            jobs.push_back([e] { return verify_bonnet_myers_be(zoo_graph(e), e.desc()); });
        if (selected("bonnet-myers-ollivier"))
            jobs.push_back([e, &config] {
                return verify_bonnet_myers_ollivier(zoo_graph(e), config.idleness, e.desc());
            });
        if (selected("lichnerowicz-ollivier"))
            jobs.push_back([e, &config] {
                return verify_lichnerowicz_ollivier(zoo_graph(e), e.desc(),
                                                    config.lambda1_scale);
            });
    }

    SuiteResult result;
    result.reports.resize(jobs.size());
    parallel_for(static_cast<int>(jobs.size()),
                 [&](int k) { result.reports[k] = jobs[k](); });
    return result;
}

}  // namespace gcurv
