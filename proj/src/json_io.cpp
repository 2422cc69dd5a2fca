#include "gcurv/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gcurv {

using nlohmann::ordered_json;

GraphFile parse_graph_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("graph JSON needs an integer \"n\"");
    int n = j["n"].get<int>();
    std::vector<std::pair<Vertex, Vertex>> edges;
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("each edge must be a pair [i,j]");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    GraphFile out;
    out.graph = Graph::from_edge_list(n, edges);
    if (j.contains("rotation") && !j["rotation"].is_null()) {
        RotationSystem rot(n);
        std::vector<bool> seen(n, false);
        for (const auto& [key, order] : j["rotation"].items()) {
            int v = -1;
            try {
                v = std::stoi(key);
            } catch (...) {
                throw ParseError("rotation keys must be vertex ids, got \"" + key + "\"");
            }
            if (v < 0 || v >= n) throw IdOutOfRangeError(v, n);
            seen[v] = true;
            for (const auto& w : order) rot[v].push_back(w.get<int>());
            auto sorted = rot[v];
            std::sort(sorted.begin(), sorted.end());
            if (sorted != out.graph.neighbors(v))
                throw InvalidRotationError(
                    "rotation at vertex " + std::to_string(v) +
                    " is not a permutation of its neighbors");
        }
        if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
            throw InvalidRotationError("rotation must list every vertex");
        out.rotation = std::move(rot);
    }
    return out;
}

GraphFile load_graph_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph_json(buf.str());
}

std::string graph_to_json(const Graph& g, const std::optional<RotationSystem>& rotation) {
    ordered_json j;
    j["n"] = g.vertex_count();
    j["edges"] = ordered_json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (rotation) {
        ordered_json rot = ordered_json::object();
        for (Vertex v = 0; v < g.vertex_count(); ++v) rot[std::to_string(v)] = (*rotation)[v];
        j["rotation"] = std::move(rot);
    }
    return j.dump(2) + "\n";
}

void save_graph_json(const std::string& path, const Graph& g,
                     const std::optional<RotationSystem>& rotation) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << graph_to_json(g, rotation);
}

std::string faces_to_json(const std::vector<Face>& faces) {
    ordered_json j = ordered_json::array();
    for (const auto& f : faces) j.push_back(f.boundary);
    return j.dump() + "\n";
}

}  // namespace gcurv
