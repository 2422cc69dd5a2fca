#pragma once

#include <optional>
#include <string>

#include "gcurv/graph.hpp"
#include "gcurv/tessellation.hpp"

namespace gcurv {

// Graph files: {"n": int, "edges": [[i,j],...], "rotation": {"v": [...], ...}}.
// Edge pairs are unordered; the loader canonicalizes and validates. The
// rotation key is optional, but when present it must list every vertex and
// each entry must be a permutation of that vertex's neighbors.
struct GraphFile {
    Graph graph;
    std::optional<RotationSystem> rotation;
};

GraphFile load_graph_json(const std::string& path);
GraphFile parse_graph_json(const std::string& text);

std::string graph_to_json(const Graph& g,
                          const std::optional<RotationSystem>& rotation = std::nullopt);
void save_graph_json(const std::string& path, const Graph& g,
                     const std::optional<RotationSystem>& rotation = std::nullopt);

// Face lists as a JSON array of vertex cycles.
std::string faces_to_json(const std::vector<Face>& faces);

}  // namespace gcurv
