#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gcurv/errors.hpp"

namespace gcurv {

using Vertex = int;

// Finite simple undirected graph with dense vertex ids 0..n-1 and sorted
// adjacency lists. Immutable after construction; safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Builds the canonical graph from an (unordered) edge list. Duplicate
    // edges collapse; loops are rejected.
    static Graph from_edge_list(int vertex_count,
                                std::span<const std::pair<Vertex, Vertex>> edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(Vertex u, Vertex v) const;

    // All edges as pairs (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool is_connected() const;

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= vertex_count()) throw IdOutOfRangeError(v, vertex_count());
    }

private:
    std::vector<std::vector<Vertex>> adj_;
    int edge_count_ = 0;
};

// BFS distance field from one source. Vertices in other components carry the
// kUnreachable sentinel.
struct DistanceField {
    static constexpr int kUnreachable = -1;

    Vertex source = 0;
    std::vector<int> dist;

    bool reachable(Vertex v) const { return dist[v] != kUnreachable; }
    int operator[](Vertex v) const { return dist[v]; }
};

DistanceField bfs_distances(const Graph& g, Vertex source);

// Maximum finite pairwise distance; nullopt when the graph is disconnected
// (or empty).
std::optional<int> diameter(const Graph& g);

// Opt-in all-pairs table (n BFS sweeps, O(n^2) memory) for repeated curvature
// sweeps. By default every operation recomputes distances per call.
class AllPairsDistances {
public:
    explicit AllPairsDistances(const Graph& g);

    int operator()(Vertex a, Vertex b) const { return fields_[a].dist[b]; }
    bool reachable(Vertex a, Vertex b) const { return fields_[a].reachable(b); }

private:
    std::vector<DistanceField> fields_;
};

}  // namespace gcurv
