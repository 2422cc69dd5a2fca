#include "gcurv/graph.hpp"

#include <algorithm>
#include <deque>

namespace gcurv {

Graph Graph::from_edge_list(int vertex_count,
                            std::span<const std::pair<Vertex, Vertex>> edges) {
    if (vertex_count < 0) throw TooSmallError("vertex count must be nonnegative");
    Graph g;
    g.adj_.assign(vertex_count, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= vertex_count) throw IdOutOfRangeError(u, vertex_count);
        if (v < 0 || v >= vertex_count) throw IdOutOfRangeError(v, vertex_count);
        if (u == v) throw LoopEdgeError(u);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.edge_count_ = 0;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.edge_count_ += static_cast<int>(nb.size());
    }
    g.edge_count_ /= 2;
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& nb = neighbors(u);
    check_vertex(v);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    if (vertex_count() <= 1) return true;
    auto d = bfs_distances(*this, 0);
    return std::all_of(d.dist.begin(), d.dist.end(),
                       [](int x) { return x != DistanceField::kUnreachable; });
}

DistanceField bfs_distances(const Graph& g, Vertex source) {
    g.check_vertex(source);
    DistanceField field;
    field.source = source;
    field.dist.assign(g.vertex_count(), DistanceField::kUnreachable);
    field.dist[source] = 0;
    std::deque<Vertex> queue{source};
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (field.dist[w] == DistanceField::kUnreachable) {
                field.dist[w] = field.dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return field;
}

AllPairsDistances::AllPairsDistances(const Graph& g) {
    fields_.reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) fields_.push_back(bfs_distances(g, v));
}

std::optional<int> diameter(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    int best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto d = bfs_distances(g, v);
        for (int x : d.dist) {
            if (x == DistanceField::kUnreachable) return std::nullopt;
            best = std::max(best, x);
        }
    }
    return best;
}

}  // namespace gcurv
