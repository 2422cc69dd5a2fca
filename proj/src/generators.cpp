#include "gcurv/generators.hpp"

#include <utility>

namespace gcurv {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Graph build(int n, const EdgeList& edges) { return Graph::from_edge_list(n, edges); }

}  // namespace

Graph complete(int n) {
    if (n < 1) throw TooSmallError("complete(n) needs n >= 1");
    EdgeList e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw TooSmallError("cycle(n) needs n >= 3");
    EdgeList e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build(n, e);
}

Graph path(int n) {
    if (n < 1) throw TooSmallError("path(n) needs n >= 1");
    EdgeList e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build(n, e);
}

Graph hypercube(int n) {
    if (n < 1) throw TooSmallError("hypercube(n) needs n >= 1");
    if (n > 20) throw TooLargeError("hypercube(n) with n > 20 exceeds desk scale");
    int size = 1 << n;
    EdgeList e;
    for (Vertex v = 0; v < size; ++v)
        for (int b = 0; b < n; ++b) {
            Vertex w = v ^ (1 << b);
            if (v < w) e.emplace_back(v, w);
        }
    return build(size, e);
}

Graph prism(int n) {
    if (n < 3) throw TooSmallError("prism(n) needs n >= 3");
    EdgeList e;
    for (Vertex i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);          // outer cycle u_i
        e.emplace_back(n + i, n + (i + 1) % n);  // inner cycle v_i
        e.emplace_back(i, n + i);                // rung
    }
    return build(2 * n, e);
}

Graph antiprism(int n) {
    if (n < 3) throw TooSmallError("antiprism(n) needs n >= 3");
    EdgeList e;
    for (Vertex i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
        e.emplace_back(n + i, n + (i + 1) % n);
        e.emplace_back(i, n + i);
        e.emplace_back(i, n + (i + 1) % n);  // diagonal u_i ~ v_{i+1}
    }
    return build(2 * n, e);
}

Graph dumbbell(int n, int m) {
    if (n < 1 || m < 1) throw TooSmallError("dumbbell(n,m) needs n,m >= 1");
    EdgeList e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    for (Vertex i = 0; i < m; ++i)
        for (Vertex j = i + 1; j < m; ++j) e.emplace_back(n + i, n + j);
    e.emplace_back(0, n);  // the bottleneck
    return build(n + m, e);
}

Graph antitree(int levels) {
    if (levels < 1) throw TooSmallError("antitree(levels) needs levels >= 1");
    int n = levels * (levels + 1) / 2;
    EdgeList e;
    for (int k = 1; k <= levels; ++k) {
        auto [a0, a1] = antitree_level_range(levels, k);
        for (Vertex a = a0; a <= a1; ++a)
            for (Vertex b = a + 1; b <= a1; ++b) e.emplace_back(a, b);
        if (k < levels) {
            auto [b0, b1] = antitree_level_range(levels, k + 1);
            for (Vertex a = a0; a <= a1; ++a)
                for (Vertex b = b0; b <= b1; ++b) e.emplace_back(a, b);
        }
    }
    return build(n, e);
}

std::pair<Vertex, Vertex> antitree_level_range(int levels, int k) {
    if (k < 1 || k > levels) throw IdOutOfRangeError(k, levels + 1);
    Vertex first = k * (k - 1) / 2;
    return {first, first + k - 1};
}

std::vector<Vertex> antitree_untruncated_vertices(int levels) {
    std::vector<Vertex> out;
    for (int k = 1; k + 2 <= levels; ++k) {
        auto [a0, a1] = antitree_level_range(levels, k);
        for (Vertex v = a0; v <= a1; ++v) out.push_back(v);
    }
    return out;
}

Graph generate(const std::string& family, std::span<const int> params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw ParseError(family + " expects " + std::to_string(k) + " parameter(s)");
    };
    if (family == "complete") { need(1); return complete(params[0]); }
    if (family == "cycle") { need(1); return cycle(params[0]); }
    if (family == "path") { need(1); return path(params[0]); }
    if (family == "hypercube") { need(1); return hypercube(params[0]); }
    if (family == "prism") { need(1); return prism(params[0]); }
    if (family == "antiprism") { need(1); return antiprism(params[0]); }
    if (family == "dumbbell") { need(2); return dumbbell(params[0], params[1]); }
    if (family == "antitree") { need(1); return antitree(params[0]); }
    throw ParseError("unknown graph family: " + family);
}

}  // namespace gcurv
