#include "gcurv/tessellation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace gcurv {

namespace {

void validate_rotation(const Graph& g, const RotationSystem& rot) {
    if (static_cast<int>(rot.size()) != g.vertex_count())
        throw InvalidRotationError("rotation system must cover every vertex");
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto sorted = rot[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbors(v))
            throw InvalidRotationError("rotation at vertex " + std::to_string(v) +
                                       " is not a permutation of its neighbors");
    }
}

// position of each neighbor inside rot[v], for O(1) successor lookups
std::vector<std::unordered_map<Vertex, int>> rotation_positions(const RotationSystem& rot) {
    std::vector<std::unordered_map<Vertex, int>> pos(rot.size());
    for (Vertex v = 0; v < static_cast<Vertex>(rot.size()); ++v)
        for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) pos[v][rot[v][i]] = i;
    return pos;
}

}  // namespace

bool Face::is_simple_cycle() const {
    if (boundary.size() < 3) return false;
    std::set<Vertex> seen(boundary.begin(), boundary.end());
    return seen.size() == boundary.size();
}

std::vector<Face> faces_from_rotation(const Graph& g, const RotationSystem& rot) {
    validate_rotation(g, rot);
    if (!g.is_connected()) throw DisconnectedError("face tracing needs a connected graph");
    auto pos = rotation_positions(rot);

    // visited[v][i] marks the directed edge v -> rot[v][i]
    std::vector<std::vector<bool>> visited(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) visited[v].assign(rot[v].size(), false);

    std::vector<Face> faces;
    for (Vertex v0 = 0; v0 < g.vertex_count(); ++v0) {
        for (int i0 = 0; i0 < static_cast<int>(rot[v0].size()); ++i0) {
            if (visited[v0][i0]) continue;
            Face face;
            Vertex a = v0;
            int i = i0;
            do {
                visited[a][i] = true;
                Vertex b = rot[a][i];
                face.boundary.push_back(a);
                int j = (pos[b].at(a) + 1) % static_cast<int>(rot[b].size());
                a = b;
                i = j;
            } while (!(a == v0 && i == i0));
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

Tessellation make_tessellation(Graph g, RotationSystem rot) {
    auto faces = faces_from_rotation(g, rot);
    return Tessellation{std::move(g), std::move(rot), std::move(faces)};
}

TessellationCheck check_tessellation(const Tessellation& t) {
    TessellationCheck rep;
    const Graph& g = t.graph;
    const auto& faces = t.faces;

    // (i) every undirected edge on exactly two boundaries, belonging to two
    // distinct faces; also every directed edge consumed exactly once.
    std::map<std::pair<Vertex, Vertex>, std::vector<int>> edge_faces;
    bool directed_ok = true;
    std::set<std::pair<Vertex, Vertex>> directed_seen;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
        const auto& b = faces[fi].boundary;
        int k = static_cast<int>(b.size());
        for (int j = 0; j < k; ++j) {
            Vertex a = b[j], c = b[(j + 1) % k];
            if (!directed_seen.insert({a, c}).second) directed_ok = false;
            edge_faces[{std::min(a, c), std::max(a, c)}].push_back(fi);
        }
    }
    rep.edge_in_two_faces = directed_ok &&
                            static_cast<int>(edge_faces.size()) == g.edge_count();
    for (const auto& [e, fs] : edge_faces) {
        if (fs.size() != 2 || fs[0] == fs[1]) {
            rep.edge_in_two_faces = false;
            rep.failures.push_back("edge (" + std::to_string(e.first) + "," +
                                   std::to_string(e.second) +
                                   ") is not contained in two distinct faces");
        }
    }

    // (ii) simple-cycle boundaries with consecutive vertices adjacent
    rep.boundaries_simple = true;
    for (const auto& f : faces) {
        bool simple = f.is_simple_cycle();
        int k = f.degree();
        for (int j = 0; simple && j < k; ++j)
            simple = g.has_edge(f.boundary[j], f.boundary[(j + 1) % k]);
        if (!simple) {
            rep.boundaries_simple = false;
            rep.failures.push_back("a face boundary is not a simple cycle");
        }
    }

    // (iii) pairwise intersections; only face pairs sharing a vertex can fail
    std::vector<std::vector<int>> vertex_faces(g.vertex_count());
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi)
        for (Vertex v : faces[fi].boundary) vertex_faces[v].push_back(fi);
    std::set<std::pair<int, int>> candidate_pairs;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (size_t a = 0; a < vertex_faces[v].size(); ++a)
            for (size_t b = a + 1; b < vertex_faces[v].size(); ++b) {
                int fa = vertex_faces[v][a], fb = vertex_faces[v][b];
                if (fa != fb) candidate_pairs.insert({std::min(fa, fb), std::max(fa, fb)});
            }
    rep.face_intersections_ok = true;
    for (auto [fa, fb] : candidate_pairs) {
        std::set<Vertex> va(faces[fa].boundary.begin(), faces[fa].boundary.end());
        std::set<Vertex> shared;
        for (Vertex v : faces[fb].boundary)
            if (va.count(v)) shared.insert(v);
        auto boundary_edges = [](const Face& f) {
            std::set<std::pair<Vertex, Vertex>> es;
            int k = f.degree();
            for (int j = 0; j < k; ++j) {
                Vertex a = f.boundary[j], c = f.boundary[(j + 1) % k];
                es.insert({std::min(a, c), std::max(a, c)});
            }
            return es;
        };
        auto ea = boundary_edges(faces[fa]);
        auto eb = boundary_edges(faces[fb]);
        std::vector<std::pair<Vertex, Vertex>> shared_edges;
        for (const auto& e : ea)
            if (eb.count(e)) shared_edges.push_back(e);
        bool ok = (shared.size() == 1 && shared_edges.empty()) ||
                  (shared.size() == 2 && shared_edges.size() == 1 &&
                   shared_edges[0] ==
                       std::make_pair(*shared.begin(), *std::next(shared.begin())));
        if (!ok) {
            rep.face_intersections_ok = false;
            rep.failures.push_back("faces " + std::to_string(fa) + " and " +
                                   std::to_string(fb) +
                                   " intersect in more than one edge or vertex");
        }
    }

    rep.degree_bounds = true;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < 3) rep.degree_bounds = false;
    for (const auto& f : faces)
        if (f.degree() < 3) rep.degree_bounds = false;
    if (!rep.degree_bounds) rep.failures.push_back("a vertex or face has degree < 3");

    rep.euler_sphere = g.vertex_count() - g.edge_count() +
                           static_cast<int>(faces.size()) == 2;
    if (!rep.euler_sphere) rep.failures.push_back("Euler characteristic is not 2");
    return rep;
}

Rat corner_curvature(const Tessellation& t, Vertex v, int face_index) {
    t.graph.check_vertex(v);
    if (face_index < 0 || face_index >= static_cast<int>(t.faces.size()))
        throw NotIncidentError("face index out of range");
    const Face& f = t.faces[face_index];
    if (std::find(f.boundary.begin(), f.boundary.end(), v) == f.boundary.end())
        throw NotIncidentError("vertex " + std::to_string(v) +
                               " does not lie on face " + std::to_string(face_index));
    return Rat(1, t.graph.degree(v)) + Rat(1, f.degree()) - Rat(1, 2);
}

Rat vertex_curvature(const Tessellation& t, Vertex v) {
    t.graph.check_vertex(v);
    Rat corner_sum = 0;
    Rat face_term = 0;
    int corners = 0;
    for (int fi = 0; fi < static_cast<int>(t.faces.size()); ++fi) {
        const Face& f = t.faces[fi];
        auto count = std::count(f.boundary.begin(), f.boundary.end(), v);
        for (long k = 0; k < count; ++k) {
            corner_sum += corner_curvature(t, v, fi);
            face_term += Rat(1, f.degree());
            ++corners;
        }
    }
    // closed form 1 - d_v/2 + sum over incident faces of 1/d_f, valid when the
    // number of corners equals d_v
    if (corners == t.graph.degree(v)) {
        Rat closed = Rat(1) - Rat(t.graph.degree(v), 2) + face_term;
        if (closed != corner_sum)
            throw Error("vertex curvature forms disagree at vertex " + std::to_string(v));
    }
    return corner_sum;
}

Rat gauss_bonnet_sum(const Tessellation& t) {
    auto rep = check_tessellation(t);
    if (!rep.valid()) {
        std::string what = "not a valid tessellation";
        for (const auto& f : rep.failures) what += "; " + f;
        throw InvalidTessellationError(what);
    }
    Rat sum = 0;
    for (Vertex v = 0; v < t.graph.vertex_count(); ++v) sum += vertex_curvature(t, v);
    return sum;
}

std::vector<Vertex> cut_locus(const Graph& g, Vertex v0) {
    if (!g.is_connected()) throw DisconnectedError("cut locus needs a connected graph");
    auto d = bfs_distances(g, v0);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (v == v0) continue;
        bool local_max = true;
        for (Vertex w : g.neighbors(v))
            if (d[w] > d[v]) local_max = false;
        if (local_max) out.push_back(v);
    }
    return out;
}

CheegerResult cheeger_constant(const Graph& g, int brute_force_limit) {
    int n = g.vertex_count();
    if (n > brute_force_limit)
        throw TooLargeError("cheeger_constant brute force limited to " +
                            std::to_string(brute_force_limit) + " vertices");
    if (!g.is_connected()) throw DisconnectedError("Cheeger constant needs a connected graph");
    if (n < 2) throw TooSmallError("Cheeger constant needs at least two vertices");

    long best_boundary = -1, best_vol = 1;
    unsigned best_mask = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (2 * __builtin_popcount(mask) > n) continue;
        long boundary = 0, vol = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (!(mask >> v & 1)) continue;
            vol += g.degree(v);
            for (Vertex w : g.neighbors(v))
                if (!(mask >> w & 1)) ++boundary;
        }
        if (best_boundary < 0 || boundary * best_vol < best_boundary * vol) {
            best_boundary = boundary;
            best_vol = vol;
            best_mask = mask;
        }
    }
    CheegerResult res;
    res.value = Rat(best_boundary, best_vol);
    for (Vertex v = 0; v < n; ++v)
        if (best_mask >> v & 1) res.witness.push_back(v);
    return res;
}

namespace {

// Searches for two disjoint degree-n faces covering all vertices, with every
// remaining face of degree `band_degree`. This is the structural signature of
// prisms (band of quadrilaterals) and antiprisms (band of triangles).
bool matches_band_structure(const Tessellation& t, int regular_degree, int band_degree,
                            int* param_out) {
    const Graph& g = t.graph;
    int nv = g.vertex_count();
    if (nv % 2 != 0) return false;
    int n = nv / 2;
    if (n < 3) return false;
    for (Vertex v = 0; v < nv; ++v)
        if (g.degree(v) != regular_degree) return false;
    for (size_t a = 0; a < t.faces.size(); ++a) {
        if (t.faces[a].degree() != n) continue;
        for (size_t b = a + 1; b < t.faces.size(); ++b) {
            if (t.faces[b].degree() != n) continue;
            std::set<Vertex> cover(t.faces[a].boundary.begin(), t.faces[a].boundary.end());
            cover.insert(t.faces[b].boundary.begin(), t.faces[b].boundary.end());
            if (static_cast<int>(cover.size()) != nv) continue;
            bool band_ok = true;
            for (size_t c = 0; c < t.faces.size(); ++c)
                if (c != a && c != b && t.faces[c].degree() != band_degree) band_ok = false;
            if (band_ok) {
                *param_out = n;
                return true;
            }
        }
    }
    return false;
}

}  // namespace

HiguchiClassification higuchi_classify(const Tessellation& t) {
    using Kind = HiguchiClassification::Kind;
    for (Vertex v = 0; v < t.graph.vertex_count(); ++v)
        if (vertex_curvature(t, v) <= 0) return {Kind::NotApplicable, 0};
    int n = 0;
    if (matches_band_structure(t, 3, 4, &n)) return {Kind::Prism, n};
    if (matches_band_structure(t, 4, 3, &n)) return {Kind::Antiprism, n};
    if (t.graph.vertex_count() <= 208)
        return {Kind::SmallGraph, t.graph.vertex_count()};
    return {Kind::Violation, t.graph.vertex_count()};
}

// ---------------------------------------------------------------------------
// canonical embeddings

Tessellation cycle_tessellation(int n) {
    Graph g = Graph::from_edge_list(n, [&] {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
        return e;
    }());
    RotationSystem rot(n);
    for (Vertex i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i + n - 1) % n};
    return make_tessellation(std::move(g), std::move(rot));
}

Tessellation prism_tessellation(int n) {
    if (n < 3) throw TooSmallError("prism tessellation needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
        e.emplace_back(n + i, n + (i + 1) % n);
        e.emplace_back(i, n + i);
    }
    Graph g = Graph::from_edge_list(2 * n, e);
    RotationSystem rot(2 * n);
    for (Vertex i = 0; i < n; ++i) {
        rot[i] = {(i + 1) % n, n + i, (i + n - 1) % n};
        rot[n + i] = {i, n + (i + 1) % n, n + (i + n - 1) % n};
    }
    return make_tessellation(std::move(g), std::move(rot));
}

Tessellation antiprism_tessellation(int n) {
    if (n < 3) throw TooSmallError("antiprism tessellation needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
        e.emplace_back(n + i, n + (i + 1) % n);
        e.emplace_back(i, n + i);
        e.emplace_back(i, n + (i + 1) % n);
    }
    Graph g = Graph::from_edge_list(2 * n, e);
    RotationSystem rot(2 * n);
    for (Vertex i = 0; i < n; ++i) {
        rot[i] = {(i + 1) % n, n + (i + 1) % n, n + i, (i + n - 1) % n};
        rot[n + i] = {i, n + (i + 1) % n, n + (i + n - 1) % n, (i + n - 1) % n};
    }
    return make_tessellation(std::move(g), std::move(rot));
}

Tessellation tetrahedron_tessellation() {
    std::vector<std::pair<Vertex, Vertex>> e = {{0, 1}, {0, 2}, {0, 3},
                                                {1, 2}, {1, 3}, {2, 3}};
    Graph g = Graph::from_edge_list(4, e);
    RotationSystem rot = {{1, 2, 3}, {2, 0, 3}, {3, 0, 1}, {1, 0, 2}};
    return make_tessellation(std::move(g), std::move(rot));
}

RotationSystem rotation_from_oriented_faces(const Graph& g,
                                            const std::vector<std::vector<Vertex>>& faces) {
    std::vector<std::map<Vertex, Vertex>> succ(g.vertex_count());
    for (const auto& f : faces) {
        int k = static_cast<int>(f.size());
        for (int j = 0; j < k; ++j) {
            Vertex a = f[j], b = f[(j + 1) % k], c = f[(j + 2) % k];
            if (!succ[b].emplace(a, c).second)
                throw InvalidRotationError("face list is not consistently oriented");
        }
    }
    RotationSystem rot(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) continue;
        Vertex start = g.neighbors(v).front();
        Vertex cur = start;
        for (int i = 0; i < g.degree(v); ++i) {
            rot[v].push_back(cur);
            cur = succ[v].at(cur);
        }
        if (cur != start)
            throw InvalidRotationError("oriented faces do not close a rotation at vertex " +
                                       std::to_string(v));
    }
    return rot;
}

Tessellation icosahedron_tessellation() {
    // poles 0 and 11; upper ring a_i = 1+i, lower ring b_i = 6+i, i mod 5
    auto A = [](int i) { return 1 + ((i % 5) + 5) % 5; };
    auto B = [](int i) { return 6 + ((i % 5) + 5) % 5; };
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(0, A(i));
        e.emplace_back(A(i), A(i + 1));
        e.emplace_back(A(i), B(i));
        e.emplace_back(A(i), B(i - 1));
        e.emplace_back(B(i), B(i + 1));
        e.emplace_back(11, B(i));
    }
    Graph g = Graph::from_edge_list(12, e);
    std::vector<std::vector<Vertex>> faces;
    for (int i = 0; i < 5; ++i) {
        faces.push_back({0, A(i), A(i + 1)});
        faces.push_back({A(i + 1), A(i), B(i)});
        faces.push_back({A(i), B(i - 1), B(i)});
        faces.push_back({11, B(i), B(i - 1)});
    }
    auto rot = rotation_from_oriented_faces(g, faces);
    return make_tessellation(std::move(g), std::move(rot));
}

Tessellation theta_tessellation() {
    // two hubs 0 and 1 joined by the 2-paths 0-2-1, 0-3-1, 0-4-1
    std::vector<std::pair<Vertex, Vertex>> e = {{0, 2}, {2, 1}, {0, 3},
                                                {3, 1}, {0, 4}, {4, 1}};
    Graph g = Graph::from_edge_list(5, e);
    RotationSystem rot = {{3, 2, 4}, {2, 3, 4}, {0, 1}, {0, 1}, {0, 1}};
    return make_tessellation(std::move(g), std::move(rot));
}

HyperbolicPatch heptagon_patch() {
    // central heptagon c_i = i, spoke tips r_i = 7+i, outer arc w_{i,j} = 14+3i+j
    auto C = [](int i) { return ((i % 7) + 7) % 7; };
    auto R = [&C](int i) { return 7 + C(i); };
    auto W = [&C](int i, int j) { return 14 + 3 * C(i) + j; };
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < 7; ++i) {
        e.emplace_back(C(i), C(i + 1));
        e.emplace_back(C(i), R(i));
        e.emplace_back(R(i + 1), W(i, 0));
        e.emplace_back(W(i, 0), W(i, 1));
        e.emplace_back(W(i, 1), W(i, 2));
        e.emplace_back(W(i, 2), R(i));
    }
    Graph g = Graph::from_edge_list(35, e);
    RotationSystem rot(35);
    for (int i = 0; i < 7; ++i) {
        rot[C(i)] = {R(i), C(i + 1), C(i - 1)};
        rot[R(i)] = {W(i, 2), C(i), W(i - 1, 0)};
        rot[W(i, 0)] = {R(i + 1), W(i, 1)};
        rot[W(i, 1)] = {W(i, 0), W(i, 2)};
        rot[W(i, 2)] = {W(i, 1), R(i)};
    }
    HyperbolicPatch patch;
    patch.tess = make_tessellation(std::move(g), std::move(rot));
    for (int i = 0; i < 7; ++i) patch.interior.push_back(i);
    patch.interior_corner_curvature = Rat(1, 3) + Rat(1, 7) - Rat(1, 2);
    return patch;
}

}  // namespace gcurv
