#include "gcurv/transport.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace gcurv {

ProbMeasure ProbMeasure::from_entries(std::vector<std::pair<Vertex, Rat>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ProbMeasure m;
    Rat total = 0;
    for (auto& [v, mass] : entries) {
        if (mass == 0) continue;
        if (mass < 0) throw Error("measure masses must be positive");
        if (!m.support.empty() && m.support.back().first == v)
            throw Error("duplicate support vertex " + std::to_string(v));
        total += mass;
        m.support.emplace_back(v, std::move(mass));
    }
    if (total != 1) throw Error("measure masses must sum to 1, got " + rat_string(total));
    return m;
}

Rat ProbMeasure::mass_at(Vertex v) const {
    auto it = std::lower_bound(support.begin(), support.end(), v,
                               [](const auto& e, Vertex x) { return e.first < x; });
    if (it != support.end() && it->first == v) return it->second;
    return Rat(0);
}

std::vector<Vertex> ProbMeasure::support_vertices() const {
    std::vector<Vertex> out;
    out.reserve(support.size());
    for (const auto& [v, _] : support) out.push_back(v);
    return out;
}

ProbMeasure dirac(Vertex x) {
    return ProbMeasure::from_entries({{x, Rat(1)}});
}

ProbMeasure mu(const Graph& g, Vertex x, const Rat& p) {
    g.check_vertex(x);
    if (p < 0 || p > 1) throw IdlenessOutOfRangeError(rat_string(p));
    if (g.degree(x) == 0) throw IsolatedVertexError(x);
    std::vector<std::pair<Vertex, Rat>> entries;
    if (p > 0) entries.emplace_back(x, p);
    Rat w = (Rat(1) - p) / g.degree(x);
    if (w > 0)
        for (Vertex z : g.neighbors(x)) entries.emplace_back(z, w);
    return ProbMeasure::from_entries(std::move(entries));
}

const Rat& KantorovichPotential::at(Vertex v) const {
    auto it = std::lower_bound(values.begin(), values.end(), v,
                               [](const auto& e, Vertex x) { return e.first < x; });
    if (it == values.end() || it->first != v)
        throw Error("potential is not defined at vertex " + std::to_string(v));
    return it->second;
}

bool KantorovichPotential::defined_at(Vertex v) const {
    auto it = std::lower_bound(values.begin(), values.end(), v,
                               [](const auto& e, Vertex x) { return e.first < x; });
    return it != values.end() && it->first == v;
}

namespace {

// Primal network simplex specialized to the dense bipartite transportation
// problem. Node indices: sources 0..m-1, sinks m..m+n-1. A basis is a
// spanning tree with m+n-1 arcs; cell (i,j) has the flat index i*n + j, and
// Bland's rule picks the smallest such index for both the entering arc and
// the tie-broken leaving arc.
class TransportSimplex {
public:
    TransportSimplex(std::vector<Rat> supply, std::vector<Rat> demand,
                     std::vector<std::vector<long>> cost)
        : m_(static_cast<int>(supply.size())),
          n_(static_cast<int>(demand.size())),
          supply_(std::move(supply)),
          demand_(std::move(demand)),
          cost_(std::move(cost)),
          flow_(m_, std::vector<Rat>(n_, Rat(0))),
          basic_(m_, std::vector<bool>(n_, false)) {
        northwest_corner();
        while (pivot_once()) {
        }
        compute_duals();
    }

    const std::vector<std::vector<Rat>>& flow() const { return flow_; }
    const std::vector<Rat>& source_duals() const { return u_; }
    const std::vector<Rat>& sink_duals() const { return v_; }

    Rat objective() const {
        Rat total = 0;
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < n_; ++j)
                if (flow_[i][j] != 0) total += Rat(cost_[i][j]) * flow_[i][j];
        return total;
    }

private:
    void northwest_corner() {
        auto a = supply_;
        auto b = demand_;
        int i = 0, j = 0;
        while (true) {
            Rat f = std::min(a[i], b[j]);
            basic_[i][j] = true;
            flow_[i][j] = f;
            a[i] -= f;
            b[j] -= f;
            if (i == m_ - 1 && j == n_ - 1) break;
            // advance one index per step so the staircase stays a tree with
            // exactly m+n-1 (possibly degenerate) arcs
            if (a[i] == 0 && i < m_ - 1)
                ++i;
            else
                ++j;
        }
    }

    void compute_duals() {
        u_.assign(m_, Rat(0));
        v_.assign(n_, Rat(0));
        std::vector<bool> us(m_, false), vs(n_, false);
        us[0] = true;
        // propagate u_i + v_j = c_ij along the basis tree
        bool progress = true;
        while (progress) {
            progress = false;
            for (int i = 0; i < m_; ++i)
                for (int j = 0; j < n_; ++j) {
                    if (!basic_[i][j]) continue;
                    if (us[i] && !vs[j]) {
                        v_[j] = Rat(cost_[i][j]) - u_[i];
                        vs[j] = true;
                        progress = true;
                    } else if (vs[j] && !us[i]) {
                        u_[i] = Rat(cost_[i][j]) - v_[j];
                        us[i] = true;
                        progress = true;
                    }
                }
        }
        for (int i = 0; i < m_; ++i)
            if (!us[i]) throw Error("transport basis is not a spanning tree");
        for (int j = 0; j < n_; ++j)
            if (!vs[j]) throw Error("transport basis is not a spanning tree");
    }

    // Cycle created by the entering arc: the tree path from source ei to sink
    // ej, alternating sink/source nodes. Returns the cells along the path;
    // cells at even positions (0-based) receive -theta.
    std::vector<std::pair<int, int>> tree_path_cells(int ei, int ej) const {
        // parent search over tree nodes: sources 0..m-1, sinks m..m+n-1
        int total = m_ + n_;
        std::vector<int> parent(total, -2);
        std::vector<int> stack{ei};
        parent[ei] = -1;
        while (!stack.empty()) {
            int node = stack.back();
            stack.pop_back();
            if (node == m_ + ej) break;
            if (node < m_) {
                for (int j = 0; j < n_; ++j)
                    if (basic_[node][j] && parent[m_ + j] == -2) {
                        parent[m_ + j] = node;
                        stack.push_back(m_ + j);
                    }
            } else {
                int j = node - m_;
                for (int i = 0; i < m_; ++i)
                    if (basic_[i][j] && parent[i] == -2) {
                        parent[i] = node;
                        stack.push_back(i);
                    }
            }
        }
        if (parent[m_ + ej] == -2) throw Error("transport basis lost connectivity");
        std::vector<int> path;  // node sequence from sink ej back to source ei
        for (int node = m_ + ej; node != -1; node = parent[node]) path.push_back(node);
        std::reverse(path.begin(), path.end());  // ei ... ej
        std::vector<std::pair<int, int>> cells;
        for (size_t k = 0; k + 1 < path.size(); ++k) {
            int a = path[k], b = path[k + 1];
            int i = std::min(a, b);
            int j = std::max(a, b) - m_;
            cells.emplace_back(i, j);
        }
        return cells;
    }

    bool pivot_once() {
        compute_duals();
        int ei = -1, ej = -1;
        for (int i = 0; i < m_ && ei < 0; ++i)
            for (int j = 0; j < n_; ++j) {
                if (basic_[i][j]) continue;
                if (Rat(cost_[i][j]) - u_[i] - v_[j] < 0) {
                    ei = i;
                    ej = j;
                    break;
                }
            }
        if (ei < 0) return false;

        auto cells = tree_path_cells(ei, ej);
        // entering gets +theta; path cells alternate starting with - at ei
        Rat theta(-1);
        int leave_i = -1, leave_j = -1;
        for (size_t k = 0; k < cells.size(); k += 2) {
            auto [i, j] = cells[k];
            if (theta < 0 || flow_[i][j] < theta ||
                (flow_[i][j] == theta &&
                 (i * n_ + j) < (leave_i * n_ + leave_j))) {
                theta = flow_[i][j];
                leave_i = i;
                leave_j = j;
            }
        }
        for (size_t k = 0; k < cells.size(); ++k) {
            auto [i, j] = cells[k];
            if (k % 2 == 0)
                flow_[i][j] -= theta;
            else
                flow_[i][j] += theta;
        }
        flow_[ei][ej] += theta;
        basic_[ei][ej] = true;
        basic_[leave_i][leave_j] = false;
        return true;
    }

    int m_, n_;
    std::vector<Rat> supply_, demand_;
    std::vector<std::vector<long>> cost_;
    std::vector<std::vector<Rat>> flow_;
    std::vector<std::vector<bool>> basic_;
    std::vector<Rat> u_, v_;
};

}  // namespace

namespace {

// Distance lookup over the support union: either the caller's all-pairs
// table or per-vertex BFS fields computed once for this call.
class DistLookup {
public:
    DistLookup(const Graph& g, const std::set<Vertex>& domain,
               const AllPairsDistances* cache)
        : cache_(cache) {
        if (!cache_)
            for (Vertex v : domain) local_.emplace(v, bfs_distances(g, v));
    }

    int operator()(Vertex a, Vertex b) const {
        return cache_ ? (*cache_)(a, b) : local_.at(a).dist[b];
    }

    bool reachable(Vertex a, Vertex b) const {
        return (*this)(a, b) != DistanceField::kUnreachable;
    }

private:
    const AllPairsDistances* cache_;
    std::map<Vertex, DistanceField> local_;
};

}  // namespace

W1Certificate wasserstein(const Graph& g, const ProbMeasure& mu_src,
                          const ProbMeasure& nu_dst, const AllPairsDistances* cache) {
    auto sources = mu_src.support_vertices();
    auto sinks = nu_dst.support_vertices();
    if (sources.empty() || sinks.empty()) throw Error("empty measure support");
    int m = static_cast<int>(sources.size());
    int n = static_cast<int>(sinks.size());

    std::set<Vertex> domain(sources.begin(), sources.end());
    domain.insert(sinks.begin(), sinks.end());
    DistLookup dist(g, domain, cache);
    for (Vertex z : domain)
        if (!dist.reachable(sources[0], z)) throw DisconnectedSupportsError();

    std::vector<std::vector<long>> cost(m, std::vector<long>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) cost[i][j] = dist(sources[i], sinks[j]);

    std::vector<Rat> supply, demand;
    for (const auto& [v, mass] : mu_src.support) supply.push_back(mass);
    for (const auto& [v, mass] : nu_dst.support) demand.push_back(mass);

    TransportSimplex simplex(supply, demand, cost);

    W1Certificate cert;
    cert.value = simplex.objective();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (simplex.flow()[i][j] > 0)
                cert.plan.entries.push_back({sources[i], sinks[j], simplex.flow()[i][j]});
    std::sort(cert.plan.entries.begin(), cert.plan.entries.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(a.from, a.to) < std::tie(b.from, b.to);
              });

    // dual potential: Phi(z) = min_j [ d(z, sink_j) - v_j ], a 1-Lipschitz
    // function agreeing with an optimal dual; then pinned to 0 at the first
    // sink-support vertex
    auto phi_raw = [&](Vertex z) {
        Rat best;
        bool first = true;
        for (int j = 0; j < n; ++j) {
            Rat cand = Rat(dist(sinks[j], z)) - simplex.sink_duals()[j];
            if (first || cand < best) {
                best = cand;
                first = false;
            }
        }
        return best;
    };
    Rat shift = phi_raw(sinks[0]);
    for (Vertex z : domain) cert.potential.values.emplace_back(z, phi_raw(z) - shift);

    // certificate invariants, all exact
    for (const auto& [v, mass] : mu_src.support) {
        Rat row = 0;
        for (const auto& e : cert.plan.entries)
            if (e.from == v) row += e.mass;
        if (row != mass) throw Error("plan row marginal mismatch");
    }
    for (const auto& [v, mass] : nu_dst.support) {
        Rat col = 0;
        for (const auto& e : cert.plan.entries)
            if (e.to == v) col += e.mass;
        if (col != mass) throw Error("plan column marginal mismatch");
    }
    Rat dual_value = 0;
    for (Vertex z : domain)
        dual_value += cert.potential.at(z) * (mu_src.mass_at(z) - nu_dst.mass_at(z));
    if (dual_value != cert.value) throw Error("duality gap is nonzero");
    for (Vertex a : domain)
        for (Vertex b : domain) {
            if (a >= b) continue;
            Rat diff = cert.potential.at(a) - cert.potential.at(b);
            if (diff < 0) diff = -diff;
            if (diff > dist(a, b)) throw Error("potential is not 1-Lipschitz");
        }
    for (const auto& e : cert.plan.entries)
        if (cert.potential.at(e.from) - cert.potential.at(e.to) != dist(e.from, e.to))
            throw Error("complementary slackness violated");
    return cert;
}

KantorovichPotential extend_lipschitz(const Graph& g, const KantorovichPotential& phi) {
    if (phi.values.empty()) return phi;
    KantorovichPotential out;
    std::vector<DistanceField> fields;
    for (const auto& [u, _] : phi.values) fields.push_back(bfs_distances(g, u));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Rat best;
        bool found = false;
        for (size_t k = 0; k < phi.values.size(); ++k) {
            if (!fields[k].reachable(v)) continue;
            Rat cand = phi.values[k].second + Rat(fields[k][v]);
            if (!found || cand < best) {
                best = cand;
                found = true;
            }
        }
        if (found) out.values.emplace_back(v, best);
    }
    return out;
}

Rat ollivier_curvature(const Graph& g, Vertex x, Vertex y, const Rat& p,
                       const AllPairsDistances* cache) {
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y) throw SameVertexError(x);
    int d = cache ? (*cache)(x, y) : bfs_distances(g, x)[y];
    if (d == DistanceField::kUnreachable) throw DisconnectedPairError(x, y);
    auto cert = wasserstein(g, mu(g, x, p), mu(g, y, p), cache);
    return Rat(1) - cert.value / d;
}

Rat lly_curvature(const Graph& g, Vertex x, Vertex y, const AllPairsDistances* cache) {
    Rat k_half = ollivier_curvature(g, x, y, Rat(1, 2), cache);
    Rat k_three_quarters = ollivier_curvature(g, x, y, Rat(3, 4), cache);
    if (2 * k_half != 4 * k_three_quarters)
        throw Error("K_p/(1-p) is not constant between p=1/2 and p=3/4");
    return 2 * k_half;
}

std::vector<std::pair<Rat, Rat>> curvature_profile(const Graph& g, Vertex x, Vertex y,
                                                   std::span<const Rat> grid) {
    std::vector<std::pair<Rat, Rat>> out;
    for (const Rat& p : grid) {
        if (p < 0 || p > 1) throw IdlenessOutOfRangeError(rat_string(p));
        out.emplace_back(p, ollivier_curvature(g, x, y, p));
    }
    return out;
}

std::string describe_profile(std::span<const std::pair<Rat, Rat>> profile) {
    if (profile.size() < 2) return "profile too short to describe";
    std::ostringstream os;
    size_t start = 0;
    auto slope = [&](size_t a, size_t b) {
        return (profile[b].second - profile[a].second) / (profile[b].first - profile[a].first);
    };
    for (size_t k = 1; k + 1 <= profile.size(); ++k) {
        bool boundary = k + 1 == profile.size() ||
                        slope(k - 1, k) != slope(k, k + 1);
        if (boundary) {
            os << "affine on [" << rat_string(profile[start].first) << ", "
               << rat_string(profile[k].first) << "] with slope "
               << rat_string(slope(start, k)) << "; ";
            start = k;
        }
    }
    return os.str();
}

Rat global_curvature_bound(const Graph& g, const Rat& p, bool cache_distances) {
    if (!g.is_connected())
        throw DisconnectedError("global curvature bound needs a connected graph");
    auto edge_list = g.edges();
    if (edge_list.empty()) throw TooSmallError("graph has no edges");
    std::optional<AllPairsDistances> table;
    if (cache_distances) table.emplace(g);
    const AllPairsDistances* cache = table ? &*table : nullptr;
    bool first = true;
    Rat bound;
    for (auto [x, y] : edge_list) {
        Rat k = ollivier_curvature(g, x, y, p, cache);
        if (first || k < bound) {
            bound = k;
            first = false;
        }
    }
    // spot check on non-adjacent pairs: the edge minimum bounds all pairs
    std::vector<std::pair<Vertex, Vertex>> far_pairs;
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        for (Vertex y = x + 1; y < g.vertex_count(); ++y)
            if (!g.has_edge(x, y)) far_pairs.emplace_back(x, y);
    std::mt19937 rng(20240517);
    std::shuffle(far_pairs.begin(), far_pairs.end(), rng);
    size_t samples = std::min<size_t>(far_pairs.size(), 30);
    for (size_t k = 0; k < samples; ++k) {
        auto [x, y] = far_pairs[k];
        if (ollivier_curvature(g, x, y, p, cache) < bound)
            throw Error("non-adjacent pair violates the edge curvature bound");
    }
    return bound;
}

}  // namespace gcurv
