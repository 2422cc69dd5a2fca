#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gcurv/graph.hpp"
#include "gcurv/rational.hpp"

namespace gcurv {

// Probability measure with finite support: sorted (vertex, mass) pairs with
// positive masses summing to exactly 1.
struct ProbMeasure {
    std::vector<std::pair<Vertex, Rat>> support;

    static ProbMeasure from_entries(std::vector<std::pair<Vertex, Rat>> entries);

    Rat mass_at(Vertex v) const;
    std::vector<Vertex> support_vertices() const;
};

ProbMeasure dirac(Vertex x);

// The lazy-walk step distribution: mass p at x and (1-p)/d_x at each
// neighbor. Zero-mass points are omitted from the support.
ProbMeasure mu(const Graph& g, Vertex x, const Rat& p);

struct TransportPlan {
    struct Entry {
        Vertex from;
        Vertex to;
        Rat mass;
    };
    std::vector<Entry> entries;  // sorted by (from, to), masses > 0
};

struct KantorovichPotential {
    std::vector<std::pair<Vertex, Rat>> values;  // sorted by vertex

    const Rat& at(Vertex v) const;
    bool defined_at(Vertex v) const;
};

// Exact optimum of the transportation problem together with its dual
// certificate. Invariants (checked on construction): the plan's marginals
// equal the inputs, cost(plan) = value = sum Phi (mu - nu) with zero gap, the
// potential is 1-Lipschitz on the support union, and every positive plan
// entry satisfies Phi(from) - Phi(to) = d(from, to).
struct W1Certificate {
    Rat value;
    TransportPlan plan;
    KantorovichPotential potential;
};

// Wasserstein-1 distance by primal network simplex on the bipartite
// transportation graph: integer BFS costs, exact rational pivots, Bland's
// anti-cycling rule, dual node potentials harvested at termination. Throws
// DisconnectedSupportsError when the supports span several components.
// Distances are recomputed per call unless a precomputed table is supplied.
W1Certificate wasserstein(const Graph& g, const ProbMeasure& mu, const ProbMeasure& nu,
                          const AllPairsDistances* cache = nullptr);

// McShane extension of a 1-Lipschitz potential to every vertex reachable from
// its domain: Phi(v) = min over domain u of Phi(u) + d(u, v).
KantorovichPotential extend_lipschitz(const Graph& g, const KantorovichPotential& phi);

// K_p(x,y) = 1 - W1(mu_x^p, mu_y^p) / d(x,y); exactly 0 at p = 1.
Rat ollivier_curvature(const Graph& g, Vertex x, Vertex y, const Rat& p,
                       const AllPairsDistances* cache = nullptr);

// Lin-Lu-Yau curvature via the constancy of K_p/(1-p) on [1/2, 1): returns
// 2 K_{1/2}(x,y), cross-checked exactly against 4 K_{3/4}(x,y).
Rat lly_curvature(const Graph& g, Vertex x, Vertex y,
                  const AllPairsDistances* cache = nullptr);

// K_p over a grid of idleness values.
std::vector<std::pair<Rat, Rat>> curvature_profile(const Graph& g, Vertex x, Vertex y,
                                                   std::span<const Rat> grid);

// Descriptive summary of the maximal affine runs of a profile (the examples
// behave piecewise-linearly; no theorem is assumed).
std::string describe_profile(std::span<const std::pair<Rat, Rat>> profile);

// min over adjacent pairs of K_p; every pair (adjacent or not) satisfies
// K_p(x,y) >= this bound, which is additionally spot-checked on a sample of
// non-adjacent pairs. cache_distances trades O(n^2) memory for one BFS sweep.
Rat global_curvature_bound(const Graph& g, const Rat& p, bool cache_distances = false);

}  // namespace gcurv
