#pragma once

#include <span>
#include <string>
#include <vector>

#include "gcurv/graph.hpp"

namespace gcurv {

// Generators for the example families used throughout the test zoo.
// Every generator returns a canonical Graph (simple, symmetric, sorted).

Graph complete(int n);                 // K_n, n >= 1
Graph cycle(int n);                    // C_n, n >= 3
Graph path(int n);                     // P_n, n >= 1
Graph hypercube(int n);                // Q^n: 2^n vertices, edge iff ids differ in one bit
Graph prism(int n);                    // two n-cycles u_i, v_i plus rungs u_i ~ v_i
Graph antiprism(int n);                // prism plus the diagonals u_i ~ v_{i+1}
Graph dumbbell(int n, int m);          // K_n and K_m joined by one bridge edge (0, n)
Graph antitree(int levels);            // K_1,...,K_L stacked, consecutive levels fully joined

// Vertex ids of antitree level k (1-based): a contiguous block of k ids.
std::pair<Vertex, Vertex> antitree_level_range(int levels, int k);  // [first, last]

// Vertices of the truncated antitree whose 2-ball (including all degrees seen
// by the Gamma2 form) is identical to the infinite antitree's, i.e. levels
// 1..L-2. Curvature reported outside this set reflects the truncation.
std::vector<Vertex> antitree_untruncated_vertices(int levels);

// Name-based dispatch used by the CLI and zoo configs, e.g.
// generate("prism", {5}). Throws ParseError for unknown families and
// TooSmallError for bad parameters.
Graph generate(const std::string& family, std::span<const int> params);

}  // namespace gcurv
