#pragma once

#include <string>
#include <vector>

#include "gcurv/graph.hpp"
#include "gcurv/rational.hpp"

namespace gcurv {

// Cyclic ordering of each vertex's neighbors; the combinatorial stand-in for
// a surface embedding. rotation[v] must be a permutation of neighbors(v).
using RotationSystem = std::vector<std::vector<Vertex>>;

struct Face {
    std::vector<Vertex> boundary;  // cyclic vertex sequence
    int degree() const { return static_cast<int>(boundary.size()); }
    bool is_simple_cycle() const;
};

struct Tessellation {
    Graph graph;
    RotationSystem rotation;
    std::vector<Face> faces;
};

// Traces the orbits of the next-edge rule: after the directed edge (a,b) comes
// (b, successor of a in rotation[b]). Each directed edge is consumed exactly
// once; the orbits are the embedding's faces. Throws InvalidRotationError if
// some rotation[v] is not a permutation of adj(v), DisconnectedError if g is
// not connected.
std::vector<Face> faces_from_rotation(const Graph& g, const RotationSystem& rot);

// Inverse direction: recovers the rotation system from a consistently
// oriented face list (each directed edge appearing in exactly one face).
RotationSystem rotation_from_oriented_faces(const Graph& g,
                                            const std::vector<std::vector<Vertex>>& faces);

Tessellation make_tessellation(Graph g, RotationSystem rot);

// Diagnostic report for the planar-tessellation conditions. Nothing throws;
// each condition is reported separately so callers can see which one broke.
struct TessellationCheck {
    bool edge_in_two_faces = false;       // (i) every edge lies in two distinct faces
    bool boundaries_simple = false;       // (ii) every face boundary is a simple cycle
    bool face_intersections_ok = false;   // (iii) pairwise intersections are
                                          //       empty / a vertex / an edge
    bool degree_bounds = false;           // d_v >= 3 and d_f >= 3
    bool euler_sphere = false;            // |V| - |E| + |F| = 2
    std::vector<std::string> failures;    // human-readable details

    bool valid() const {
        return edge_in_two_faces && boundaries_simple && face_intersections_ok &&
               degree_bounds && euler_sphere;
    }
};

TessellationCheck check_tessellation(const Tessellation& t);

// Corner curvature 1/d_v + 1/d_f - 1/2 for a vertex on the given face
// (by index into t.faces). Throws NotIncidentError.
Rat corner_curvature(const Tessellation& t, Vertex v, int face_index);

// Vertex curvature: sum of corner curvatures over incident faces. Computed by
// the corner sum and by the closed form 1 - d_v/2 + sum 1/d_f, which must
// agree exactly.
Rat vertex_curvature(const Tessellation& t, Vertex v);

// Sum of all vertex curvatures; exactly 2 for a valid finite tessellation.
// Throws InvalidTessellationError when check_tessellation fails.
Rat gauss_bonnet_sum(const Tessellation& t);

// Vertices v' != v0 where the distance from v0 attains a local maximum:
// d(v0,v') >= d(v0,v) for every neighbor v of v'.
std::vector<Vertex> cut_locus(const Graph& g, Vertex v0);

struct CheegerResult {
    Rat value;
    std::vector<Vertex> witness;  // a minimizing subset
};

// Exact minimum of |boundary edges| / vol(W) over nonempty W with
// 2|W| <= |V|, vol(W) = sum of degrees. Brute force; throws TooLargeError
// above the limit and DisconnectedError on disconnected input.
CheegerResult cheeger_constant(const Graph& g, int brute_force_limit = 20);

// Classification of everywhere-positively-curved tessellations: such a graph
// is a prism, an antiprism, or has at most 208 vertices.
struct HiguchiClassification {
    enum class Kind { Prism, Antiprism, SmallGraph, NotApplicable, Violation };
    Kind kind;
    int parameter = 0;  // n for Prism/Antiprism, |V| for SmallGraph
};

HiguchiClassification higuchi_classify(const Tessellation& t);

// Canonical embeddings for the families used by tests and the verification
// zoo. Rotations are the natural planar ones.
Tessellation cycle_tessellation(int n);
Tessellation prism_tessellation(int n);
Tessellation antiprism_tessellation(int n);
Tessellation tetrahedron_tessellation();   // K_4 with its planar rotation
Tessellation icosahedron_tessellation();   // 12 vertices, 20 triangles
Tessellation theta_tessellation();         // two degree-3 vertices, three parallel
                                           // 2-paths; violates condition (iii)

// A finite two-layer patch of the heptagonal {7,3} tiling. Interior vertices
// (the central heptagon) see exactly the corners of the infinite tiling, all
// with corner curvature -1/42. Boundary vertices are truncated, so the patch
// is not itself a tessellation.
struct HyperbolicPatch {
    Tessellation tess;
    std::vector<Vertex> interior;
    Rat interior_corner_curvature;  // common value at interior corners
};

HyperbolicPatch heptagon_patch();

}  // namespace gcurv
