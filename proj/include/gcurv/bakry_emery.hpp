#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "gcurv/graph.hpp"
#include "gcurv/rational.hpp"

namespace gcurv {

// Carre du champ: 2*Gamma(f,h)(x) = Delta(fh)(x) - f(x) Delta h(x) - Delta f(x) h(x).
// Computed both from that definition and from the neighbor-difference sum
// (1/(2 d_x)) sum (f(z)-f(x))(h(z)-h(x)); the two must agree exactly.
Rat gamma(const Graph& g, std::span<const Rat> f, std::span<const Rat> h, Vertex x);

// Iterated form: 2*Gamma2(f,h)(x) = Delta Gamma(f,h)(x) - Gamma(f, Delta h)(x)
//                                   - Gamma(Delta f, h)(x).
// Depends only on f,h restricted to the 2-ball of x.
Rat gamma2(const Graph& g, std::span<const Rat> f, std::span<const Rat> h, Vertex x);

// Float path (sum form only), for properties that mix Gamma with the heat
// semigroup.
double gamma(const Graph& g, std::span<const double> f, std::span<const double> h,
             Vertex x);

// Dimension parameter of the curvature-dimension inequality: any positive
// rational, or infinity.
class Dimension {
public:
    static Dimension infinite() { return Dimension(true, Rat(0)); }
    static Dimension finite(const Rat& n);

    bool is_infinite() const { return infinite_; }
    const Rat& value() const { return n_; }
    std::string str() const { return infinite_ ? "inf" : rat_string(n_); }

private:
    Dimension(bool inf, Rat n) : infinite_(inf), n_(std::move(n)) {}
    bool infinite_;
    Rat n_;
};

Dimension parse_dimension(const std::string& text);

// The punctured 2-ball of a vertex: center first, then the sphere S1 sorted,
// then S2 sorted. The pencil's coordinates are the non-center entries (the
// center is pinned to f(x) = 0, which quotients out constants).
struct BallIndex {
    Vertex center;
    std::vector<Vertex> vertices;  // center, S1..., S2...
    int s1_count = 0;
    int s2_count = 0;

    int coord_count() const { return s1_count + s2_count; }
    Vertex coord_vertex(int i) const { return vertices[1 + i]; }
    bool coord_in_b1(int i) const { return i < s1_count; }
};

BallIndex ball2_index(const Graph& g, Vertex x);

// Exact matrices of the quadratic forms on the 2-ball coordinates:
//   gamma2_form  f -> Gamma2(f)(x) - (1/n)(Delta f(x))^2   (n = inf drops the term)
//   gamma_form   f -> Gamma(f)(x)
//   laplacian_row  f -> Delta f(x)
struct CurvaturePencil {
    BallIndex ball;
    RatMatrix gamma2_form;
    RatMatrix gamma_form;
    std::vector<Rat> laplacian_row;
};

CurvaturePencil build_pencil(const Graph& g, Vertex x, const Dimension& n);

struct BECurvatureResult {
    double curvature = -std::numeric_limits<double>::infinity();
    // minimizing function on the 2-ball coordinates, normalized to
    // Gamma(f)(x) = 1; f(center) = 0
    std::vector<double> minimizer;
    // Gamma2(f)(x) - (1/n)(Delta f(x))^2 - K Gamma(f)(x) at the minimizer,
    // evaluated through the Gamma operators (not the pencil matrices)
    double slack = 0.0;
};

// Largest K with Gamma2(f)(x) >= (1/n)(Delta f(x))^2 + K Gamma(f)(x) for all f:
// the smallest generalized eigenvalue of the pencil after eliminating the
// Gamma-kernel block (functions supported on S2) by a Schur complement.
BECurvatureResult be_curvature(const Graph& g, Vertex x, const Dimension& n);

// min over vertices of be_curvature; the graph satisfies CD(K,n) exactly for
// K up to this value.
double cd_constant(const Graph& g, const Dimension& n);

}  // namespace gcurv
