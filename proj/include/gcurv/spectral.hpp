#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gcurv/graph.hpp"
#include "gcurv/rational.hpp"

namespace gcurv {

// Entry (x,y) of the normalized Laplacian: 1/d_x at neighbors, -1 on the
// diagonal, 0 elsewhere. Rows sum to zero exactly.
Rat laplacian_entry(const Graph& g, Vertex x, Vertex y);

// Delta f(x) = (1/d_x) sum over z ~ x of (f(z) - f(x)).
Rat apply_laplacian(const Graph& g, std::span<const Rat> f, Vertex x);
double apply_laplacian(const Graph& g, std::span<const double> f, Vertex x);

// Eigen-decomposition of -Delta via the symmetric conjugate
// D^{1/2}(-Delta)D^{-1/2} = Id - D^{-1/2} A D^{-1/2}. Eigenvalues live in
// [0,2] with lambda_0 = 0; eigenvectors are returned in the degree-weighted
// inner product (columns of `vectors`, D-orthonormal).
struct Spectrum {
    Eigen::VectorXd eigenvalues;  // ascending
    Eigen::MatrixXd vectors;      // column k satisfies (-Delta) v_k = lambda_k v_k
    Eigen::VectorXd degrees;

    // smallest eigenvalue above the zero cutoff; positive iff connected
    double lambda1() const;

    static constexpr double kZeroCutoff = 1e-9;
};

Spectrum spectrum(const Graph& g);

// Heat semigroup P_t = e^{t Delta} applied through the eigendecomposition.
std::vector<double> heat_apply(const Spectrum& s, std::span<const double> f, double t);
std::vector<double> heat_apply(const Graph& g, std::span<const double> f, double t);

// Lazy-walk average M_p f(x) = p f(x) + sum over z ~ x of ((1-p)/d_x) f(z).
// Identically equal to f + (1-p) Delta f; both forms are computed and must
// agree exactly.
std::vector<Rat> average_operator(const Graph& g, std::span<const Rat> f, const Rat& p);

}  // namespace gcurv
