#include "gcurv/spectral.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace gcurv {

Rat laplacian_entry(const Graph& g, Vertex x, Vertex y) {
    g.check_vertex(y);
    if (g.degree(x) == 0) throw IsolatedVertexError(x);
    if (x == y) return Rat(-1);
    if (g.has_edge(x, y)) return Rat(1, g.degree(x));
    return Rat(0);
}

namespace {

template <typename T>
T laplacian_at(const Graph& g, std::span<const T> f, Vertex x) {
    if (g.degree(x) == 0) throw IsolatedVertexError(x);
    T acc(0);
    for (Vertex z : g.neighbors(x)) acc += f[z] - f[x];
    return acc / T(g.degree(x));
}

}  // namespace

Rat apply_laplacian(const Graph& g, std::span<const Rat> f, Vertex x) {
    g.check_vertex(x);
    return laplacian_at<Rat>(g, f, x);
}

double apply_laplacian(const Graph& g, std::span<const double> f, Vertex x) {
    g.check_vertex(x);
    return laplacian_at<double>(g, f, x);
}

double Spectrum::lambda1() const {
    for (int i = 0; i < eigenvalues.size(); ++i)
        if (eigenvalues[i] > kZeroCutoff) return eigenvalues[i];
    return 0.0;
}

Spectrum spectrum(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedError("spectrum needs a connected graph");
    int n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 0) throw IsolatedVertexError(v);

    // symmetric conjugate Id - D^{-1/2} A D^{-1/2}, assembled from the exact
    // rational entries
    Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd dsqrt(n);
    for (Vertex v = 0; v < n; ++v) dsqrt[v] = std::sqrt(static_cast<double>(g.degree(v)));
    for (Vertex x = 0; x < n; ++x) {
        sym(x, x) = 1.0;
        for (Vertex y : g.neighbors(x)) sym(x, y) = -1.0 / (dsqrt[x] * dsqrt[y]);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success)
        throw Error("eigensolver failed on the normalized Laplacian");

    Spectrum s;
    s.eigenvalues = solver.eigenvalues();
    s.degrees = Eigen::VectorXd(n);
    for (Vertex v = 0; v < n; ++v) s.degrees[v] = g.degree(v);
    s.vectors = solver.eigenvectors();
    for (Vertex v = 0; v < n; ++v) s.vectors.row(v) /= dsqrt[v];

    // contract: residual of every eigenpair of -Delta under 1e-10
    for (int k = 0; k < n; ++k) {
        for (Vertex x = 0; x < n; ++x) {
            double lap = 0.0;
            for (Vertex y : g.neighbors(x)) lap += s.vectors(y, k) - s.vectors(x, k);
            lap /= g.degree(x);
            double residual = std::abs(-lap - s.eigenvalues[k] * s.vectors(x, k));
            if (residual > 1e-10)
                throw Error("eigenpair residual " + std::to_string(residual) +
                            " exceeds 1e-10");
        }
    }
    return s;
}

std::vector<double> heat_apply(const Spectrum& s, std::span<const double> f, double t) {
    if (t < 0) throw NegativeTimeError(t);
    int n = static_cast<int>(s.eigenvalues.size());
    Eigen::VectorXd fv(n);
    for (int i = 0; i < n; ++i) fv[i] = f[i];
    // coefficients in the D-orthonormal basis: c_k = <f, v_k>_D
    Eigen::VectorXd weighted = s.degrees.asDiagonal() * fv;
    Eigen::VectorXd coeff = s.vectors.transpose() * weighted;
    for (int k = 0; k < n; ++k) coeff[k] *= std::exp(-s.eigenvalues[k] * t);
    Eigen::VectorXd out = s.vectors * coeff;
    return std::vector<double>(out.data(), out.data() + n);
}

std::vector<double> heat_apply(const Graph& g, std::span<const double> f, double t) {
    if (t < 0) throw NegativeTimeError(t);
    return heat_apply(spectrum(g), f, t);
}

std::vector<Rat> average_operator(const Graph& g, std::span<const Rat> f, const Rat& p) {
    if (p < 0 || p > 1) throw IdlenessOutOfRangeError(rat_string(p));
    int n = g.vertex_count();
    std::vector<Rat> out(n);
    for (Vertex x = 0; x < n; ++x) {
        if (g.degree(x) == 0) {
            out[x] = f[x];
            continue;
        }
        Rat acc = p * f[x];
        Rat w = (Rat(1) - p) / g.degree(x);
        for (Vertex z : g.neighbors(x)) acc += w * f[z];
        // cross-check against f + (1-p) Delta f, exactly
        Rat alt = f[x] + (Rat(1) - p) * laplacian_at<Rat>(g, f, x);
        if (alt != acc) throw Error("average operator identities disagree");
        out[x] = acc;
    }
    return out;
}

}  // namespace gcurv
