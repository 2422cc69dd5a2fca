#include "gcurv/bakry_emery.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "gcurv/parallel.hpp"
#include "gcurv/spectral.hpp"

namespace gcurv {

namespace {

template <typename T>
T gamma_sum_at(const Graph& g, std::span<const T> f, std::span<const T> h, Vertex z) {
    T acc(0);
    for (Vertex w : g.neighbors(z)) acc += (f[w] - f[z]) * (h[w] - h[z]);
    return acc / T(2 * g.degree(z));
}

template <typename T>
T laplacian_value(const Graph& g, std::span<const T> f, Vertex z) {
    T acc(0);
    for (Vertex w : g.neighbors(z)) acc += f[w] - f[z];
    return acc / T(g.degree(z));
}

}  // namespace

Rat gamma(const Graph& g, std::span<const Rat> f, std::span<const Rat> h, Vertex x) {
    g.check_vertex(x);
    if (g.degree(x) == 0) return Rat(0);
    // definitional form via Delta(fh)
    Rat dfh(0);
    for (Vertex z : g.neighbors(x)) dfh += f[z] * h[z] - f[x] * h[x];
    dfh /= g.degree(x);
    Rat defn = (dfh - f[x] * laplacian_value<Rat>(g, h, x) -
                laplacian_value<Rat>(g, f, x) * h[x]) /
               2;
    Rat sum = gamma_sum_at<Rat>(g, f, h, x);
    if (defn != sum) throw Error("Gamma forms disagree at vertex " + std::to_string(x));
    return sum;
}

double gamma(const Graph& g, std::span<const double> f, std::span<const double> h,
             Vertex x) {
    g.check_vertex(x);
    if (g.degree(x) == 0) return 0.0;
    return gamma_sum_at<double>(g, f, h, x);
}

Rat gamma2(const Graph& g, std::span<const Rat> f, std::span<const Rat> h, Vertex x) {
    g.check_vertex(x);
    if (g.degree(x) == 0) return Rat(0);
    int n = g.vertex_count();

    // Gamma(f,h), Delta f, Delta h as functions on {x} union S1(x); everything
    // they touch stays inside the 2-ball
    std::vector<Rat> gfh(n, Rat(0)), df(n, Rat(0)), dh(n, Rat(0));
    gfh[x] = gamma_sum_at<Rat>(g, f, h, x);
    df[x] = laplacian_value<Rat>(g, f, x);
    dh[x] = laplacian_value<Rat>(g, h, x);
    for (Vertex z : g.neighbors(x)) {
        gfh[z] = gamma_sum_at<Rat>(g, f, h, z);
        df[z] = laplacian_value<Rat>(g, f, z);
        dh[z] = laplacian_value<Rat>(g, h, z);
    }

    Rat lap_gfh = laplacian_value<Rat>(g, std::span<const Rat>(gfh), x);
    Rat g_f_dh = gamma_sum_at<Rat>(g, f, std::span<const Rat>(dh), x);
    Rat g_df_h = gamma_sum_at<Rat>(g, std::span<const Rat>(df), h, x);
    return (lap_gfh - g_f_dh - g_df_h) / 2;
}

Dimension Dimension::finite(const Rat& n) {
    if (n <= 0) throw TooSmallError("dimension must be positive, got " + rat_string(n));
    return Dimension(false, n);
}

Dimension parse_dimension(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity")
        return Dimension::infinite();
    return Dimension::finite(parse_rational(text));
}

BallIndex ball2_index(const Graph& g, Vertex x) {
    g.check_vertex(x);
    BallIndex ball;
    ball.center = x;
    ball.vertices.push_back(x);
    const auto& s1 = g.neighbors(x);
    std::set<Vertex> s2;
    for (Vertex z : s1)
        for (Vertex w : g.neighbors(z))
            if (w != x && !g.has_edge(x, w)) s2.insert(w);
    ball.vertices.insert(ball.vertices.end(), s1.begin(), s1.end());
    ball.vertices.insert(ball.vertices.end(), s2.begin(), s2.end());
    ball.s1_count = static_cast<int>(s1.size());
    ball.s2_count = static_cast<int>(s2.size());
    return ball;
}

CurvaturePencil build_pencil(const Graph& g, Vertex x, const Dimension& dim) {
    if (!g.is_connected()) throw DisconnectedError("curvature pencil needs a connected graph");
    CurvaturePencil pencil;
    pencil.ball = ball2_index(g, x);
    int m = pencil.ball.coord_count();
    pencil.gamma2_form = rat_matrix(m, m);
    pencil.gamma_form = rat_matrix(m, m);
    pencil.laplacian_row.assign(m, Rat(0));

    // coordinate basis functions, zero at the pinned center
    std::vector<std::vector<Rat>> basis(m, std::vector<Rat>(g.vertex_count(), Rat(0)));
    for (int i = 0; i < m; ++i) basis[i][pencil.ball.coord_vertex(i)] = 1;

    for (int i = 0; i < m; ++i)
        pencil.laplacian_row[i] = laplacian_value<Rat>(g, std::span<const Rat>(basis[i]), x);

    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            Rat a = gamma2(g, basis[i], basis[j], x);
            if (!dim.is_infinite())
                a -= pencil.laplacian_row[i] * pencil.laplacian_row[j] / dim.value();
            Rat b = gamma(g, basis[i], basis[j], x);
            pencil.gamma2_form[i][j] = pencil.gamma2_form[j][i] = a;
            pencil.gamma_form[i][j] = pencil.gamma_form[j][i] = b;
            // Gamma(f)(x) only sees f on B1(x)
            if ((!pencil.ball.coord_in_b1(i) || !pencil.ball.coord_in_b1(j)) && b != 0)
                throw Error("Gamma form has support outside B1");
        }
    }
    return pencil;
}

namespace {

Eigen::MatrixXd to_eigen(const RatMatrix& m, int r0, int r1, int c0, int c1) {
    Eigen::MatrixXd out(r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) out(i - r0, j - c0) = to_double(m[i][j]);
    return out;
}

}  // namespace

BECurvatureResult be_curvature(const Graph& g, Vertex x, const Dimension& dim) {
    auto pencil = build_pencil(g, x, dim);
    int s1 = pencil.ball.s1_count;
    int s2 = pencil.ball.s2_count;
    int m = s1 + s2;
    if (s1 == 0) throw IsolatedVertexError(x);

    Eigen::MatrixXd A11 = to_eigen(pencil.gamma2_form, 0, s1, 0, s1);
    Eigen::MatrixXd schur = A11;
    Eigen::MatrixXd a22_pinv;
    Eigen::MatrixXd A12;
    if (s2 > 0) {
        A12 = to_eigen(pencil.gamma2_form, 0, s1, s1, m);
        Eigen::MatrixXd A22 = to_eigen(pencil.gamma2_form, s1, m, s1, m);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A22);
        double top = es.eigenvalues().cwiseAbs().maxCoeff();
        if (es.eigenvalues().minCoeff() < -1e-9)
            throw DegenerateKernelError(
                "S2 block of the Gamma2 form has eigenvalue " +
                std::to_string(es.eigenvalues().minCoeff()) + " < -1e-9");
        Eigen::VectorXd inv = es.eigenvalues();
        for (int i = 0; i < inv.size(); ++i)
            inv[i] = (std::abs(inv[i]) <= 1e-9 * std::max(top, 1e-300)) ? 0.0 : 1.0 / inv[i];
        a22_pinv = es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
        schur = A11 - A12 * a22_pinv * A12.transpose();
    }

    Eigen::MatrixXd B11 = to_eigen(pencil.gamma_form, 0, s1, 0, s1);
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(schur, B11);
    if (ges.info() != Eigen::Success)
        throw Error("generalized eigensolver failed at vertex " + std::to_string(x));

    BECurvatureResult res;
    res.curvature = ges.eigenvalues()[0];

    Eigen::VectorXd f1 = ges.eigenvectors().col(0);  // normalized to f1' B11 f1 = 1
    Eigen::VectorXd full(m);
    full.head(s1) = f1;
    if (s2 > 0) full.tail(s2) = -a22_pinv * A12.transpose() * f1;
    res.minimizer.assign(full.data(), full.data() + m);

    // certificate slack through the Gamma operators, independent of the
    // pencil/Schur path
    std::vector<double> f(g.vertex_count(), 0.0);
    for (int i = 0; i < m; ++i) f[pencil.ball.coord_vertex(i)] = full[i];
    std::vector<double> gf(g.vertex_count(), 0.0), df(g.vertex_count(), 0.0);
    for (Vertex z : pencil.ball.vertices) {
        gf[z] = gamma(g, f, f, z);
        df[z] = apply_laplacian(g, std::span<const double>(f), z);
    }
    double lap_gf = apply_laplacian(g, std::span<const double>(gf), x);
    double g_f_df = gamma(g, std::span<const double>(f), std::span<const double>(df), x);
    double gamma2_val = lap_gf / 2 - g_f_df;
    double dfx = df[x];
    double quad = dim.is_infinite() ? 0.0 : dfx * dfx / to_double(dim.value());
    res.slack = gamma2_val - quad - res.curvature * gf[x];
    return res;
}

double cd_constant(const Graph& g, const Dimension& dim) {
    if (!g.is_connected()) throw DisconnectedError("CD constant needs a connected graph");
    int n = g.vertex_count();
    if (n < 2) throw TooSmallError("CD constant needs at least one edge");
    std::vector<double> per_vertex(n);
    parallel_for(n, [&](int v) { per_vertex[v] = be_curvature(g, v, dim).curvature; });
    return *std::min_element(per_vertex.begin(), per_vertex.end());
}

}  // namespace gcurv
