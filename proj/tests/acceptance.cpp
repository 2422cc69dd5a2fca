// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Each criterion carries its own wall-clock budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gcurv/bakry_emery.hpp"
#include "gcurv/generators.hpp"
#include "gcurv/spectral.hpp"
#include "gcurv/tessellation.hpp"
#include "gcurv/transport.hpp"
#include "gcurv/verify.hpp"
#include "oracles.hpp"

using namespace gcurv;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

void require(bool ok, const std::string& what, std::string& detail) {
    if (!ok && detail.empty()) detail = what;
}

// 1. exact reproduction of the worked transport example
bool criterion_worked_example(std::string& detail) {
    auto g = fused_cycles_graph();
    bool ok = true;
    struct Row {
        Rat p, w1, kp;
    };
    std::vector<Row> rows = {
        {Rat(0), Rat(1), Rat(0)},           {Rat(1, 8), Rat(7, 8), Rat(1, 8)},
        {Rat(1, 4), Rat(3, 4), Rat(1, 4)},  {Rat(1, 2), Rat(5, 6), Rat(1, 6)},
        {Rat(3, 4), Rat(11, 12), Rat(1, 12)}, {Rat(1), Rat(1), Rat(0)},
    };
    for (const auto& row : rows) {
        Rat w = wasserstein(g, mu(g, 0, row.p), mu(g, 1, row.p)).value;
        ok &= (w == row.w1);
        ok &= (ollivier_curvature(g, 0, 1, row.p) == row.kp);
    }
    require(ok, "piecewise W1/K_p values diverge", detail);
    bool lly_ok = (lly_curvature(g, 0, 1) == Rat(1, 3));
    require(lly_ok, "K_LLY(x,y) != 1/3", detail);
    return ok && lly_ok;
}

// 2. combinatorial golden values
bool criterion_combinatorial(std::string& detail) {
    bool ok = true;
    for (int n = 3; n <= 12; ++n) {
        auto p = prism_tessellation(n);
        auto a = antiprism_tessellation(n);
        for (Vertex v = 0; v < 2 * n; ++v) {
            ok &= (vertex_curvature(p, v) == Rat(1, n));
            ok &= (vertex_curvature(a, v) == Rat(1, n));
        }
        ok &= (gauss_bonnet_sum(p) == Rat(2));
        ok &= (gauss_bonnet_sum(a) == Rat(2));
    }
    require(ok, "prism/antiprism curvature or Gauss-Bonnet sum off", detail);
    bool extras = (gauss_bonnet_sum(tetrahedron_tessellation()) == Rat(2)) &&
                  (gauss_bonnet_sum(icosahedron_tessellation()) == Rat(2));
    require(extras, "tetrahedron/icosahedron Gauss-Bonnet sum off", detail);
    return ok && extras;
}

// 3. antitree profile from the published figure
bool criterion_antitree(std::string& detail) {
    auto at = antitree(7);
    const double be_expected[] = {0.5, 0.212, 0.092, 0.049};
    const double lly_expected[] = {0.6, 0.15, 0.068, 0.039};
    bool ok = true;
    for (int level = 1; level <= 4; ++level) {
        auto [first, last] = antitree_level_range(7, level);
        for (Vertex v = first; v <= last; ++v) {
            double k = be_curvature(at, v, Dimension::infinite()).curvature;
            if (std::abs(k - be_expected[level - 1]) > 0.005) {
                detail = "BE curvature at level " + std::to_string(level) + " is " +
                         std::to_string(k);
                ok = false;
            }
        }
        Vertex a = first;
        Vertex b = antitree_level_range(7, level + 1).first;
        double k = to_double(lly_curvature(at, a, b));
        if (std::abs(k - lly_expected[level - 1]) > 0.005) {
            detail = "LLY curvature at level " + std::to_string(level) + " is " +
                     std::to_string(k);
            ok = false;
        }
    }
    return ok;
}

// 4. theorem suite over the default zoo, hypercubes tight
bool criterion_suite(std::string& detail) {
    auto result = run_suite(SuiteConfig{});
    if (result.failed_count() != 0) {
        detail = std::to_string(result.failed_count()) + " FAILED reports";
        return false;
    }
    bool tight = true;
    for (const auto& r : result.reports) {
        if (r.graph_desc.rfind("hypercube", 0) != 0) continue;
        if (r.theorem == "bonnet-myers-be" || r.theorem == "lichnerowicz-be" ||
            r.theorem == "lichnerowicz-ollivier") {
            if (r.verdict != Verdict::Holds || std::abs(r.slack) > 1e-6) {
                detail = r.theorem + " on " + r.graph_desc + " not tight (slack " +
                         std::to_string(r.slack) + ")";
                tight = false;
            }
        }
    }
    return tight;
}

// 5. exact-LP oracle equivalence on 200 random instances
bool criterion_lp_oracle(std::string& detail) {
    std::mt19937 rng(987654);
    for (int rep = 0; rep < 200; ++rep) {
        Graph g = oracles::random_connected_graph(rng, 8);
        auto a = oracles::random_measure(rng, g, 5);
        auto b = oracles::random_measure(rng, g, 5);
        // wasserstein() validates marginals, the zero duality gap,
        // 1-Lipschitzness, and complementary slackness on every call
        auto cert = wasserstein(g, a, b);
        if (cert.value != oracles::w1_tree_oracle(g, a, b)) {
            detail = "simplex and tree enumeration disagree at instance " +
                     std::to_string(rep);
            return false;
        }
        Rat dual = 0;
        for (const auto& [v, phi] : cert.potential.values)
            dual += phi * (a.mass_at(v) - b.mass_at(v));
        if (dual != cert.value) {
            detail = "duality gap at instance " + std::to_string(rep);
            return false;
        }
    }
    return true;
}

// 6. Gamma-calculus identities on random rational instances
bool criterion_gamma_identities(std::string& detail) {
    std::mt19937 rng(24680);
    for (int rep = 0; rep < 1000; ++rep) {
        Graph g = oracles::random_connected_graph(rng, 8);
        auto f = oracles::random_rational_function(rng, g.vertex_count());
        auto h = oracles::random_rational_function(rng, g.vertex_count());
        std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
        Vertex x = pick(rng);

        Rat dfh = 0;
        for (Vertex z : g.neighbors(x)) dfh += f[z] * h[z] - f[x] * h[x];
        dfh /= g.degree(x);
        Rat defining =
            (dfh - f[x] * apply_laplacian(g, h, x) - apply_laplacian(g, f, x) * h[x]) / 2;
        Rat sum = 0;
        for (Vertex z : g.neighbors(x)) sum += (f[z] - f[x]) * (h[z] - h[x]);
        sum /= 2 * g.degree(x);
        if (defining != sum || gamma(g, f, h, x) != sum) {
            detail = "Gamma forms disagree at instance " + std::to_string(rep);
            return false;
        }
        Rat df = apply_laplacian(g, f, x);
        if (df * df > 2 * gamma(g, f, f, x)) {
            detail = "(Delta f)^2 > 2 Gamma f at instance " + std::to_string(rep);
            return false;
        }
        Rat divergence = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            divergence += Rat(g.degree(v)) * apply_laplacian(g, f, v);
        if (divergence != 0) {
            detail = "divergence sum nonzero at instance " + std::to_string(rep);
            return false;
        }
    }
    // Gamma2 locality: values outside B2(x) never matter
    std::uniform_int_distribution<int> bump(-3, 3);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = antitree(5);
        auto f = oracles::random_rational_function(rng, g.vertex_count());
        std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
        Vertex x = pick(rng);
        auto ball = ball2_index(g, x);
        std::set<Vertex> b2(ball.vertices.begin(), ball.vertices.end());
        Rat before = gamma2(g, f, f, x);
        auto pert = f;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (!b2.count(v)) pert[v] += Rat(bump(rng));
        if (gamma2(g, pert, pert, x) != before) {
            detail = "Gamma2 saw a perturbation outside B2";
            return false;
        }
    }
    return true;
}

// 7. heat semigroup properties across the zoo
bool criterion_heat(std::string& detail) {
    std::mt19937 rng(13579);
    std::vector<Graph> zoo = {complete(4), complete(6), cycle(5), cycle(8), hypercube(2),
                              hypercube(3), hypercube(4), prism(4), prism(7),
                              antiprism(4), dumbbell(3, 3), antitree(4), antitree(5),
                              fused_cycles_graph()};
    for (const Graph& g : zoo) {
        auto s = spectrum(g);
        int n = g.vertex_count();
        std::vector<double> f(n);
        std::uniform_real_distribution<double> ud(-1.0, 1.0);
        for (double& x : f) x = ud(rng);

        double fmax = 0;
        for (double x : f) fmax = std::max(fmax, std::abs(x));

        for (double t : {0.1, 0.5, 1.0, 2.0}) {
            auto pt = heat_apply(s, f, t);
            for (double x : pt)
                if (std::abs(x) > fmax + 1e-8) {
                    detail = "sup-norm contraction failed";
                    return false;
                }
            auto nested = heat_apply(s, heat_apply(s, f, t), 0.5);
            auto direct = heat_apply(s, f, t + 0.5);
            for (int i = 0; i < n; ++i)
                if (std::abs(nested[i] - direct[i]) > 1e-8) {
                    detail = "semigroup law failed";
                    return false;
                }
            std::vector<double> df(n);
            for (Vertex x = 0; x < n; ++x)
                df[x] = apply_laplacian(g, std::span<const double>(f), x);
            auto pt_df = heat_apply(s, df, t);
            for (Vertex x = 0; x < n; ++x) {
                double d_pt = apply_laplacian(g, std::span<const double>(pt), x);
                if (std::abs(d_pt - pt_df[x]) > 1e-8) {
                    detail = "commutation failed";
                    return false;
                }
            }
        }
        std::vector<double> pos(n);
        std::uniform_real_distribution<double> up(0.0, 1.0);
        for (double& x : pos) x = up(rng);
        auto evolved = heat_apply(s, pos, 1.0);
        for (double x : evolved)
            if (x < -1e-12) {
                detail = "positivity failed";
                return false;
            }

        // gradient bound from the computed CD(K,inf) constant
        double K = cd_constant(g, Dimension::infinite());
        std::vector<double> gamma_f(n);
        for (Vertex x = 0; x < n; ++x)
            gamma_f[x] =
                gamma(g, std::span<const double>(f), std::span<const double>(f), x);
        for (double t : {0.25, 1.0}) {
            auto ptf = heat_apply(s, f, t);
            auto pt_gf = heat_apply(s, gamma_f, t);
            for (Vertex x = 0; x < n; ++x) {
                double lhs = gamma(g, std::span<const double>(ptf),
                                   std::span<const double>(ptf), x);
                if (lhs > std::exp(-2.0 * K * t) * pt_gf[x] + 1e-8) {
                    detail = "gradient bound failed";
                    return false;
                }
            }
        }
    }
    return true;
}

// 8. Cheeger brute force against the naive oracle
bool criterion_cheeger(std::string& detail) {
    std::vector<Graph> zoo = {complete(2), complete(5), complete(8), cycle(3), cycle(9),
                              cycle(12), hypercube(2), hypercube(3), prism(3), prism(5),
                              prism(7), antiprism(3), antiprism(5), dumbbell(3, 3),
                              dumbbell(4, 4), dumbbell(5, 5), antitree(4),
                              fused_cycles_graph()};
    for (const Graph& g : zoo) {
        if (g.vertex_count() > 14) continue;
        if (cheeger_constant(g).value != oracles::cheeger_naive(g)) {
            detail = "cheeger mismatch on a zoo graph with " +
                     std::to_string(g.vertex_count()) + " vertices";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"worked transport example, exact rationals", 1.0, criterion_worked_example},
        {"prism/antiprism curvature and Gauss-Bonnet", 1.0, criterion_combinatorial},
        {"antitree(7) curvature profile within 5e-3", 10.0, criterion_antitree},
        {"theorem suite: 0 FAILED, hypercubes tight", 60.0, criterion_suite},
        {"network simplex vs tree enumeration, 200 instances", 30.0, criterion_lp_oracle},
        {"Gamma-calculus identities, 1000 instances", 10.0, criterion_gamma_identities},
        {"heat semigroup properties across the zoo", 20.0, criterion_heat},
        {"Cheeger brute force vs naive oracle", 20.0, criterion_cheeger},
    };

    int index = 0;
    for (auto& c : criteria) {
        ++index;
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        bool in_budget = elapsed < c.budget_seconds;
        bool pass = ok && in_budget;
        std::printf("[%s] criterion %d: %s (%.2fs, budget %.0fs)%s%s\n",
                    pass ? "PASS" : "FAIL", index, c.name.c_str(), elapsed,
                    c.budget_seconds, detail.empty() ? "" : " — ", detail.c_str());
        if (!in_budget && ok) std::printf("       over budget\n");
        if (!pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
