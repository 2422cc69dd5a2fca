#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcurv/bakry_emery.hpp"
#include "gcurv/graph.hpp"
#include "gcurv/rational.hpp"
#include "gcurv/tessellation.hpp"

namespace gcurv {

enum class Verdict { Holds, Vacuous, Failed };

std::string verdict_name(Verdict v);

// Outcome of checking one theorem on one graph. A Failed verdict always
// carries a witness with the numeric sides of the violated inequality (and
// the certifying function/pair), so the failure can be replayed.
struct VerificationReport {
    std::string theorem;
    std::string graph_desc;
    nlohmann::ordered_json hypothesis;
    Verdict verdict = Verdict::Vacuous;
    double slack = 0.0;  // distance from tightness when the bound holds
    nlohmann::ordered_json witness;

    nlohmann::ordered_json to_json() const;
};

// Re-evaluates the stored inequality of a Failed report from its witness
// payload; true when the violation reproduces.
bool replay_witness(const VerificationReport& report);

// Gauss-Bonnet: the curvatures of a valid finite tessellation sum to exactly 2.
VerificationReport verify_gauss_bonnet(const Tessellation& t, const std::string& desc);

// Lichnerowicz (Bakry-Emery): CD(K,n) with K > 0 forces
// lambda_1 >= (n/(n-1)) K  (factor 1 at n = infinity).
VerificationReport verify_lichnerowicz_be(const Graph& g, const Dimension& n,
                                          const std::string& desc,
                                          double lambda1_scale = 1.0);

// Bonnet-Myers (Bakry-Emery, infinite dimension): CD(K,inf) with K > 0 forces
// diam <= 2/K.
VerificationReport verify_bonnet_myers_be(const Graph& g, const std::string& desc);

// Bonnet-Myers (Ollivier): K_p(x,y) >= K > 0 on edges forces
// diam <= 2(1-p)/K; the comparison is exact rational.
VerificationReport verify_bonnet_myers_ollivier(const Graph& g, const Rat& p,
                                                const std::string& desc);

// Lichnerowicz (Ollivier): K_LLY >= K > 0 on edges forces lambda_1 >= K.
VerificationReport verify_lichnerowicz_ollivier(const Graph& g, const std::string& desc,
                                                double lambda1_scale = 1.0);

// The 4-cycle and 5-cycle glued along one edge (x=0, y=1): the worked
// transport example with piecewise-linear K_p(0,1).
Graph fused_cycles_graph();

struct SuiteConfig {
    std::vector<std::string> only;     // theorem filter; empty = all
    std::string zoo = "default";       // "default" or a JSON file path
    Rat idleness = Rat(1, 2);          // p for the Ollivier Bonnet-Myers check
    double lambda1_scale = 1.0;        // negative-control hook used by tests
};

struct SuiteResult {
    std::vector<VerificationReport> reports;

    int failed_count() const;
    nlohmann::ordered_json to_json() const;
    std::string summary() const;
};

// Runs every selected verifier over the zoo. Jobs fan out across threads
// (capped by GCURV_THREADS); the report order is configuration-determined, so
// two runs with one config produce byte-identical JSON.
SuiteResult run_suite(const SuiteConfig& config);

// Rounds to 12 significant digits; applied to every float that lands in a
// report, keeping serialized output byte-stable.
double round_sig(double x);

}  // namespace gcurv
