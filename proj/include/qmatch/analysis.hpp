#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmatch/ansatz.hpp"
#include "qmatch/matchings.hpp"
#include "qmatch/tree.hpp"

namespace qmatch {

struct ExpectationReport {
    double expected_size = 0.0;
    std::vector<double> size_probs;
    /// Coherent runs: expectation under raw (pre-renormalization) squared
    /// amplitudes; equals expected_size times raw_norm2.
    double raw_expected_size = 0.0;
};

ExpectationReport expected_matching_size(const RunOutput& out);

/// Expected matching size under the uniform distribution over all matchings.
double uniform_expectation(const MatchingCounts& counts);
double cycle_uniform_expectation(int n);

/// Analytic lower bound on E[X] of the p=1 empty-init run on C_n:
///   sum_k s^k c^(n-2k) k Phi_k(C_n) (1 - s k / n),  s = sin^2(beta/2).
double qaoa_cycle_lower_bound(int n, double beta);

/// Per-size probability bracket for the same run: upper s^k c^(n-2k) Phi_k,
/// lower (1 - s k / n) times that. Exact simulation violates both sides on
/// some (n, k) cells; treat the bracket as a diagnostic, not a bound.
double prob_upper_bound(int n, int k, double beta);
double prob_lower_bound(int n, int k, double beta);

struct BoundCurveRow {
    int n = 0;
    double lower_bound = 0.0;
    double uniform = 0.0;
    std::optional<double> exact;
    bool lower_gt_uniform = false;
    bool exact_gt_uniform = false; // meaningful only when exact is present
    bool lower_lt_exact = false;   // meaningful only when exact is present
};

struct BoundCurve {
    double beta = 0.0;
    std::vector<BoundCurveRow> rows;
    /// n values in the requested range where the claimed lower > uniform
    /// ordering fails.
    std::vector<int> lower_bound_failures;
};

/// Bound/uniform/exact table over cycles n in [n_lo, n_hi]. Exact column is
/// simulated (empty init, neighborhood controls, fixed ordering, p = 1)
/// where n <= exact_cap.
BoundCurve compare_vs_uniform(int n_lo, int n_hi, double beta, int exact_cap = 16);

struct Eq17Row {
    int k = 0;
    double min_ratio = 0.0;     // min over k-matchings of P_w1(M) / P_empty(M)
    double claimed = 0.0;       // (2^(k+1) - 2) / m
    bool claimed_holds = false; // min_ratio >= claimed
};

struct ComponentExpectation {
    std::vector<int> edge_map;
    double e_w1_mixture = 0.0;
    double e_empty = 0.0;
};

struct InitialStateComparison {
    double beta = 0.0;
    double e_w1_mixture = 0.0;
    double e_w1_coherent = 0.0;
    double e_empty = 0.0;
    bool w1_mixture_gt_empty = false;
    bool w1_coherent_gt_empty = false;
    bool in_theorem_range = false; // |E| > 16 and beta in (pi/2, pi]
    std::vector<ComponentExpectation> per_component;
    std::vector<Eq17Row> eq17;
};

/// W1-vs-empty expectation comparison on a 2-regular graph at p = 1 under
/// fixed ordering, with the per-size probability-ratio diagnostic table.
InitialStateComparison compare_initial_states(const Graph& g, double beta,
                                              int qubit_cap = kDefaultQubitCap);

struct ConvergenceProfile {
    double beta = 0.0;
    double epsilon = 0.0;
    /// mass[p] is the probability mass on maximal matchings after p rounds
    /// (p = 0 is the initial W1 state).
    std::vector<double> mass;
    std::optional<int> p_star;
};

/// Round-by-round maximal-matching mass of the W1 / IncludeSelf / Mixture
/// evolution at gamma = 0. p_star is the first round with mass >= 1 - epsilon.
ConvergenceProfile maximal_convergence_profile(const Graph& g, double beta, int max_rounds,
                                               double epsilon = 1e-3);

struct CheckResult {
    std::string id;
    std::string graph;
    std::string params;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool all_pass = true;

    void add(CheckResult r);
};

struct CorpusEntry {
    std::string name;
    Graph graph;
};

/// C3..C10, P2..P10, the (3,4) two-regular union, and 20 seeded random
/// graphs with at most 10 edges.
std::vector<CorpusEntry> default_corpus(std::uint64_t seed);

/// Seeded Erdos-Renyi-style graph with 1..max_edges edges.
Graph random_graph(Rng& rng, int max_edges);

/// Every support/count/feasibility check plus the tree-vs-statevector
/// oracle, aggregated into one report; failures are report entries, not
/// exceptions. `which` filters by check family ("all", "thm1", "thm2",
/// "lemma1", "obs", "eq15").
SuiteReport theorem_suite(const std::vector<CorpusEntry>& corpus, const std::vector<double>& betas,
                          std::uint64_t seed, const std::string& which = "all");

} // namespace qmatch
