#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qmatch/ansatz.hpp"
#include "qmatch/graph.hpp"
#include "qmatch/statevector.hpp"

namespace qmatch {

/// Trees with more branches than this are refused; the tree is a symbolic
/// oracle for small instances, not a production path.
inline constexpr std::size_t kDefaultBranchCap = std::size_t{1} << 20;

/// Per-edge action taken along one computation branch: I1 when the control
/// was closed, otherwise I2 (stay, factor cos(beta/2)) or X2 (flip, factor
/// -i sin(beta/2)).
enum class BranchLabel : std::uint8_t { I1, I2, X2 };

char label_char(BranchLabel l);
std::string labels_to_string(const std::vector<BranchLabel>& labels);

struct Branch {
    std::vector<BranchLabel> labels;
    BasisState leaf = 0;
    Amplitude amplitude{1.0, 0.0};
};

/// Symbolic expansion of one sweep from a single basis state: at each edge a
/// closed control forwards the branch unchanged (I1), an open control forks
/// it into I2 and X2 children. Branch amplitudes are the label-factor
/// products times the tree prefactor.
struct ConstructionTree {
    BasisState initial = 0;
    std::vector<int> order;
    double beta = 0.0;
    ControlMode mode = ControlMode::NeighborhoodOnly;
    double prefactor = 1.0;
    int m = 0;
    std::vector<Branch> branches;
};

ConstructionTree build_tree(const Graph& g, BasisState init, double beta,
                            const EdgeOrdering& ordering, ControlMode mode,
                            std::size_t branch_cap = kDefaultBranchCap,
                            double prefactor = 1.0);

/// One tree per weight-1 start, each with prefactor 1/sqrt(m).
struct Forest {
    std::vector<ConstructionTree> trees;
    int m = 0;
};

Forest build_w1_forest(const Graph& g, double beta, const EdgeOrdering& ordering,
                       ControlMode mode, std::size_t branch_cap = kDefaultBranchCap);

struct LeafCensus {
    std::size_t leaves = 0;
    std::size_t distinct = 0;
    std::map<int, std::size_t> by_size;
    std::map<BasisState, std::size_t> multiplicity;
};

LeafCensus leaf_census(const ConstructionTree& t);
LeafCensus leaf_census(const Forest& f);

enum class CombineRule { Coherent, Incoherent };

/// Forest aggregation: Incoherent sums squared per-tree amplitudes per leaf;
/// Coherent sums amplitudes first and reports the raw squared magnitudes
/// plus their total (which exceeds 1 when branches of different trees land
/// on the same leaf in phase).
struct CombinedDistribution {
    std::map<BasisState, double> probs;
    std::map<BasisState, Amplitude> amplitudes; // Coherent only
    double raw_norm2 = 1.0;
};

CombinedDistribution combine(const Forest& f, CombineRule rule);

/// One row per (matching, contributing tree) pair comparing the W1-tree
/// amplitude against the empty-tree amplitude of the same leaf. d counts the
/// positions where the empty branch spent an I2 factor that the seeded
/// branch skipped with I1; the predicted magnitude ratio is then
/// 1 / (sqrt(m) sin(beta/2) cos^d(beta/2)).
struct Eq15Row {
    BasisState matching = 0;
    int tree_edge = 0;
    int k = 0;
    int d = 0;
    double amp_w1 = 0.0;
    double amp_empty = 0.0;
    double ratio = 0.0;
    double predicted = 0.0;
    double rel_dev = 0.0;
    bool d_in_claimed_range = true; // d <= k-1
};

struct Eq15Table {
    std::vector<Eq15Row> rows;
    double max_rel_dev = 0.0;
    int d_range_violations = 0;
};

/// Fixed-ordering amplitude-ratio table on a single cycle graph. Throws on
/// non-cycle input.
Eq15Table eq15_table(const Graph& g, double beta,
                     std::size_t branch_cap = kDefaultBranchCap);

/// Max |tree amplitude - statevector amplitude| over all basis states. The
/// reference must carry amplitudes on the same scale as the tree (use the
/// prefactor to convert).
double max_amplitude_deviation(const ConstructionTree& t, const StateVector& sv);

/// Oracle equivalence for a W1 forest against a Mixture run's raw per-tree
/// states: compares tree amplitudes (prefactor removed) per seeded edge.
double max_amplitude_deviation(const Forest& f, const std::vector<StateVector>& tree_states);

/// Oracle equivalence of the coherent combine against a raw (pre-renormalization)
/// coherent statevector.
double max_amplitude_deviation(const CombinedDistribution& combined, const StateVector& raw_sv);

} // namespace qmatch
