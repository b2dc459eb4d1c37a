#pragma once

#include <string>
#include <vector>

#include "qmatch/graph.hpp"
#include "qmatch/statevector.hpp"

namespace qmatch {

/// Which qubits gate the per-edge X rotation. NeighborhoodOnly requires
/// every edge adjacent to e to be unset; IncludeSelf additionally requires
/// e's own qubit to be unset, which freezes edges already in the matching.
enum class ControlMode { NeighborhoodOnly, IncludeSelf };

/// How a W1-initial run is evolved. Coherent evolves the superposition as a
/// single statevector. Mixture evolves each weight-1 basis state as an
/// independent run and averages the measurement distributions with weight
/// 1/m, which realizes the incoherent per-tree probability sum.
enum class ExecutionSemantics { Coherent, Mixture };

struct Round {
    double gamma = 0.0;
    double beta = 0.0;
};

struct Schedule {
    std::vector<Round> rounds;

    int p() const { return static_cast<int>(rounds.size()); }
};

Schedule single_round(double gamma, double beta);

/// Non-fatal diagnostics: betas outside (0, pi) are accepted but flagged,
/// since the support theorems assume that interval.
std::vector<std::string> schedule_warnings(const Schedule& schedule);

/// Control clause f(e) evaluated on basis state z.
bool control_clause(BasisState z, int e, const EdgeAdjacency& adj, ControlMode mode);

/// Diagonal phase: amp(z) *= exp(-i * gamma * weight(z)). The
/// weight-independent factor exp(+i * gamma * m / 2) is dropped as a global
/// phase. Leaves every |amp| unchanged.
void apply_phase_separator(StateVector& sv, double gamma);

/// One controlled X rotation on edge e with half-angle convention: for each
/// basis pair (z, z|bit_e) whose control is open on the bit-clear member,
///   amp(z)      -> cos(beta/2) amp(z) - i sin(beta/2) amp(z')
/// and symmetrically under NeighborhoodOnly; under IncludeSelf the bit-set
/// member maps by identity and only receives, which is not norm-preserving
/// on superpositions that straddle such a pair.
void apply_mixer_edge(StateVector& sv, int e, double beta, const EdgeAdjacency& adj,
                      ControlMode mode);

/// Sequential application of apply_mixer_edge along the ordering. Returns
/// norm2 after the sweep as a diagnostic.
double apply_mixer_sweep(StateVector& sv, double beta, const EdgeOrdering& ordering,
                         const EdgeAdjacency& adj, ControlMode mode);

struct RunOutput {
    ExecutionSemantics semantics = ExecutionSemantics::Coherent;
    InitKind init = InitKind::Empty;
    ControlMode mode = ControlMode::NeighborhoodOnly;
    int m = 0;

    /// Coherent: final state, renormalized at the end of the full circuit.
    StateVector final_state;
    /// Coherent: norm2 of the final state before that renormalization.
    double raw_norm2 = 1.0;
    /// Coherent: norm2 after each round's sweep.
    std::vector<double> round_norm2;

    /// Mixture: raw per-tree final states, indexed by the seeded edge.
    std::vector<StateVector> tree_states;
    std::vector<double> tree_norm2;
    std::vector<std::vector<double>> tree_round_norm2;

    /// Output distribution: renormalized final state (Coherent) or the
    /// 1/m-weighted average of per-tree distributions (Mixture).
    MeasurementDistribution dist;
};

/// Full p-round run: each round applies the phase separator with gamma_j and
/// then one mixer sweep with beta_j. Mixture semantics requires the W1
/// initial kind.
RunOutput run_qaoa_plus(const Graph& g, InitKind init, const Schedule& schedule,
                        ControlMode mode, const EdgeOrdering& ordering,
                        ExecutionSemantics semantics, int qubit_cap = kDefaultQubitCap);

} // namespace qmatch
