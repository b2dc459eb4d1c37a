#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qmatch/io.hpp"

namespace qmatch {

/// Output directory resolution: explicit path, else $QMATCH_OUT_DIR, else ".".
std::string resolve_out_dir(const std::string& explicit_dir);

struct SimulateOptions {
    ExperimentConfig config;
    std::string out_dir;
    std::uint64_t shots = 0; // 0 = no sampling artifact
    bool dump_state = false;
};

/// Writes distribution.csv, expectation.json and norm_trace.csv (plus
/// state.csv / samples.csv when requested). Returns a process exit code.
int run_simulate(const SimulateOptions& opt, std::ostream& log);

struct VerifyOptions {
    std::string suite = "all"; // thm1|thm2|lemma1|obs|eq15|all
    std::string corpus = "default";
    std::optional<std::string> graph_spec; // restrict to one graph
    std::vector<double> betas;             // empty = default {0.3, pi/2, 2.5}
    std::uint64_t seed = 20240801;
    std::string out_dir;
};

/// Writes report.json; exit code 0 iff every check passed.
int run_verify(const VerifyOptions& opt, std::ostream& log);

struct CurvesOptions {
    std::string kind; // fig3|fig4|thm4|converge
    double beta = 1.5707963267948966;
    int n_lo = 3;
    int n_hi = 59;
    int exact_cap = 16;
    std::string graph_spec; // thm4 / converge target
    int rounds = 0;         // converge: 0 = 2|E|
    double epsilon = 1e-3;
    std::uint64_t seed = 20240801;
    std::string out_dir;
};

/// Writes the requested curve CSVs (fig3.csv / fig4.csv / thm4.csv +
/// eq17_diagnostic.csv / converge.csv + converge.json).
int run_curves(const CurvesOptions& opt, std::ostream& log);

// Individual artifact writers (deterministic byte-for-byte given equal
// inputs).
void write_distribution_csv(const std::string& path, const MeasurementDistribution& d, int m);
void write_state_csv(const std::string& path, const StateVector& sv);
void write_samples_csv(const std::string& path, const std::map<BasisState, std::uint64_t>& counts,
                       int m);
void write_norm_trace_csv(const std::string& path, const RunOutput& out);
void write_curve_csv(const std::string& path, const BoundCurve& curve);
void write_converge_csv(const std::string& path, const ConvergenceProfile& profile);
void write_text_file(const std::string& path, const std::string& content);

} // namespace qmatch
