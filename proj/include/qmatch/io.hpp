#pragma once

#include <string>

#include "json.hpp"

#include "qmatch/analysis.hpp"
#include "qmatch/ansatz.hpp"
#include "qmatch/graph.hpp"
#include "qmatch/matchings.hpp"
#include "qmatch/tree.hpp"

namespace qmatch {

using nlohmann::json;

/// Radians with pi-expression sugar: "0.3", "pi", "-pi/2", "2pi/3",
/// "3*pi/4", "0.5pi". Throws InvalidConfig on anything else.
double parse_angle(const std::string& text);

/// Shortest round-trip decimal; used by every CSV writer so artifacts are
/// byte-stable.
std::string format_double(double x);

// Graph file format: {"num_vertices": int, "edges": [[u, v], ...]}; the
// array order fixes edge indices.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

// {"phi_k": [...], "phi": .., "phi_plus": .., "nu": ..}
json counts_to_json(const MatchingCounts& c);
MatchingCounts counts_from_json(const json& j);

json tree_to_json(const ConstructionTree& t);

json report_to_json(const SuiteReport& r);

std::string control_mode_name(ControlMode m);
ControlMode control_mode_from_name(const std::string& s);
std::string semantics_name(ExecutionSemantics s);
ExecutionSemantics semantics_from_name(const std::string& s);
std::string init_kind_name(InitKind k);
InitKind init_kind_from_name(const std::string& s);

/// Everything needed to reproduce one run. graph_spec is a generator string
/// ("cycle:8", "path:5", "tworeg:3,4"), a file reference ("file:g.json") or
/// a bare .json path.
struct ExperimentConfig {
    std::string graph_spec;
    InitKind init = InitKind::Empty;
    Schedule schedule;
    ControlMode control = ControlMode::NeighborhoodOnly;
    std::string ordering_spec = "fixed"; // "fixed" | "identity" | "random" | "i,j,k,..."
    ExecutionSemantics semantics = ExecutionSemantics::Coherent;
    std::uint64_t seed = 0;
    double support_threshold = kDefaultSupportThreshold;
};

json config_to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const json& j);

Graph resolve_graph_spec(const std::string& spec);
EdgeOrdering resolve_ordering_spec(const std::string& spec, const Graph& g, Rng& rng);

} // namespace qmatch
