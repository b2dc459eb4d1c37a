#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qmatch/basis.hpp"

namespace qmatch {

/// Undirected simple graph. Edge indices are assigned at construction time,
/// in input order, and are never reordered afterwards; sweep orderings are a
/// separate permutation layer on top.
struct Graph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Validating constructor. Rejects loops, duplicate edges (either direction)
/// and endpoints outside [0, num_vertices).
Graph build_graph(int num_vertices, std::vector<std::pair<int, int>> edges);

Graph make_cycle(int n);
Graph make_path(int n_vertices);
/// Disjoint union of cycles; edges indexed component by component, each
/// cyclically.
Graph make_two_regular(const std::vector<int>& cycle_sizes);

std::vector<int> vertex_degrees(const Graph& g);
bool is_two_regular(const Graph& g);

/// Per-edge neighbourhood nbhd(e): the edges sharing a vertex with e,
/// excluding e itself. masks[e] has bit j set iff e_j is in nbhd(e).
struct EdgeAdjacency {
    std::vector<std::uint64_t> masks;
    std::vector<std::vector<int>> lists;

    int edge_count() const { return static_cast<int>(masks.size()); }
};

EdgeAdjacency edge_adjacency(const Graph& g);

/// One connected component with at least one edge. edge_map[j] gives the
/// original index of the component's j-th edge; vertex_map likewise for
/// vertices.
struct Component {
    Graph graph;
    std::vector<int> edge_map;
    std::vector<int> vertex_map;
};

/// Components ordered by their smallest original edge index. Vertex-only
/// components are dropped; an edgeless graph yields an empty list.
std::vector<Component> components(const Graph& g);

enum class OrderingKind { Fixed, Arbitrary };

/// Permutation of 0..m-1 giving the order in which a mixer sweep visits
/// edges.
struct EdgeOrdering {
    std::vector<int> order;
    OrderingKind kind = OrderingKind::Arbitrary;
};

/// Cyclical (or path) visitation order, defined when every component is a
/// cycle or a path. Components are concatenated by smallest edge index; each
/// cycle is walked from its lowest-indexed edge, each path from end to end
/// starting on the side of its lower-indexed terminal edge.
EdgeOrdering fixed_ordering(const Graph& g);

/// Validates that perm is a permutation of 0..m-1 and tags it arbitrary.
EdgeOrdering arbitrary_ordering(std::vector<int> perm, int m);

EdgeOrdering identity_ordering(int m);

} // namespace qmatch
