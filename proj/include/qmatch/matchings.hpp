#pragma once

#include <cstdint>
#include <vector>

#include "qmatch/graph.hpp"

namespace qmatch {

/// Enumeration refuses graphs with more edges than this; 2^24 subsets is the
/// same budget as the statevector cap.
inline constexpr int kDefaultEnumCap = 24;

bool is_matching(const EdgeAdjacency& adj, BasisState s);
bool is_matching(const Graph& g, BasisState s);

/// True iff s is a matching and no edge can be added while keeping one.
/// Throws NotAMatching when s is not a matching.
bool is_maximal(const EdgeAdjacency& adj, BasisState s);
bool is_maximal(const Graph& g, BasisState s);

/// All matchings of g, deduplicated, sorted by (size, numeric value).
std::vector<BasisState> enumerate_matchings(const Graph& g, int cap = kDefaultEnumCap);

/// Matching census: phi_k[k] counts the distinct k-matchings, phi their
/// total, phi_plus the size-weighted total, nu the matching number.
struct MatchingCounts {
    std::vector<std::uint64_t> phi_k;
    std::uint64_t phi = 0;
    std::uint64_t phi_plus = 0;
    int nu = 0;
};

MatchingCounts matching_counts(const Graph& g, int cap = kDefaultEnumCap);

/// Exact C(n, k); 0 for k < 0 or k > n. Throws CapExceeded on uint64
/// overflow.
std::uint64_t binomial(int n, int k);

/// Distinct k-matchings of the cycle C_n (n >= 3), in closed form.
std::uint64_t cycle_matching_count(int n, int k);

/// Distinct k-matchings of the path on n_vertices vertices (n_vertices - 1
/// edges), in closed form.
std::uint64_t path_matching_count(int n_vertices, int k);

/// Size-indexed convolution of per-component count vectors: a k-matching of
/// a disjoint union splits as k = sum of per-component sizes.
std::vector<std::uint64_t> convolve_counts(const std::vector<std::vector<std::uint64_t>>& parts);

MatchingCounts combine_component_counts(const std::vector<MatchingCounts>& parts);

MatchingCounts counts_from_phi_k(std::vector<std::uint64_t> phi_k);

} // namespace qmatch
