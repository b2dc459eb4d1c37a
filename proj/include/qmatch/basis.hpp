#pragma once

#include <bit>
#include <cstdint>
#include <string>

namespace qmatch {

/// One computational basis state over edge qubits. Bit i holds the indicator
/// variable of edge e_i, so a basis state doubles as an edge subset.
using BasisState = std::uint64_t;

inline int hamming_weight(BasisState z) { return std::popcount(z); }

/// Ket rendering puts the qubit of e_0 leftmost: on a 4-edge graph the subset
/// {e_0, e_2} prints as "1010".
std::string to_ket(BasisState z, int m);

/// Inverse of to_ket. Throws InvalidConfig on non-binary input.
BasisState from_ket(const std::string& ket);

} // namespace qmatch
