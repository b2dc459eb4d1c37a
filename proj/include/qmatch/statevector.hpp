#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "qmatch/basis.hpp"
#include "qmatch/rng.hpp"

namespace qmatch {

using Amplitude = std::complex<double>;

/// 2^m amplitudes is 256 MiB at m = 24; refuse anything larger.
inline constexpr int kDefaultQubitCap = 24;

/// Default |amplitude| cutoff deciding "non-zero" support membership. The
/// smallest genuine amplitude at the tested beta values is above 1e-6, so
/// 1e-9 separates cleanly.
inline constexpr double kDefaultSupportThreshold = 1e-9;

/// Dense state over m edge qubits; amps[z] is the amplitude of basis state z.
struct StateVector {
    int m = 0;
    std::vector<Amplitude> amps;

    static StateVector zero(int m);
    std::size_t dim() const { return amps.size(); }
};

enum class InitKind { Empty, W1 };

/// Empty: amplitude 1 on the all-zero state. W1: amplitude 1/sqrt(m) on each
/// Hamming-weight-1 state.
StateVector prepare_initial(InitKind kind, int m, int cap = kDefaultQubitCap);

double norm2(const StateVector& sv);

/// Divides by sqrt(norm2); throws ZeroNorm on the zero vector.
void normalize(StateVector& sv);

bool is_normalized(const StateVector& sv, double tol = 1e-10);

/// Basis state -> probability, zero entries pruned. Requires a normalized
/// input (throws NotNormalized otherwise).
using MeasurementDistribution = std::map<BasisState, double>;

MeasurementDistribution distribution(const StateVector& sv);

std::vector<BasisState> support(const StateVector& sv, double threshold = kDefaultSupportThreshold);

/// Support of a distribution, thresholded on probability > threshold^2 so it
/// matches the amplitude cutoff above.
std::vector<BasisState> support(const MeasurementDistribution& d,
                                double threshold = kDefaultSupportThreshold);

double expected_weight(const MeasurementDistribution& d);

/// Multinomial draw by inverse CDF over states in ascending basis order; one
/// Rng::next_unit() per shot, so counts are bit-reproducible given the seed.
std::map<BasisState, std::uint64_t> sample(const MeasurementDistribution& d,
                                           std::uint64_t shots, std::uint64_t seed);

} // namespace qmatch
