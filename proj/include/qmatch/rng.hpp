#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qmatch {

/// Deterministic random source. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard, and every derived draw below maps
/// raw 64-bit words to values with explicit arithmetic, so identical seeds
/// give identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double next_unit() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [lo, hi], inclusive, by modulo reduction.
    int uniform_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(eng_() % span);
    }

    /// Fisher-Yates shuffle driven by uniform_int.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            std::swap(v[static_cast<std::size_t>(uniform_int(0, i))],
                      v[static_cast<std::size_t>(i)]);
        }
    }

    /// Independent child stream; used to give sweep tasks stable seeds.
    Rng fork() { return Rng(next_u64()); }

  private:
    std::mt19937_64 eng_;
};

} // namespace qmatch
