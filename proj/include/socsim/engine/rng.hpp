#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

namespace socsim {

// Seeded deterministic random source. The generator (mt19937_64, whose output
// sequence is fixed by the standard) and the derivation of every value from
// its raw 64-bit output are pinned here, so a seed reproduces the same
// sequence on every platform. Period 2^19937 - 1.
class RngStream {
public:
    static constexpr const char* kAlgorithm = "mt19937_64";

    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased index in [0, n) via rejection sampling (no modulo bias).
    // n == 1 returns 0 without consuming output; n == 0 throws.
    std::uint64_t uniform_index(std::uint64_t n);

    // Uniform in [0, 1), 53-bit resolution.
    double uniform_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1].
    double uniform_double_open_closed() { return 1.0 - uniform_double(); }

    // Unbiased Fisher-Yates shuffle of [0, n).
    std::vector<std::size_t> permutation(std::size_t n);

    friend bool operator==(const RngStream&, const RngStream&) = default;

    // State serialization, text format of the underlying engine.
    friend std::ostream& operator<<(std::ostream& os, const RngStream& rng);
    friend std::istream& operator>>(std::istream& is, RngStream& rng);

private:
    std::mt19937_64 engine_;
};

}  // namespace socsim
