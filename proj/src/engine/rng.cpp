#include "socsim/engine/rng.hpp"

#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace socsim {

std::uint64_t RngStream::uniform_index(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("empty choice set");
    if (n == 1) return 0;
    constexpr std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    // Reject draws from the incomplete final block of size (2^64 mod n).
    const std::uint64_t rem = (max % n + 1) % n;
    for (;;) {
        const std::uint64_t x = next_u64();
        if (rem == 0 || x <= max - rem) return x % n;
    }
}

std::vector<std::size_t> RngStream::permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) {
        const std::uint64_t j = uniform_index(i);
        std::swap(p[i - 1], p[static_cast<std::size_t>(j)]);
    }
    return p;
}

std::ostream& operator<<(std::ostream& os, const RngStream& rng) { return os << rng.engine_; }

std::istream& operator>>(std::istream& is, RngStream& rng) { return is >> rng.engine_; }

}  // namespace socsim
