#include "abwalk/core/rng.hpp"

namespace abwalk {

std::uint64_t Xoshiro256ss::below(std::uint64_t bound) noexcept {
    if (bound <= 1) return 0;
    __extension__ typedef unsigned __int128 u128;
    u128 m = static_cast<u128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<u128>((*this)()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace abwalk
