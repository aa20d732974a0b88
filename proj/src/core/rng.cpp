#include "agfsync/core/rng.hpp"

#include <cmath>
#include <numbers>

#include "agfsync/core/sha256.hpp"

namespace agfsync::core {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t CounterRng::bits(std::uint64_t counter) const {
    return splitmix64(seed_ + (counter + 1) * 0x9e3779b97f4a7c15ULL);
}

double CounterRng::uniform01(std::uint64_t counter) const {
    return double(bits(counter) >> 11) * 0x1.0p-53;
}

double CounterRng::gaussian(std::uint64_t counter) const {
    // u1 in (0, 1] so log() stays finite.
    double u1 = double((bits(2 * counter) >> 11) + 1) * 0x1.0p-53;
    double u2 = uniform01(2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t derive_seed(std::uint64_t root_seed, std::string_view label) {
    Sha256 h;
    std::uint8_t root_bytes[8];
    for (int i = 0; i < 8; ++i) root_bytes[i] = std::uint8_t(root_seed >> (8 * i));
    h.update(root_bytes, sizeof(root_bytes));
    h.update(label);
    auto digest = h.finish();
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | digest[std::size_t(i)];
    return v;
}

}  // namespace agfsync::core
