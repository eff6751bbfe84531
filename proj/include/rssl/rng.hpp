#pragma once

#include <cmath>
#include <cstdint>
#include <random>

// Deterministic randomness.  mt19937_64 has a standard-mandated output
// sequence; the transforms below avoid std::*_distribution, whose results
// vary between standard library implementations.  Given a seed, every
// stream of doubles produced here is bit-identical across platforms.

namespace rssl::rng {

using Engine = std::mt19937_64;

// uniform in [0, 1)
inline double uniform01(Engine& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform(Engine& g, double lo, double hi) {
    return lo + (hi - lo) * uniform01(g);
}

// standard normal via Box-Muller; consumes two engine outputs per value
inline double normal(Engine& g) {
    const double u1 = static_cast<double>((g() >> 11) + 1) * 0x1.0p-53; // (0, 1]
    const double u2 = uniform01(g);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

} // namespace rssl::rng
