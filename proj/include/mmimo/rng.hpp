// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace mmimo::rng {

// Deterministic randomness layer. The engine is std::mt19937_64 (its output
// sequence is fixed by the standard); the distribution transforms are spelled
// out here because the std::*_distribution algorithms are
// implementation-defined and would break bit-reproducibility across stdlibs.

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Independent substream engine for (seed, stream). Used to give every
/// scenario drop and every Monte Carlo draw its own deterministic stream,
/// independent of scheduling order.
inline std::mt19937_64 engine_for(uint64_t seed, uint64_t stream) {
    uint64_t s = seed;
    uint64_t a = splitmix64(s);
    s ^= stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
    uint64_t b = splitmix64(s);
    return std::mt19937_64(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

/// Uniform in [0,1) with 53 random bits.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& eng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(eng);
}

/// Uniform integer in [0, bound), rejection-sampled, bound >= 1.
inline uint64_t uniform_int(std::mt19937_64& eng, uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = eng();
    } while (x >= limit);
    return x % bound;
}

/// Standard normal via Box-Muller; one draw consumes two uniforms.
inline double normal(std::mt19937_64& eng) {
    double u1 = uniform01(eng);
    while (u1 <= 0.0) u1 = uniform01(eng);
    const double u2 = uniform01(eng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

/// Circularly-symmetric complex normal CN(0,1); uses one Box-Muller pair.
inline std::complex<double> cnormal(std::mt19937_64& eng) {
    double u1 = uniform01(eng);
    while (u1 <= 0.0) u1 = uniform01(eng);
    const double u2 = uniform01(eng);
    const double r = std::sqrt(-std::log(u1)); // sqrt(-2 ln u) / sqrt(2)
    const double phi = 6.283185307179586476925287 * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

/// Fisher-Yates shuffle driven by uniform_int.
template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& eng) {
    for (size_t i = v.size(); i > 1; --i) {
        const size_t j = static_cast<size_t>(uniform_int(eng, i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace mmimo::rng
