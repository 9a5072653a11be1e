/*
   Copyright 2026 the rlmc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include <cmath>
#include <cstdint>

namespace rlmc::rng {

// Counter-based generator built on the splitmix64 finalizer.  Every random
// decision in the library is a pure function of (seed, stream, i, j, round),
// so draws are order-independent and identical under any parallel schedule.

enum Stream : std::uint64_t {
    kEntry = 1,      // per-entry Bernoulli inclusion
    kRow = 2,        // full-row sampling
    kPhaseOne = 3,   // two-phase: uniform keys
    kPhaseTwo = 4,   // two-phase: weighted reservoir keys
    kGauss = 5,      // synthetic data / random test matrices
    kDerive = 6,     // sub-seed derivation (trials, rounds)
};

inline std::uint64_t mix64(std::uint64_t z) {
    z += UINT64_C(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
    return z ^ (z >> 31);
}

inline std::uint64_t key(std::uint64_t seed, std::uint64_t stream,
                         std::uint64_t a, std::uint64_t b, std::uint64_t round) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ stream);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    h = mix64(h ^ round);
    return h;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform(std::uint64_t seed, std::uint64_t stream,
                      std::uint64_t a, std::uint64_t b, std::uint64_t round = 0) {
    return static_cast<double>(key(seed, stream, a, b, round) >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller on two counter uniforms (platform-stable,
/// unlike std::normal_distribution).
inline double gaussian(std::uint64_t seed, std::uint64_t stream,
                       std::uint64_t a, std::uint64_t b, std::uint64_t round = 0) {
    const double u1 = uniform(seed, stream, a, b, round * 2);
    const double u2 = uniform(seed, stream, a, b, round * 2 + 1);
    const double r = std::sqrt(-2.0 * std::log1p(-u1));  // u1 in [0,1) keeps the log finite
    return r * std::cos(2.0 * M_PI * u2);
}

/// Derive an independent sub-seed, e.g. one per trial index.
inline std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    return key(seed, kDerive, index, 0, 0);
}

}  // namespace rlmc::rng
