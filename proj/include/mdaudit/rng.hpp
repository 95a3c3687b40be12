// Copyright 2026 the mdaudit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MDAUDIT_RNG_HPP
#define MDAUDIT_RNG_HPP

#include <cmath>
#include <cstdint>

namespace mdaudit {

// Counter-based randomness: every draw is a pure function of (seed, index),
// so parallel evaluation schedules cannot change the stream. Not suitable
// for cryptography; plenty for seeded simulation noise and permutations.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_at(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

// Uniform in [0, 1) with 53-bit resolution.
inline double uniform_at(std::uint64_t seed, std::uint64_t index) {
  return static_cast<double>(hash_at(seed, index) >> 11) * 0x1.0p-53;
}

// Standard normal pair via Box-Muller on two counter draws.
inline void gaussian_pair_at(std::uint64_t seed, std::uint64_t index,
                             double* g0, double* g1) {
  const double u1 = uniform_at(seed, 2 * index);
  const double u2 = uniform_at(seed, 2 * index + 1);
  const double radius = std::sqrt(-2.0 * std::log1p(-u1));  // u1 < 1, log arg > 0
  const double angle = 2.0 * M_PI * u2;
  *g0 = radius * std::cos(angle);
  *g1 = radius * std::sin(angle);
}

// Unbiased bounded draw (multiply-shift); bound must be nonzero.
inline std::uint64_t bounded_at(std::uint64_t seed, std::uint64_t index,
                                std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(hash_at(seed, index)) * bound) >> 64);
}

}  // namespace mdaudit

#endif  // MDAUDIT_RNG_HPP
