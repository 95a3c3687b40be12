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

#ifndef MDAUDIT_KINEMATICS_HPP
#define MDAUDIT_KINEMATICS_HPP

#include <cstddef>
#include <vector>

#include "mdaudit/mocap.hpp"

namespace mdaudit {

// Uniformly sampled scalar signal; units depend on context (m, m/s, Hz).
struct ScalarSeries {
  double rate_hz = 0.0;
  std::vector<double> values;
};

// r[t] = |x_m(t) - radar_pos|. A zero range anywhere is degenerate geometry.
ScalarSeries range_series(const MoCapSequence& seq, std::size_t marker,
                          const Vec3& radar_pos);

// Central differences on interior samples, one-sided first differences at the
// endpoints, so the output stays length-aligned with the input framing.
ScalarSeries radial_velocity(const ScalarSeries& range);

// f[t] = 2 v[t] / wavelength. Positive when receding.
ScalarSeries doppler_frequency(const ScalarSeries& velocity, double wavelength_m);

// Velocity intervention: rescales each marker's radial displacement about its
// first-sample range, r_a(t) = r(0) + alpha * (r(t) - r(0)), keeping the
// bearing from the radar unchanged. The radial velocity of the output is
// alpha times that of the input. Throws DataError when a rescaled range
// would be nonpositive (reporting marker and sample) or when a marker sits
// on the radar.
MoCapSequence scale_velocity(const MoCapSequence& seq, const Vec3& radar_pos,
                             double alpha);

}  // namespace mdaudit

#endif  // MDAUDIT_KINEMATICS_HPP
