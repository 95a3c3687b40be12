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

#include "mdaudit/kinematics.hpp"

#include <string>

#include "mdaudit/errors.hpp"

namespace mdaudit {

ScalarSeries range_series(const MoCapSequence& seq, std::size_t marker,
                          const Vec3& radar_pos) {
  if (marker >= seq.marker_count()) {
    throw DataError("marker index " + std::to_string(marker) + " out of range");
  }
  const std::size_t T = seq.frame_count();
  ScalarSeries out;
  out.rate_hz = seq.rate_hz;
  out.values.resize(T);
  for (std::size_t t = 0; t < T; ++t) {
    const double r = (seq.at(t, marker) - radar_pos).norm();
    if (!(r > 0.0)) {
      throw DataError("degenerate geometry: marker '" + seq.markers[marker] +
                      "' coincides with the radar at sample " + std::to_string(t));
    }
    out.values[t] = r;
  }
  return out;
}

ScalarSeries radial_velocity(const ScalarSeries& range) {
  const std::size_t T = range.values.size();
  if (T < 3) {
    throw DataError("radial velocity needs at least 3 samples, got " +
                    std::to_string(T));
  }
  const double dt = 1.0 / range.rate_hz;
  ScalarSeries out;
  out.rate_hz = range.rate_hz;
  out.values.resize(T);
  out.values[0] = (range.values[1] - range.values[0]) / dt;
  for (std::size_t t = 1; t + 1 < T; ++t) {
    out.values[t] = (range.values[t + 1] - range.values[t - 1]) / (2.0 * dt);
  }
  out.values[T - 1] = (range.values[T - 1] - range.values[T - 2]) / dt;
  return out;
}

ScalarSeries doppler_frequency(const ScalarSeries& velocity, double wavelength_m) {
  if (!(wavelength_m > 0.0)) throw ConfigError("wavelength must be positive");
  ScalarSeries out;
  out.rate_hz = velocity.rate_hz;
  out.values.reserve(velocity.values.size());
  for (double v : velocity.values) out.values.push_back(2.0 * v / wavelength_m);
  return out;
}

MoCapSequence scale_velocity(const MoCapSequence& seq, const Vec3& radar_pos,
                             double alpha) {
  const std::size_t T = seq.frame_count();
  const std::size_t M = seq.marker_count();

  MoCapSequence out;
  out.rate_hz = seq.rate_hz;
  out.t0 = seq.t0;
  out.markers = seq.markers;
  out.positions.resize(T * M);

  for (std::size_t m = 0; m < M; ++m) {
    const double r0 = (seq.at(0, m) - radar_pos).norm();
    if (!(r0 > 0.0)) {
      throw DataError("degenerate geometry: marker '" + seq.markers[m] +
                      "' coincides with the radar at sample 0");
    }
    for (std::size_t t = 0; t < T; ++t) {
      const Vec3 offset = seq.at(t, m) - radar_pos;
      const double r = offset.norm();
      if (!(r > 0.0)) {
        throw DataError("degenerate geometry: marker '" + seq.markers[m] +
                        "' coincides with the radar at sample " + std::to_string(t));
      }
      const double r_scaled = r0 + alpha * (r - r0);
      if (!(r_scaled > 0.0)) {
        throw DataError("velocity intervention infeasible: alpha=" +
                        std::to_string(alpha) + " drives marker '" +
                        seq.markers[m] + "' to nonpositive range at sample " +
                        std::to_string(t));
      }
      out.positions[t * M + m] = radar_pos + (r_scaled / r) * offset;
    }
  }
  return out;
}

}  // namespace mdaudit
