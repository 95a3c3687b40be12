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

#ifndef MDAUDIT_MOCAP_HPP
#define MDAUDIT_MOCAP_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdaudit/vec3.hpp"

namespace mdaudit {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// Time-indexed 3D marker trajectories. Positions are stored frame-major:
// positions[t * marker_count() + m]. Immutable after construction.
struct MoCapSequence {
  double rate_hz = 0.0;
  double t0 = 0.0;  // time of the first sample, seconds
  std::vector<std::string> markers;
  std::vector<Vec3> positions;

  std::size_t marker_count() const { return markers.size(); }
  std::size_t frame_count() const {
    return markers.empty() ? 0 : positions.size() / markers.size();
  }
  double duration_s() const {
    return frame_count() < 2 ? 0.0
                             : static_cast<double>(frame_count() - 1) / rate_hz;
  }
  const Vec3& at(std::size_t frame, std::size_t marker) const {
    return positions[frame * markers.size() + marker];
  }
  Vec3& at(std::size_t frame, std::size_t marker) {
    return positions[frame * markers.size() + marker];
  }
};

// Radar parameters. wavelength_m is always derived from carrier_hz.
struct RadarConfig {
  double carrier_hz = 0.0;
  double wavelength_m = 0.0;
  double fs_hz = 0.0;
  bool has_radar_pos = false;
  Vec3 radar_pos;

  static RadarConfig from_carrier(double carrier_hz, double fs_hz);
};

// Parses the `key = value` radar config format (carrier_hz, fs_hz,
// optional radar_pos as three floats).
RadarConfig parse_radar_config(std::istream& in);

// Per-marker nonnegative scattering weights. Raw values are kept as read;
// normalization happens on use.
struct WeightTable {
  std::map<std::string, double> entries;

  double at(const std::string& marker) const;
  // Raw weights scaled to sum to 1. Requires at least one positive entry.
  std::map<std::string, double> normalized() const;
  // Stable digest of the normalized table, for report provenance.
  std::string digest() const;
};

// MOCAP-CSV v1:
//   #MOCAP v1,rate=<float>,units=m
//   t,<name>_x,<name>_y,<name>_z,...
//   <numeric rows>
// Errors name the 1-based line number. Column order becomes marker order.
MoCapSequence parse_mocap(std::istream& in);
void write_mocap_csv(std::ostream& out, const MoCapSequence& seq);

// Per-coordinate linear interpolation onto the closed interval
// [t0, t0 + duration] at target_hz; output sample count is
// floor(duration * target_hz) + 1.
MoCapSequence resample(const MoCapSequence& seq, double target_hz);

// Mean position over all samples of all markers whose name starts with
// prefix. The radar rig is static, so a global time average suffices.
Vec3 radar_position(const MoCapSequence& seq, std::string_view prefix = "RADAR");

// Copy of seq without the markers matching prefix (rig markers are not part
// of the audited subject). Dropping nothing is fine.
MoCapSequence drop_markers_with_prefix(const MoCapSequence& seq,
                                       std::string_view prefix);

// Weight config format, `#` comments allowed:
//   segment,<name>,<percent>
//   marker,<marker-name>,<segment-name>
// Each marker gets segment_percent / markers_in_segment. Markers absent from
// the file get weight 0 and are appended to *missing when given.
WeightTable load_weights(std::istream& in,
                         std::span<const std::string> markers,
                         std::vector<std::string>* missing = nullptr);

// Built-in Wallace rule-of-nines table for the synthetic walker marker set;
// identical to the shipped data/bsa_rule_of_nines.cfg.
WeightTable default_bsa_weights(std::span<const std::string> markers,
                                std::vector<std::string>* missing = nullptr);
std::string default_bsa_config_text();

}  // namespace mdaudit

#endif  // MDAUDIT_MOCAP_HPP
