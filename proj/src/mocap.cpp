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

#include "mdaudit/mocap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "mdaudit/errors.hpp"

namespace mdaudit {
namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(trim(line.substr(start)));
      break;
    }
    out.emplace_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
  return out;
}

double parse_finite_double(const std::string& text, std::size_t line_no,
                           const char* what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": non-numeric " +
                     what + " '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line_no) + ": non-numeric " +
                     what + " '" + text + "'");
  }
  return value;
}

// FNV-1a 64-bit, hex string.
std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

RadarConfig RadarConfig::from_carrier(double carrier_hz, double fs_hz) {
  if (!(carrier_hz > 0.0)) throw ConfigError("carrier_hz must be positive");
  if (!(fs_hz > 0.0)) throw ConfigError("fs_hz must be positive");
  RadarConfig cfg;
  cfg.carrier_hz = carrier_hz;
  cfg.wavelength_m = kSpeedOfLight / carrier_hz;
  cfg.fs_hz = fs_hz;
  return cfg;
}

RadarConfig parse_radar_config(std::istream& in) {
  double carrier_hz = 5.8e9;
  double fs_hz = 256.0;
  bool has_pos = false;
  Vec3 pos;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line.resize(comment);
    const std::string text = trim(line);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected key = value");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key == "carrier_hz") {
      carrier_hz = parse_finite_double(value, line_no, "carrier_hz");
    } else if (key == "fs_hz") {
      fs_hz = parse_finite_double(value, line_no, "fs_hz");
    } else if (key == "radar_pos") {
      std::istringstream fields(value);
      std::vector<double> coords;
      std::string token;
      while (fields >> token) {
        coords.push_back(parse_finite_double(token, line_no, "radar_pos"));
      }
      if (coords.size() != 3) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": radar_pos needs exactly three floats");
      }
      pos = {coords[0], coords[1], coords[2]};
      has_pos = true;
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" +
                       key + "'");
    }
  }
  RadarConfig cfg = RadarConfig::from_carrier(carrier_hz, fs_hz);
  cfg.has_radar_pos = has_pos;
  cfg.radar_pos = pos;
  return cfg;
}

double WeightTable::at(const std::string& marker) const {
  const auto it = entries.find(marker);
  return it == entries.end() ? 0.0 : it->second;
}

std::map<std::string, double> WeightTable::normalized() const {
  double sum = 0.0;
  for (const auto& [name, w] : entries) {
    if (w < 0.0) throw ConfigError("negative weight for marker '" + name + "'");
    sum += w;
  }
  if (!(sum > 0.0)) throw ConfigError("weight table needs at least one positive weight");
  std::map<std::string, double> norm;
  for (const auto& [name, w] : entries) norm[name] = w / sum;
  return norm;
}

std::string WeightTable::digest() const {
  std::ostringstream blob;
  for (const auto& [name, w] : normalized()) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", w);
    blob << name << '=' << buf << ';';
  }
  return fnv1a_hex(blob.str());
}

MoCapSequence parse_mocap(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("line 1: empty input");

  // Header: #MOCAP v1,rate=<float>,units=m
  const auto head = split(line, ',');
  if (head.size() != 3 || head[0] != "#MOCAP v1") {
    throw ParseError("line 1: expected '#MOCAP v1,rate=<float>,units=m'");
  }
  if (head[1].rfind("rate=", 0) != 0) {
    throw ParseError("line 1: missing rate= field");
  }
  const double rate = parse_finite_double(head[1].substr(5), 1, "rate");
  if (!(rate > 0.0)) throw ParseError("line 1: rate must be positive");
  if (head[2] != "units=m") {
    throw ParseError("line 1: only units=m is supported");
  }

  if (!std::getline(in, line)) throw ParseError("line 2: missing column header");
  const auto cols = split(line, ',');
  if (cols.empty() || cols[0] != "t") {
    throw ParseError("line 2: first column must be 't'");
  }
  if ((cols.size() - 1) % 3 != 0 || cols.size() < 4) {
    throw ParseError("line 2: marker columns must come in _x,_y,_z triplets");
  }

  MoCapSequence seq;
  seq.rate_hz = rate;
  std::set<std::string> seen;
  for (std::size_t i = 1; i < cols.size(); i += 3) {
    static constexpr const char* kSuffix[3] = {"_x", "_y", "_z"};
    std::string name;
    for (int a = 0; a < 3; ++a) {
      const std::string& col = cols[i + a];
      if (col.size() < 3 || col.substr(col.size() - 2) != kSuffix[a]) {
        throw ParseError("line 2: column '" + col + "' should end with " +
                         kSuffix[a]);
      }
      const std::string base = col.substr(0, col.size() - 2);
      if (a == 0) {
        name = base;
      } else if (base != name) {
        throw ParseError("line 2: triplet mismatch at column '" + col + "'");
      }
    }
    if (!seen.insert(name).second) {
      throw ParseError("line 2: duplicate marker name '" + name + "'");
    }
    seq.markers.push_back(name);
  }

  const std::size_t M = seq.markers.size();
  std::size_t line_no = 2;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 1 + 3 * M) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(1 + 3 * M) + " cells, got " +
                       std::to_string(cells.size()));
    }
    const double t = parse_finite_double(cells[0], line_no, "time");
    if (first_row) {
      seq.t0 = t;
      first_row = false;
    }
    for (std::size_t m = 0; m < M; ++m) {
      Vec3 p;
      p.x = parse_finite_double(cells[1 + 3 * m], line_no, "coordinate");
      p.y = parse_finite_double(cells[2 + 3 * m], line_no, "coordinate");
      p.z = parse_finite_double(cells[3 + 3 * m], line_no, "coordinate");
      seq.positions.push_back(p);
    }
  }
  if (seq.positions.empty()) {
    throw ParseError("line " + std::to_string(line_no + 1) + ": no data rows");
  }
  return seq;
}

void write_mocap_csv(std::ostream& out, const MoCapSequence& seq) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", seq.rate_hz);
  out << "#MOCAP v1,rate=" << buf << ",units=m\n";
  out << "t";
  for (const auto& name : seq.markers) {
    out << ',' << name << "_x," << name << "_y," << name << "_z";
  }
  out << '\n';
  const std::size_t T = seq.frame_count();
  const std::size_t M = seq.marker_count();
  for (std::size_t t = 0; t < T; ++t) {
    std::snprintf(buf, sizeof(buf), "%.9f", seq.t0 + static_cast<double>(t) / seq.rate_hz);
    out << buf;
    for (std::size_t m = 0; m < M; ++m) {
      const Vec3& p = seq.at(t, m);
      std::snprintf(buf, sizeof(buf), ",%.12g", p.x);
      out << buf;
      std::snprintf(buf, sizeof(buf), ",%.12g", p.y);
      out << buf;
      std::snprintf(buf, sizeof(buf), ",%.12g", p.z);
      out << buf;
    }
    out << '\n';
  }
}

MoCapSequence resample(const MoCapSequence& seq, double target_hz) {
  if (seq.frame_count() < 2) {
    throw DataError("resample needs at least 2 samples, got " +
                    std::to_string(seq.frame_count()));
  }
  if (!(target_hz > 0.0)) throw ConfigError("target rate must be positive");

  const std::size_t T = seq.frame_count();
  const std::size_t M = seq.marker_count();
  const double duration = static_cast<double>(T - 1) / seq.rate_hz;
  // Closed interval [0, duration]; the epsilon keeps exact multiples from
  // falling one sample short under FP rounding.
  const std::size_t out_count =
      static_cast<std::size_t>(std::floor(duration * target_hz + 1e-9)) + 1;

  MoCapSequence out;
  out.rate_hz = target_hz;
  out.t0 = seq.t0;
  out.markers = seq.markers;
  out.positions.resize(out_count * M);

  for (std::size_t k = 0; k < out_count; ++k) {
    const double t = static_cast<double>(k) / target_hz;
    double u = t * seq.rate_hz;
    std::size_t i0 = static_cast<std::size_t>(std::floor(u));
    if (i0 >= T - 1) i0 = T - 2;
    const double frac = std::clamp(u - static_cast<double>(i0), 0.0, 1.0);
    for (std::size_t m = 0; m < M; ++m) {
      const Vec3& a = seq.at(i0, m);
      const Vec3& b = seq.at(i0 + 1, m);
      out.positions[k * M + m] = a + frac * (b - a);
    }
  }
  return out;
}

Vec3 radar_position(const MoCapSequence& seq, std::string_view prefix) {
  const std::size_t T = seq.frame_count();
  const std::size_t M = seq.marker_count();
  Vec3 sum;
  std::size_t hits = 0;
  for (std::size_t m = 0; m < M; ++m) {
    if (seq.markers[m].rfind(prefix, 0) != 0) continue;
    for (std::size_t t = 0; t < T; ++t) sum = sum + seq.at(t, m);
    ++hits;
  }
  if (hits == 0) {
    throw ConfigError("no marker name starts with '" + std::string(prefix) +
                      "'; supply radar_pos explicitly");
  }
  return (1.0 / static_cast<double>(hits * T)) * sum;
}

MoCapSequence drop_markers_with_prefix(const MoCapSequence& seq,
                                       std::string_view prefix) {
  std::vector<std::size_t> keep;
  for (std::size_t m = 0; m < seq.marker_count(); ++m) {
    if (seq.markers[m].rfind(prefix, 0) != 0) keep.push_back(m);
  }
  if (keep.size() == seq.marker_count()) return seq;

  MoCapSequence out;
  out.rate_hz = seq.rate_hz;
  out.t0 = seq.t0;
  for (std::size_t m : keep) out.markers.push_back(seq.markers[m]);
  const std::size_t T = seq.frame_count();
  out.positions.reserve(T * keep.size());
  for (std::size_t t = 0; t < T; ++t) {
    for (std::size_t m : keep) out.positions.push_back(seq.at(t, m));
  }
  return out;
}

WeightTable load_weights(std::istream& in,
                         std::span<const std::string> markers,
                         std::vector<std::string>* missing) {
  std::map<std::string, double> segment_percent;
  std::map<std::string, std::string> marker_segment;
  std::map<std::string, std::size_t> segment_marker_count;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line.resize(comment);
    if (trim(line).empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 3) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'segment,<name>,<percent>' or "
                       "'marker,<marker>,<segment>'");
    }
    if (fields[0] == "segment") {
      const double pct = parse_finite_double(fields[2], line_no, "percent");
      if (pct < 0.0) {
        throw ConfigError("line " + std::to_string(line_no) +
                          ": negative percentage for segment '" + fields[1] + "'");
      }
      segment_percent[fields[1]] = pct;
    } else if (fields[0] == "marker") {
      marker_segment[fields[1]] = fields[2];
      ++segment_marker_count[fields[2]];
    } else {
      throw ParseError("line " + std::to_string(line_no) +
                       ": unknown record type '" + fields[0] + "'");
    }
  }

  for (const auto& [marker, segment] : marker_segment) {
    if (!segment_percent.count(segment)) {
      throw ConfigError("marker '" + marker + "' references unknown segment '" +
                        segment + "'");
    }
  }

  WeightTable table;
  for (const auto& name : markers) {
    const auto it = marker_segment.find(name);
    if (it == marker_segment.end()) {
      table.entries[name] = 0.0;
      if (missing) missing->push_back(name);
      continue;
    }
    table.entries[name] = segment_percent.at(it->second) /
                          static_cast<double>(segment_marker_count.at(it->second));
  }

  double sum = 0.0;
  for (const auto& [name, w] : table.entries) sum += w;
  if (!(sum > 0.0)) {
    throw ConfigError("weight table needs at least one positive weight over "
                      "the given markers");
  }
  return table;
}

std::string default_bsa_config_text() {
  // Wallace rule of nines; percentages sum to 100.
  return "# Body-surface-area weight table (rule of nines).\n"
         "# segment,<name>,<percent of body surface>\n"
         "segment,head,9\n"
         "segment,arm_left,9\n"
         "segment,arm_right,9\n"
         "segment,leg_left,18\n"
         "segment,leg_right,18\n"
         "segment,trunk_anterior,18\n"
         "segment,trunk_posterior,18\n"
         "segment,perineum,1\n"
         "# marker,<marker-name>,<segment-name>\n"
         "marker,HEAD,head\n"
         "marker,TORSO_FL,trunk_anterior\n"
         "marker,TORSO_FR,trunk_anterior\n"
         "marker,TORSO_BL,trunk_posterior\n"
         "marker,TORSO_BR,trunk_posterior\n"
         "marker,PELVIS,perineum\n"
         "marker,ARM_L,arm_left\n"
         "marker,ARM_R,arm_right\n"
         "marker,LEG_L,leg_left\n"
         "marker,LEG_R,leg_right\n";
}

WeightTable default_bsa_weights(std::span<const std::string> markers,
                                std::vector<std::string>* missing) {
  std::istringstream in(default_bsa_config_text());
  return load_weights(in, markers, missing);
}

}  // namespace mdaudit
