// Copyright 2026 the mdaudit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MDAUDIT_SPECTRAL_HPP
#define MDAUDIT_SPECTRAL_HPP

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "mdaudit/kinematics.hpp"

namespace mdaudit {

// Power floor applied to |X|^2 before the dB conversion; -120 dB.
inline constexpr double kSpectroPowerFloor = 1e-12;
inline constexpr double kSpectroFloorDb = -120.0;

// N x F matrix of power-dB values (10*log10(|X|^2)), frame-major, with the
// frequency axis shifted so bin k sits at f_k = (k - F/2) * fs / F.
struct Spectrogram {
  std::size_t frame_count = 0;
  std::size_t bin_count = 0;
  std::vector<double> values;  // frame_count * bin_count, frame-major
  double fs_hz = 0.0;
  int win_len = 0;
  int hop = 0;

  double& at(std::size_t frame, std::size_t bin) {
    return values[frame * bin_count + bin];
  }
  double at(std::size_t frame, std::size_t bin) const {
    return values[frame * bin_count + bin];
  }
  std::span<const double> frame(std::size_t n) const {
    return {values.data() + n * bin_count, bin_count};
  }
};

// Per-frame Doppler centroid trajectory (Hz) plus the framing that produced it.
struct CentroidSeries {
  std::vector<double> values;
  double fs_hz = 0.0;
  int win_len = 0;
  int hop = 0;

  bool framing_equals(const CentroidSeries& o) const {
    return fs_hz == o.fs_hz && win_len == o.win_len && hop == o.hop;
  }
};

// N = floor((T - L) / H) + 1; requires T >= L.
std::size_t stft_frame_count(std::size_t samples, int win_len, int hop);

// Frequency bin centers: f_k = (k - F/2) * fs / F over [-fs/2, fs/2).
// F must be even.
std::vector<double> frequency_axis(int fft_size, double fs_hz);

/// STFT power spectrogram of a complex baseband signal.
///
/// Per window: subtract the window's complex mean (DC removal), apply a
/// periodic Hann window, zero-pad to fft_size, transform, center the
/// zero-frequency bin, and store 10*log10(max(|X|^2, 1e-12)).
Spectrogram stft_spectrogram(std::span<const std::complex<double>> iq,
                             double fs_hz, int win_len, int hop, int fft_size);

// Power-weighted mean frequency per frame, P = 10^(S/10).
CentroidSeries centroid_trajectory(const Spectrogram& spec);

// Mean of the series over each STFT window, same framing arithmetic as
// stft_spectrogram.
CentroidSeries frame_average(const ScalarSeries& series, int win_len, int hop);

// Mean absolute difference in dB over all cells; shapes and framing must match.
double mae_db(const Spectrogram& a, const Spectrogram& b);

// SPECTRO-CSV v1:
//   #SPECTRO v1,frames=<N>,bins=<F>,fs=<float>,win=<L>,hop=<H>,
//       scale=power_db,floor_db=-120
//   N rows of F comma-separated dB values, bin 0 = -fs/2.
void write_spectro_csv(std::ostream& out, const Spectrogram& spec);
Spectrogram parse_spectro_csv(std::istream& in);

}  // namespace mdaudit

#endif  // MDAUDIT_SPECTRAL_HPP
