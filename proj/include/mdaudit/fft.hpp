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

#ifndef MDAUDIT_FFT_HPP
#define MDAUDIT_FFT_HPP

#include <complex>
#include <vector>

namespace mdaudit {

// Forward DFT, X[k] = sum_n x[n] exp(-j 2 pi n k / N), computed in place.
// Radix-2 for power-of-two sizes, direct evaluation otherwise.
void fft_inplace(std::vector<std::complex<double>>& data);

}  // namespace mdaudit

#endif  // MDAUDIT_FFT_HPP
