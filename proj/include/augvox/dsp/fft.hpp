// include/augvox/dsp/fft.hpp

// Copyright 2026  The augvox authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <mutex>
#include <vector>

#include <fftw3.h>

#include "augvox/common.hpp"

namespace augvox::dsp {

// FFTW planner calls are not thread-safe; executing distinct plans is.
inline std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Forward real FFT of length n, returning the n/2 + 1 non-redundant bins.
inline std::vector<std::complex<double>> rfft(const std::vector<double>& x) {
  require(!x.empty(), "rfft: empty input");
  const std::size_t n = x.size();
  std::vector<double> in(x);
  std::vector<std::complex<double>> out(n / 2 + 1);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(),
                                reinterpret_cast<fftw_complex*>(out.data()),
                                FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

// Inverse of rfft. FFTW's c2r transform is unnormalized; this divides by n.
inline std::vector<double> irfft(const std::vector<std::complex<double>>& spec,
                                 std::size_t n) {
  require(spec.size() == n / 2 + 1, "irfft: spectrum size does not match n");
  std::vector<std::complex<double>> in(spec);
  std::vector<double> out(n);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    plan = fftw_plan_dft_c2r_1d(static_cast<int>(n),
                                reinterpret_cast<fftw_complex*>(in.data()),
                                out.data(), FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  for (double& v : out) v /= static_cast<double>(n);
  return out;
}

// Full linear convolution via zero-padded FFTs, output length |a| + |b| - 1.
inline std::vector<double> fft_convolve(const std::vector<double>& a,
                                        const std::vector<double>& b) {
  require(!a.empty() && !b.empty(), "fft_convolve: empty input");
  const std::size_t out_len = a.size() + b.size() - 1;
  const std::size_t n = next_pow2(out_len);
  std::vector<double> pa(n, 0.0), pb(n, 0.0);
  std::copy(a.begin(), a.end(), pa.begin());
  std::copy(b.begin(), b.end(), pb.begin());
  auto sa = rfft(pa);
  const auto sb = rfft(pb);
  for (std::size_t i = 0; i < sa.size(); ++i) sa[i] *= sb[i];
  auto full = irfft(sa, n);
  full.resize(out_len);
  return full;
}

// Squared-magnitude spectrum of a Hann-windowed signal. Used for peak
// measurements; the window keeps leakage from smearing nearby bins.
inline std::vector<double> power_spectrum(const std::vector<double>& x) {
  require(!x.empty(), "power_spectrum: empty input");
  const std::size_t n = x.size();
  std::vector<double> windowed(n);
  const double two_pi = 6.283185307179586476925286766559;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = 0.5 - 0.5 * std::cos(two_pi * static_cast<double>(i) /
                                          static_cast<double>(n));
    windowed[i] = x[i] * w;
  }
  const auto spec = rfft(windowed);
  std::vector<double> power(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) power[i] = std::norm(spec[i]);
  return power;
}

// Frequency in Hz of the strongest spectral bin.
inline double dominant_frequency(const std::vector<double>& x, int sample_rate) {
  const auto power = power_spectrum(x);
  const auto it = std::max_element(power.begin(), power.end());
  const auto bin = static_cast<std::size_t>(it - power.begin());
  return static_cast<double>(bin) * sample_rate / static_cast<double>(x.size());
}

}  // namespace augvox::dsp
