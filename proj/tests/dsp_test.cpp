// tests/dsp_test.cpp

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

#include "augvox/dsp/fft.hpp"

#include <complex>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace augvox::dsp {
namespace {

// O(n^2) reference DFT, evaluated straight from the definition.
std::vector<std::complex<double>> naive_dft(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n / 2 + 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      const double angle = -2.0 * test::kPi * static_cast<double>(k) *
                           static_cast<double>(i) / static_cast<double>(n);
      acc += x[i] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    out[k] = acc;
  }
  return out;
}

// O(n*m) reference convolution.
std::vector<double> direct_convolve(const std::vector<double>& a,
                                    const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

TEST(Fft, MatchesNaiveDftAcrossLengths) {
  for (std::size_t n : {1u, 2u, 7u, 16u, 100u, 257u}) {
    const auto x = test::make_noise_signal(n, 1000 + n);
    const auto fast = rfft(x);
    const auto slow = naive_dft(x);
    ASSERT_EQ(fast.size(), slow.size());
    for (std::size_t k = 0; k < fast.size(); ++k) {
      EXPECT_NEAR(fast[k].real(), slow[k].real(), 1e-9) << "n=" << n << " k=" << k;
      EXPECT_NEAR(fast[k].imag(), slow[k].imag(), 1e-9) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Fft, RoundTripRecoversSignal) {
  for (std::size_t n : {2u, 15u, 64u, 1001u}) {
    const auto x = test::make_noise_signal(n, 2000 + n);
    const auto back = irfft(rfft(x), n);
    EXPECT_LT(test::max_abs_diff(x, back), 1e-12) << "n=" << n;
  }
}

TEST(Fft, ConvolutionMatchesDirectForm) {
  const struct {
    std::size_t na, nb;
  } cases[] = {{5, 3}, {1, 1}, {100, 17}, {1024, 64}, {313, 313}};
  for (const auto& c : cases) {
    const auto a = test::make_noise_signal(c.na, 31 * c.na + c.nb);
    const auto b = test::make_noise_signal(c.nb, 17 * c.nb + c.na);
    const auto fast = fft_convolve(a, b);
    const auto slow = direct_convolve(a, b);
    ASSERT_EQ(fast.size(), c.na + c.nb - 1);
    EXPECT_LT(test::max_abs_diff(fast, slow), 1e-9)
        << "na=" << c.na << " nb=" << c.nb;
  }
}

TEST(Fft, DelayedImpulseShiftsTheSignal) {
  const auto x = test::make_noise_signal(200, 55);
  std::vector<double> delta(33, 0.0);
  delta[32] = 1.0;
  const auto y = fft_convolve(x, delta);
  ASSERT_EQ(y.size(), 232u);
  for (std::size_t i = 0; i < 32; ++i) EXPECT_NEAR(y[i], 0.0, 1e-10);
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(y[i + 32], x[i], 1e-10);
}

TEST(Fft, DominantFrequencyFindsTonePeak) {
  const auto tone = test::make_tone(440.0, 1.0, 16000);
  EXPECT_NEAR(dominant_frequency(tone.samples, tone.sample_rate), 440.0, 1.5);
  const auto low = test::make_tone(50.0, 2.0, 8000);
  EXPECT_NEAR(dominant_frequency(low.samples, low.sample_rate), 50.0, 1.0);
}

TEST(Fft, PowerSpectrumHasHalfPlusOneBins) {
  const auto x = test::make_noise_signal(256, 9);
  EXPECT_EQ(power_spectrum(x).size(), 129u);
  EXPECT_THROW(rfft({}), Error);
}

}  // namespace
}  // namespace augvox::dsp
