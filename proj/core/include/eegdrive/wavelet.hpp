#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "eegdrive/epoch.hpp"
#include "eegdrive/types.hpp"

namespace eegdrive {

// 8-tap orthonormal filter bank with 4 vanishing moments. The taps are not
// transcribed constants: db4_filter_pair() builds them by spectral
// factorization of the Daubechies polynomial, so the orthonormality and
// moment conditions hold to machine precision by construction.
struct WaveletFilterPair {
  std::array<double, 8> lowpass;   // h
  std::array<double, 8> highpass;  // g[n] = (-1)^n h[7-n]
};

const WaveletFilterPair& db4_filter_pair();

// Periodized multilevel decomposition. details[0] is D1 (finest);
// approx is the final-level A vector.
struct WaveletDecomposition {
  std::vector<std::vector<double>> details;
  std::vector<double> approx;

  int levels() const { return static_cast<int>(details.size()); }
  std::size_t signal_length() const;
  std::vector<std::size_t> level_lengths() const;  // |D1|..|Dn|, |An|
  double coefficient_energy() const;
};

// Circular convolution with h/g and downsample by 2, repeated `levels`
// times on the running approximation. Signal length must be divisible by
// 2^levels.
WaveletDecomposition dwt_decompose(std::span<const double> signal,
                                   int levels = 5);

// Exact inverse of dwt_decompose (the transform is orthonormal, so the
// adjoint inverts it).
std::vector<double> idwt_reconstruct(const WaveletDecomposition& decomp);

// Default feature series are the orthogonal partition D1..D5 + A5;
// Approximations reproduces the nested A1..A5 reading instead.
enum class FeatureMode {
  Subbands,
  Approximations,
};

struct FeatureVector {
  std::vector<double> values;
  std::string schema_id;
};

inline constexpr int kStatsPerSeries = 3;  // mean |c|, mean c^2, std

// Per selected channel (in the order given): decompose, then per series
// emit [mean abs, mean square, std]. Channels outer, series middle,
// statistics inner.
FeatureVector extract_features(const EegEpoch& epoch,
                               std::span<const ChannelId> selected,
                               FeatureMode mode = FeatureMode::Subbands,
                               int levels = 5);

std::string feature_schema_id(std::span<const ChannelId> selected,
                              FeatureMode mode, int levels);

std::size_t feature_length(std::size_t selected_channels, FeatureMode mode,
                           int levels);

}  // namespace eegdrive
