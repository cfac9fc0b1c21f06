#pragma once

#include <span>
#include <utility>
#include <vector>

#include "eegdrive/epoch.hpp"
#include "eegdrive/types.hpp"

namespace eegdrive {

enum class WindowKind {
  Hann,
  Rect,
};

struct WelchParams {
  std::size_t segment_len = 256;
  double overlap_fraction = 0.5;
  WindowKind window = WindowKind::Hann;
};

// One-sided spectrum, normalized so that sum(power) * bin_width recovers
// the mean square of the analyzed signal (the variance, once DC-removed).
struct PsdEstimate {
  std::vector<double> freqs;  // 0 .. sample_rate/2, segment_len/2 + 1 bins
  std::vector<double> power;  // uV^2 / Hz
  double bin_width = 0.0;
  WelchParams params;

  double total_power() const;  // sum(power) * bin_width
};

// Averaged modified periodograms. Segments are not detrended, so the
// rect/no-overlap configuration satisfies Parseval exactly when the
// segment length divides the signal length.
PsdEstimate welch_psd(std::span<const double> signal, double sample_rate,
                      const WelchParams& params = {});

// Rectangular sum of power * bin_width over bins whose center lies in
// [lo_hz, hi_hz). hi_hz may extend one bin past Nyquist so the whole-range
// query covers the Nyquist bin.
double band_power(const PsdEstimate& psd, double lo_hz, double hi_hz);

// Half-open canonical EEG bands.
struct Band {
  double lo_hz;
  double hi_hz;
};

struct BandTable {
  Band delta{0.5, 4.0};
  Band theta{4.0, 8.0};
  Band alpha{8.0, 15.0};
  Band beta{15.0, 32.0};
  Band gamma{32.0, 45.0};  // upper edge capped below the notch frequencies
};

const BandTable& default_bands();

// Broadband range used to rank channels; excludes DC drift and the
// 50/60 Hz notch region.
inline constexpr Band kSelectionBand{0.5, 45.0};

struct ChannelRanking {
  // (channel, mean total power) sorted by power descending, ties broken by
  // roster order.
  std::vector<std::pair<ChannelId, double>> ranked;
  std::vector<ChannelId> selected;  // first k of ranked
};

// Ranks channels by band-limited total power averaged over all trials.
// Expects DC-removed epochs.
ChannelRanking select_channels(const SessionDataset& dataset, int k,
                               const WelchParams& params = {},
                               Band selection_band = kSelectionBand);

}  // namespace eegdrive
