#include "eegdrive/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "eegdrive/errors.hpp"
#include "fft.hpp"

namespace eegdrive {

namespace {

std::vector<double> make_window(WindowKind kind, std::size_t len) {
  std::vector<double> w(len, 1.0);
  if (kind == WindowKind::Hann) {
    // Periodic Hann, the usual choice for averaged periodograms.
    for (std::size_t n = 0; n < len; ++n) {
      w[n] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi *
                                   static_cast<double>(n) /
                                   static_cast<double>(len)));
    }
  }
  return w;
}

}  // namespace

double PsdEstimate::total_power() const {
  double sum = 0.0;
  for (double p : power) sum += p;
  return sum * bin_width;
}

PsdEstimate welch_psd(std::span<const double> signal, double sample_rate,
                      const WelchParams& params) {
  if (signal.empty()) throw ValidationError("welch_psd: empty signal");
  if (!(sample_rate > 0.0)) {
    throw ValidationError("welch_psd: sample rate must be positive");
  }
  const std::size_t seg = params.segment_len;
  if (seg < 2 || seg % 2 != 0) {
    throw ValidationError("welch_psd: segment length must be even and >= 2");
  }
  if (seg > signal.size()) {
    throw ValidationError("welch_psd: segment longer than signal");
  }
  if (!(params.overlap_fraction >= 0.0 && params.overlap_fraction < 1.0)) {
    throw ValidationError("welch_psd: overlap must lie in [0, 1)");
  }

  const auto window = make_window(params.window, seg);
  double window_ssq = 0.0;
  for (double w : window) window_ssq += w * w;

  std::size_t step = static_cast<std::size_t>(
      std::llround(static_cast<double>(seg) * (1.0 - params.overlap_fraction)));
  step = std::max<std::size_t>(step, 1);
  const std::size_t n_segments = (signal.size() - seg) / step + 1;

  const std::size_t n_bins = seg / 2 + 1;
  std::vector<double> acc(n_bins, 0.0);
  std::vector<double> buffer(seg);
  for (std::size_t s = 0; s < n_segments; ++s) {
    const std::size_t start = s * step;
    for (std::size_t i = 0; i < seg; ++i) {
      buffer[i] = signal[start + i] * window[i];
    }
    const auto spectrum = detail::fft_real(buffer);
    for (std::size_t k = 0; k < n_bins; ++k) {
      acc[k] += std::norm(spectrum[k]);
    }
  }

  // 1/(fs * sum w^2) periodogram scaling, averaged over segments; interior
  // bins doubled for the one-sided spectrum.
  PsdEstimate psd;
  psd.params = params;
  psd.bin_width = sample_rate / static_cast<double>(seg);
  psd.freqs.resize(n_bins);
  psd.power.resize(n_bins);
  const double scale =
      1.0 / (sample_rate * window_ssq * static_cast<double>(n_segments));
  for (std::size_t k = 0; k < n_bins; ++k) {
    psd.freqs[k] = static_cast<double>(k) * psd.bin_width;
    double p = acc[k] * scale;
    if (k != 0 && k != n_bins - 1) p *= 2.0;
    psd.power[k] = p;
  }
  return psd;
}

double band_power(const PsdEstimate& psd, double lo_hz, double hi_hz) {
  const double nyquist = psd.freqs.back();
  if (lo_hz < 0.0 || !(lo_hz < hi_hz) || hi_hz > nyquist + psd.bin_width) {
    throw ValidationError("band_power: invalid band [" +
                          std::to_string(lo_hz) + ", " +
                          std::to_string(hi_hz) + ")");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < psd.freqs.size(); ++k) {
    if (psd.freqs[k] >= lo_hz && psd.freqs[k] < hi_hz) sum += psd.power[k];
  }
  return sum * psd.bin_width;
}

const BandTable& default_bands() {
  static const BandTable table{};
  return table;
}

ChannelRanking select_channels(const SessionDataset& dataset, int k,
                               const WelchParams& params,
                               Band selection_band) {
  if (dataset.trials.empty()) {
    throw ValidationError("select_channels: empty dataset");
  }
  const int n_channels = static_cast<int>(dataset.channels.size());
  if (k < 1 || k > n_channels) {
    throw ValidationError("select_channels: k out of range");
  }

  ChannelRanking ranking;
  ranking.ranked.reserve(n_channels);
  for (int ch = 0; ch < n_channels; ++ch) {
    double acc = 0.0;
    for (const auto& trial : dataset.trials) {
      const auto psd = welch_psd(trial.samples[ch], trial.sample_rate, params);
      acc += band_power(psd, selection_band.lo_hz, selection_band.hi_hz);
    }
    acc /= static_cast<double>(dataset.trials.size());
    ranking.ranked.emplace_back(dataset.channels[ch], acc);
  }

  // Stable sort keeps roster order among equal powers.
  std::stable_sort(ranking.ranked.begin(), ranking.ranked.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });

  ranking.selected.reserve(k);
  for (int i = 0; i < k; ++i) {
    ranking.selected.push_back(ranking.ranked[i].first);
  }
  return ranking;
}

}  // namespace eegdrive
