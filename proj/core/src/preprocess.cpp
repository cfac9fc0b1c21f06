#include "eegdrive/preprocess.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "eegdrive/errors.hpp"

namespace eegdrive {

BiquadNotch::BiquadNotch(const NotchSpec& spec) {
  if (!(spec.sample_rate > 0.0)) {
    throw ValidationError("notch sample rate must be positive");
  }
  if (!(spec.q_factor > 0.0)) {
    throw ValidationError("notch Q must be positive");
  }
  if (!(spec.center_hz > 0.0) || spec.center_hz >= spec.sample_rate / 2.0) {
    throw ValidationError("notch center " + std::to_string(spec.center_hz) +
                          " Hz must lie below Nyquist");
  }
  const double w0 = 2.0 * std::numbers::pi * spec.center_hz / spec.sample_rate;
  const double alpha = std::sin(w0) / (2.0 * spec.q_factor);
  const double cos_w0 = std::cos(w0);
  const double a0 = 1.0 + alpha;
  b0_ = 1.0 / a0;
  b1_ = -2.0 * cos_w0 / a0;
  b2_ = 1.0 / a0;
  a1_ = -2.0 * cos_w0 / a0;
  a2_ = (1.0 - alpha) / a0;
}

void BiquadNotch::process_in_place(std::span<double> signal) {
  for (double& v : signal) v = process(v);
}

EegEpoch remove_dc(const EegEpoch& epoch) {
  EegEpoch out = epoch;
  for (auto& row : out.samples) {
    if (row.empty()) continue;
    double sum = 0.0;
    for (double v : row) sum += v;
    const double mean = sum / static_cast<double>(row.size());
    for (double& v : row) v -= mean;
  }
  return out;
}

EegEpoch notch_filter(const EegEpoch& epoch, const NotchSpec& spec) {
  if (spec.sample_rate != epoch.sample_rate) {
    throw ValidationError("notch sample rate " +
                          std::to_string(spec.sample_rate) +
                          " does not match epoch rate " +
                          std::to_string(epoch.sample_rate));
  }
  EegEpoch out = epoch;
  for (auto& row : out.samples) {
    BiquadNotch filter(spec);
    filter.process_in_place(row);
  }
  return out;
}

ArtifactVerdict artifact_check(const EegEpoch& epoch, double limit_uv) {
  if (!(limit_uv > 0.0)) {
    throw ValidationError("artifact limit must be positive");
  }
  ArtifactVerdict verdict;
  for (std::size_t ch = 0; ch < epoch.channel_count(); ++ch) {
    double channel_peak = 0.0;
    for (double v : epoch.samples[ch]) {
      channel_peak = std::max(channel_peak, std::abs(v));
    }
    verdict.peak_abs_uv = std::max(verdict.peak_abs_uv, channel_peak);
    if (channel_peak > limit_uv && !verdict.offending_channel) {
      verdict.offending_channel = static_cast<ChannelId>(ch);
    }
  }
  verdict.accepted = verdict.peak_abs_uv <= limit_uv;
  return verdict;
}

EegEpoch preprocess_epoch(const EegEpoch& epoch,
                          const PreprocessConfig& config) {
  EegEpoch out = config.dc_removal ? remove_dc(epoch) : epoch;
  if (config.notch) {
    for (double hz : config.notch_hz) {
      out = notch_filter(
          out, NotchSpec{hz, config.notch_q, epoch.sample_rate});
    }
  }
  return out;
}

}  // namespace eegdrive
