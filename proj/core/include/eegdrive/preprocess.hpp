#pragma once

#include <optional>
#include <span>
#include <vector>

#include "eegdrive/epoch.hpp"
#include "eegdrive/types.hpp"

namespace eegdrive {

struct NotchSpec {
  double center_hz = 50.0;
  double q_factor = 30.0;  // center / (-3 dB bandwidth)
  double sample_rate = kDefaultSampleRate;
};

// Second-order recursive notch (RBJ biquad): unity gain at DC and Nyquist,
// -3 dB bandwidth center/Q. Causal single pass; the same code runs offline
// and in the streaming window path so both see bit-identical filtering.
class BiquadNotch {
 public:
  explicit BiquadNotch(const NotchSpec& spec);

  double process(double x) {
    const double y = b0_ * x + s1_;
    s1_ = b1_ * x - a1_ * y + s2_;
    s2_ = b2_ * x - a2_ * y;
    return y;
  }

  void reset() { s1_ = s2_ = 0.0; }

  void process_in_place(std::span<double> signal);

 private:
  double b0_, b1_, b2_, a1_, a2_;
  double s1_ = 0.0, s2_ = 0.0;
};

// Per-channel mean subtraction; shape and label unchanged.
EegEpoch remove_dc(const EegEpoch& epoch);

// Applies the notch independently per channel, zero initial state.
EegEpoch notch_filter(const EegEpoch& epoch, const NotchSpec& spec);

struct ArtifactVerdict {
  bool accepted = true;
  double peak_abs_uv = 0.0;
  std::optional<ChannelId> offending_channel;
};

// Peak-amplitude artifact criterion: reject iff any |sample| > limit_uv.
// A sample exactly at the limit is accepted. Expects a DC-removed epoch.
ArtifactVerdict artifact_check(const EegEpoch& epoch, double limit_uv);

// Default cleaning chain: DC removal, then notches at 50 and 60 Hz, Q=30.
// Both stages can be toggled off for raw replication runs.
struct PreprocessConfig {
  bool dc_removal = true;
  bool notch = true;
  std::vector<double> notch_hz = {50.0, 60.0};
  double notch_q = 30.0;
  double artifact_limit_uv = 100.0;
};

EegEpoch preprocess_epoch(const EegEpoch& epoch, const PreprocessConfig& config);

}  // namespace eegdrive
