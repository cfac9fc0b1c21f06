#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "eegdrive/epoch.hpp"
#include "eegdrive/types.hpp"

namespace eegdrive {

struct BandAmplitudes {
  double delta = 0.0;
  double theta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

// Each command is dominated by a different band so the generated session
// is separable end to end. Indexed by Command.
std::array<BandAmplitudes, kCommandCount> default_band_signature();

struct SynthSpec {
  int trials_per_command = 50;
  std::array<BandAmplitudes, kCommandCount> band_signature =
      default_band_signature();
  double noise_amp = 2.0;         // RMS of the 1/f background, uV
  double amplitude_jitter = 0.2;  // per-trial fraction
  std::uint64_t seed = 1;
  double sample_rate = kDefaultSampleRate;
  std::size_t epoch_samples = kDefaultEpochSamples;  // must be a power of two
  std::string subject_tag = "synth";
};

// Band-center sinusoids (delta 2, theta 6, alpha 11.5, beta 23.5,
// gamma 40 Hz) with random phases per channel, per-trial amplitude jitter,
// plus 1/f noise. Trials are emitted round-robin over the command order.
// Pure function of the spec: the same spec reproduces the dataset
// bit-identically.
SessionDataset generate_synthetic_session(const SynthSpec& spec);

}  // namespace eegdrive
