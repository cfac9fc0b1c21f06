#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eegdrive/types.hpp"

namespace eegdrive {

inline constexpr double kDefaultSampleRate = 128.0;
inline constexpr std::size_t kDefaultEpochSamples = 1024;  // 8 s at 128 Hz

// One labeled trial: channels x time, microvolts. Rows follow the session
// channel roster order.
struct EegEpoch {
  std::vector<std::vector<double>> samples;
  double sample_rate = kDefaultSampleRate;
  std::optional<Command> label;
  int trial_id = 0;

  std::size_t channel_count() const { return samples.size(); }
  std::size_t length() const { return samples.empty() ? 0 : samples[0].size(); }
};

// Throws ValidationError on ragged rows, non-positive sample rate,
// non-finite values, or a channel-count mismatch.
void validate_epoch(const EegEpoch& epoch, std::size_t expected_channels);

struct SessionDataset {
  std::vector<ChannelId> channels;
  std::vector<EegEpoch> trials;
  std::string subject_tag;
  std::optional<std::uint64_t> seed;

  std::array<int, kCommandCount> command_counts() const;
};

std::vector<ChannelId> default_roster();

}  // namespace eegdrive
