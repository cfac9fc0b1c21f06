#include "eegdrive/epoch.hpp"

#include <cmath>

#include "eegdrive/errors.hpp"

namespace eegdrive {

void validate_epoch(const EegEpoch& epoch, std::size_t expected_channels) {
  if (epoch.channel_count() != expected_channels) {
    throw ValidationError("epoch channel count " +
                          std::to_string(epoch.channel_count()) +
                          " does not match roster size " +
                          std::to_string(expected_channels));
  }
  if (!(epoch.sample_rate > 0.0)) {
    throw ValidationError("epoch sample rate must be positive");
  }
  const std::size_t n = epoch.length();
  for (const auto& row : epoch.samples) {
    if (row.size() != n) {
      throw ValidationError("epoch has ragged channel rows");
    }
    for (double v : row) {
      if (!std::isfinite(v)) {
        throw ValidationError("epoch contains a non-finite sample");
      }
    }
  }
}

std::array<int, kCommandCount> SessionDataset::command_counts() const {
  std::array<int, kCommandCount> counts{};
  for (const auto& trial : trials) {
    if (trial.label) counts[static_cast<int>(*trial.label)]++;
  }
  return counts;
}

std::vector<ChannelId> default_roster() {
  const auto& all = all_channels();
  return {all.begin(), all.end()};
}

}  // namespace eegdrive
