#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace eegdrive {

// The 14 Emotiv EPOC electrodes, 10/20 placement. Roster order is fixed;
// the enum value doubles as the row index of an epoch's sample matrix.
enum class ChannelId : int {
  AF3 = 0,
  F7,
  F3,
  FC5,
  T7,
  P7,
  O1,
  O2,
  P8,
  T8,
  FC6,
  F4,
  F8,
  AF4,
};

inline constexpr int kChannelCount = 14;

const std::array<ChannelId, kChannelCount>& all_channels();
std::string_view channel_label(ChannelId id);
std::optional<ChannelId> parse_channel(std::string_view label);

// The 5-way command alphabet. Listing order is the total order used for
// every deterministic tie-break in the project.
enum class Command : int {
  Left = 0,
  Right,
  Forward,
  Reverse,
  Stop,
};

inline constexpr int kCommandCount = 5;

const std::array<Command, kCommandCount>& all_commands();
std::string_view command_token(Command c);  // LEFT / RIGHT / FORWARD / REVERSE / STOP
std::optional<Command> parse_command(std::string_view token);

}  // namespace eegdrive
