#include "eegdrive/types.hpp"

namespace eegdrive {

namespace {

constexpr std::array<std::string_view, kChannelCount> kChannelLabels = {
    "AF3", "F7", "F3", "FC5", "T7", "P7", "O1",
    "O2",  "P8", "T8", "FC6", "F4", "F8", "AF4",
};

constexpr std::array<std::string_view, kCommandCount> kCommandTokens = {
    "LEFT", "RIGHT", "FORWARD", "REVERSE", "STOP",
};

}  // namespace

const std::array<ChannelId, kChannelCount>& all_channels() {
  static const std::array<ChannelId, kChannelCount> channels = [] {
    std::array<ChannelId, kChannelCount> out{};
    for (int i = 0; i < kChannelCount; ++i) out[i] = static_cast<ChannelId>(i);
    return out;
  }();
  return channels;
}

std::string_view channel_label(ChannelId id) {
  return kChannelLabels[static_cast<int>(id)];
}

std::optional<ChannelId> parse_channel(std::string_view label) {
  for (int i = 0; i < kChannelCount; ++i) {
    if (kChannelLabels[i] == label) return static_cast<ChannelId>(i);
  }
  return std::nullopt;
}

const std::array<Command, kCommandCount>& all_commands() {
  static const std::array<Command, kCommandCount> commands = {
      Command::Left, Command::Right, Command::Forward, Command::Reverse,
      Command::Stop,
  };
  return commands;
}

std::string_view command_token(Command c) {
  return kCommandTokens[static_cast<int>(c)];
}

std::optional<Command> parse_command(std::string_view token) {
  for (int i = 0; i < kCommandCount; ++i) {
    if (kCommandTokens[i] == token) return static_cast<Command>(i);
  }
  return std::nullopt;
}

}  // namespace eegdrive
