#include "eegdrive/session_csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "eegdrive/errors.hpp"

namespace eegdrive {

namespace {

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

double parse_cell(std::string_view text, const std::string& context) {
  double value = 0.0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc{} || result.ptr != end) {
    throw SchemaError("non-numeric cell '" + std::string(text) + "' " +
                      context);
  }
  if (!std::isfinite(value)) {
    throw SchemaError("non-finite cell '" + std::string(text) + "' " +
                      context);
  }
  return value;
}

long parse_int(std::string_view text, const std::string& context) {
  long value = 0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc{} || result.ptr != end) {
    throw SchemaError("non-integer cell '" + std::string(text) + "' " +
                      context);
  }
  return value;
}

void check_header(const std::vector<std::string_view>& fields) {
  static constexpr std::array<std::string_view, 3> kMeta = {"trial", "label",
                                                            "t"};
  if (fields.size() != 3 + kChannelCount) {
    throw SchemaError("header has " + std::to_string(fields.size()) +
                      " columns, expected " +
                      std::to_string(3 + kChannelCount));
  }
  for (std::size_t i = 0; i < kMeta.size(); ++i) {
    if (fields[i] != kMeta[i]) {
      throw SchemaError("header column " + std::to_string(i + 1) +
                        " must be '" + std::string(kMeta[i]) + "'");
    }
  }
  for (int i = 0; i < kChannelCount; ++i) {
    const std::string_view name = fields[3 + i];
    if (!parse_channel(name)) {
      throw SchemaError("unknown channel column '" + std::string(name) + "'");
    }
    const std::string_view expected = channel_label(all_channels()[i]);
    if (name != expected) {
      throw SchemaError("missing or misplaced channel column: expected '" +
                        std::string(expected) + "', found '" +
                        std::string(name) + "'");
    }
  }
}

}  // namespace

std::string format_double(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

SessionDataset load_session_csv(std::istream& in, const std::string& name) {
  std::string line;
  if (!std::getline(in, line)) {
    throw SchemaError(name + ": empty file, header expected");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  check_header(split_csv(line));

  SessionDataset dataset;
  dataset.channels = default_roster();
  dataset.subject_tag = name;

  EegEpoch current;
  bool in_trial = false;
  long current_trial = -1;
  long expected_t = 0;
  std::vector<long> seen_trials;
  std::size_t line_no = 1;

  auto finish_trial = [&]() {
    if (!in_trial) return;
    if (!dataset.trials.empty() &&
        dataset.trials.front().length() != current.length()) {
      throw SchemaError("ragged trial " + std::to_string(current_trial) +
                        ": row count " + std::to_string(current.length()) +
                        " differs from " +
                        std::to_string(dataset.trials.front().length()));
    }
    dataset.trials.push_back(std::move(current));
    in_trial = false;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    const std::string context = "at line " + std::to_string(line_no);
    if (fields.size() != 3 + kChannelCount) {
      throw SchemaError("row " + context + " has " +
                        std::to_string(fields.size()) + " columns");
    }
    const long trial_id = parse_int(fields[0], context);
    if (trial_id < 0) {
      throw SchemaError("negative trial id " + context);
    }
    const auto label = parse_command(fields[1]);
    if (!label) {
      throw SchemaError("unknown label token '" + std::string(fields[1]) +
                        "' " + context);
    }
    const long t = parse_int(fields[2], context);

    if (!in_trial || trial_id != current_trial) {
      finish_trial();
      for (long seen : seen_trials) {
        if (seen == trial_id) {
          throw SchemaError("trial " + std::to_string(trial_id) +
                            " rows are not contiguous " + context);
        }
      }
      seen_trials.push_back(trial_id);
      current = EegEpoch{};
      current.samples.assign(kChannelCount, {});
      current.trial_id = static_cast<int>(trial_id);
      current.label = label;
      current_trial = trial_id;
      expected_t = 0;
      in_trial = true;
    }
    if (*label != *current.label) {
      throw SchemaError("label changes within trial " +
                        std::to_string(trial_id) + " " + context);
    }
    if (t != expected_t) {
      throw SchemaError("sample index " + std::to_string(t) +
                        " out of order (expected " +
                        std::to_string(expected_t) + ") " + context);
    }
    ++expected_t;
    for (int ch = 0; ch < kChannelCount; ++ch) {
      current.samples[ch].push_back(parse_cell(fields[3 + ch], context));
    }
  }
  finish_trial();
  return dataset;
}

SessionDataset load_session_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open session file " + path.string());
  }
  return load_session_csv(in, path.stem().string());
}

void save_session_csv(const SessionDataset& dataset, std::ostream& out) {
  out << "trial,label,t";
  for (ChannelId id : all_channels()) out << ',' << channel_label(id);
  out << '\n';
  for (const auto& trial : dataset.trials) {
    if (!trial.label) {
      throw SchemaError("trial " + std::to_string(trial.trial_id) +
                        " has no label; the session schema requires one");
    }
    validate_epoch(trial, dataset.channels.size());
    const auto token = command_token(*trial.label);
    for (std::size_t t = 0; t < trial.length(); ++t) {
      out << trial.trial_id << ',' << token << ',' << t;
      for (std::size_t ch = 0; ch < trial.channel_count(); ++ch) {
        out << ',' << format_double(trial.samples[ch][t]);
      }
      out << '\n';
    }
  }
}

void save_session_csv(const SessionDataset& dataset,
                      const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write session file " + path.string());
  }
  save_session_csv(dataset, out);
  out.flush();
  if (!out) {
    throw IoError("write failed for session file " + path.string());
  }
}

}  // namespace eegdrive
