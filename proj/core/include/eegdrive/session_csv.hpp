#pragma once

#include <filesystem>
#include <iosfwd>

#include "eegdrive/epoch.hpp"

namespace eegdrive {

// Session CSV schema: header
//   trial,label,t,AF3,F7,F3,FC5,T7,P7,O1,O2,P8,T8,FC6,F4,F8,AF4
// one row per sample, trials contiguous and t-ascending from 0, label
// constant within a trial. Values are decimal microvolts written with
// shortest round-trip formatting, so save -> load -> save is byte-stable.

SessionDataset load_session_csv(const std::filesystem::path& path);
SessionDataset load_session_csv(std::istream& in, const std::string& name);

void save_session_csv(const SessionDataset& dataset,
                      const std::filesystem::path& path);
void save_session_csv(const SessionDataset& dataset, std::ostream& out);

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

}  // namespace eegdrive
