#pragma once

#include <functional>
#include <string>

namespace fockbench {

/// Occupancy of the top Fock level above which truncation is no longer
/// considered harmless and state-consuming operations emit a warning.
inline constexpr double kTailWarnThreshold = 1e-8;

using WarningHandler = std::function<void(const std::string&)>;

/// Replaces the process-wide warning sink (default: stderr).
/// Returns the previous handler. Thread safe.
WarningHandler set_warning_handler(WarningHandler handler);

void warn(const std::string& message);

}  // namespace fockbench
