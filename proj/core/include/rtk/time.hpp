#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

namespace rtk {

/// UTC instant with second precision.
using Timestamp = std::chrono::sys_seconds;

/// Parses an RFC 3339 timestamp ("2015-01-02T03:04:05Z", optional fraction and
/// numeric offset). Fractional seconds are truncated. Throws std::invalid_argument.
Timestamp parse_timestamp(std::string_view text);

/// Renders as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_timestamp(Timestamp t);

inline std::int64_t to_seconds(Timestamp t) { return t.time_since_epoch().count(); }
inline Timestamp from_seconds(std::int64_t s) { return Timestamp{std::chrono::seconds{s}}; }

}  // namespace rtk
