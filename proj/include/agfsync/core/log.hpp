#pragma once

#include <string_view>

namespace agfsync::core {

enum class LogLevel { debug = 0, info = 1, warn = 2, error = 3 };

// Process-wide threshold; stages bump it to debug under --verbose.
void set_log_level(LogLevel level);
LogLevel log_level();

void log(LogLevel level, std::string_view message);

inline void log_debug(std::string_view m) { log(LogLevel::debug, m); }
inline void log_info(std::string_view m) { log(LogLevel::info, m); }
inline void log_warn(std::string_view m) { log(LogLevel::warn, m); }
inline void log_error(std::string_view m) { log(LogLevel::error, m); }

}  // namespace agfsync::core
