#pragma once

#include <string_view>

namespace spaceprint {

enum class LogLevel { debug = 0, info = 1, warn = 2, error = 3, off = 4 };

// Threshold parsed once from the SPACEPRINT_LOG environment variable
// (debug|info|warn|error|off); defaults to info when unset or unrecognized.
LogLevel log_level();

bool log_enabled(LogLevel level);

// Writes "[spaceprint] <level>: <message>" to stderr when enabled.
void log_message(LogLevel level, std::string_view message);

inline void log_debug(std::string_view m) { log_message(LogLevel::debug, m); }
inline void log_info(std::string_view m) { log_message(LogLevel::info, m); }
inline void log_warn(std::string_view m) { log_message(LogLevel::warn, m); }
inline void log_error(std::string_view m) { log_message(LogLevel::error, m); }

}  // namespace spaceprint
