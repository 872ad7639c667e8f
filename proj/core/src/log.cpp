#include "spaceprint/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace spaceprint {

namespace {

LogLevel parse_level() {
  const char* raw = std::getenv("SPACEPRINT_LOG");
  if (raw == nullptr) return LogLevel::info;
  const std::string value(raw);
  if (value == "debug") return LogLevel::debug;
  if (value == "info") return LogLevel::info;
  if (value == "warn") return LogLevel::warn;
  if (value == "error") return LogLevel::error;
  if (value == "off") return LogLevel::off;
  return LogLevel::info;
}

const char* level_name(LogLevel level) {
  switch (level) {
    case LogLevel::debug: return "debug";
    case LogLevel::info: return "info";
    case LogLevel::warn: return "warn";
    case LogLevel::error: return "error";
    case LogLevel::off: return "off";
  }
  return "?";
}

}  // namespace

LogLevel log_level() {
  static const LogLevel level = parse_level();
  return level;
}

bool log_enabled(LogLevel level) { return level >= log_level() && level != LogLevel::off; }

void log_message(LogLevel level, std::string_view message) {
  if (!log_enabled(level)) return;
  std::cerr << "[spaceprint] " << level_name(level) << ": " << message << '\n';
}

}  // namespace spaceprint
