#include "agfsync/core/log.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

namespace agfsync::core {

namespace {
std::atomic<int> g_level{int(LogLevel::info)};
std::mutex g_mutex;

const char* tag(LogLevel level) {
    switch (level) {
        case LogLevel::debug: return "debug";
        case LogLevel::info: return "info";
        case LogLevel::warn: return "warn";
        case LogLevel::error: return "error";
    }
    return "?";
}
}  // namespace

void set_log_level(LogLevel level) { g_level.store(int(level)); }
LogLevel log_level() { return LogLevel(g_level.load()); }

void log(LogLevel level, std::string_view message) {
    if (int(level) < g_level.load()) return;
    std::lock_guard lock(g_mutex);
    std::cerr << "[" << tag(level) << "] " << message << "\n";
}

}  // namespace agfsync::core
