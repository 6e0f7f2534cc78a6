#pragma once

#include <cstdlib>
#include <iostream>
#include <string>

namespace ppcs {

// Verbosity from the PPCS_LOG env var: off (default) | info | debug.
enum class LogLevel { Off = 0, Info = 1, Debug = 2 };

inline LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("PPCS_LOG");
        if (!env) return LogLevel::Off;
        std::string s(env);
        if (s == "debug") return LogLevel::Debug;
        if (s == "info") return LogLevel::Info;
        return LogLevel::Off;
    }();
    return level;
}

inline void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::Info) std::cerr << "[ppcs] " << msg << '\n';
}

inline void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::Debug) std::cerr << "[ppcs:debug] " << msg << '\n';
}

}  // namespace ppcs
