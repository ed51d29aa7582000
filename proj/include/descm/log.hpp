#pragma once

#include <cstdlib>
#include <iostream>
#include <string>

namespace descm {

enum class LogLevel { error = 0, info = 1, debug = 2 };

// Level comes from the DESCM_LOG environment variable (error|info|debug),
// defaulting to error.
inline LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("DESCM_LOG");
        if (env != nullptr) {
            const std::string s(env);
            if (s == "debug") return LogLevel::debug;
            if (s == "info") return LogLevel::info;
        }
        return LogLevel::error;
    }();
    return level;
}

inline void log(LogLevel level, const std::string& msg) {
    if (static_cast<int>(level) <= static_cast<int>(log_level())) {
        std::cerr << "[descm] " << msg << '\n';
    }
}

} // namespace descm
