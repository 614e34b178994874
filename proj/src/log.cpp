#include "qchan/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>

namespace qchan {

LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("QCHAN_LOG");
        if (env == nullptr) return LogLevel::Off;
        if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
        if (std::strcmp(env, "info") == 0) return LogLevel::Info;
        if (std::strcmp(env, "warn") == 0) return LogLevel::Warn;
        return LogLevel::Off;
    }();
    return level;
}

void log_msg(LogLevel level, const std::string& msg) {
    if (static_cast<int>(level) > static_cast<int>(log_level())) return;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    const char* tag = level == LogLevel::Warn ? "warn" : level == LogLevel::Info ? "info" : "debug";
    std::fprintf(stderr, "[qchan %s] %s\n", tag, msg.c_str());
}

}  // namespace qchan
