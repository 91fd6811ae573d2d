#include "ontomcq/log.hpp"

#include <cstdlib>
#include <iostream>

namespace ontomcq::log {

namespace {

Level read_level_from_env() {
    const char* env = std::getenv("ONTOMCQ_LOG");
    if (env == nullptr) return Level::Warn;
    const std::string v(env);
    if (v == "error") return Level::Error;
    if (v == "warn") return Level::Warn;
    if (v == "info") return Level::Info;
    if (v == "debug") return Level::Debug;
    return Level::Warn;
}

const char* tag(Level lvl) {
    switch (lvl) {
        case Level::Error: return "error";
        case Level::Warn: return "warn";
        case Level::Info: return "info";
        default: return "debug";
    }
}

}  // namespace

Level level() {
    static const Level lvl = read_level_from_env();
    return lvl;
}

void emit(Level lvl, const std::string& message) {
    if (static_cast<int>(lvl) > static_cast<int>(level())) return;
    std::cerr << "[" << tag(lvl) << "] " << message << "\n";
}

}  // namespace ontomcq::log
