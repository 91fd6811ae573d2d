#pragma once

#include <string>

namespace ontomcq::log {

enum class Level : int { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Active level, taken from the ONTOMCQ_LOG environment variable
/// (error|warn|info|debug). Defaults to warn.
Level level();

void emit(Level lvl, const std::string& message);

inline void error(const std::string& m) { emit(Level::Error, m); }
inline void warn(const std::string& m) { emit(Level::Warn, m); }
inline void info(const std::string& m) { emit(Level::Info, m); }
inline void debug(const std::string& m) { emit(Level::Debug, m); }

}  // namespace ontomcq::log
