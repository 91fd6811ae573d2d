#pragma once

#include <optional>
#include <string>

namespace ontomcq {

/// Difficulty bucket / learner trait level.
enum class Level : int { Low = 0, Medium = 1, High = 2 };

/// Pedagogical target used to pick the stem score in the combined measure.
enum class Trait : int { Beginner = 0, Average = 1, Expert = 2 };

std::string to_string(Level level);
std::string to_string(Trait trait);
Level level_from_string(const std::string& s);
Trait trait_from_string(const std::string& s);

inline constexpr int kLevelCount = 3;

}  // namespace ontomcq
