#include "ontomcq/level.hpp"

#include "ontomcq/condition.hpp"
#include "ontomcq/errors.hpp"

namespace ontomcq {

std::string to_string(Level level) {
    switch (level) {
        case Level::Low: return "low";
        case Level::Medium: return "medium";
        default: return "high";
    }
}

std::string to_string(Trait trait) {
    switch (trait) {
        case Trait::Beginner: return "beginner";
        case Trait::Expert: return "expert";
        default: return "average";
    }
}

Level level_from_string(const std::string& s) {
    if (s == "low") return Level::Low;
    if (s == "medium") return Level::Medium;
    if (s == "high") return Level::High;
    throw DataError("not a level: '" + s + "' (expected low|medium|high)");
}

Trait trait_from_string(const std::string& s) {
    if (s == "beginner") return Trait::Beginner;
    if (s == "average") return Trait::Average;
    if (s == "expert") return Trait::Expert;
    throw DataError("not a trait: '" + s + "' (expected beginner|average|expert)");
}

std::string to_string(Condition::Kind kind) {
    switch (kind) {
        case Condition::Kind::Concept: return "concept";
        case Condition::Kind::Outgoing: return "outgoing";
        case Condition::Kind::Incoming: return "incoming";
        default: return "data";
    }
}

}  // namespace ontomcq
