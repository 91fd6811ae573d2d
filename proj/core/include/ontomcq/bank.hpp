#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ontomcq/difficulty.hpp"
#include "ontomcq/level.hpp"

namespace ontomcq {

inline constexpr int kBankSchemaVersion = 1;

struct BankCondition {
    std::string kind;       // "concept" | "outgoing" | "incoming" | "data"
    std::string predicate;  // IRI
    std::string filler;     // IRI for role conditions, empty for concept
    std::string literal;    // lexical form for data conditions
};

struct BankOption {
    std::string letter;  // "A", "B", ...
    std::string instance;
    std::string text;
    bool key = false;
};

struct ChoiceSetScores {
    std::vector<double> simPerDistractor;
    double dSimilarity = 0.0;
    double dPopularity = 0.0;
    double dcScore = 0.0;
    bool popularityFloored = false;
};

struct BankItem {
    std::string id;
    std::string pivot;  // IRI
    std::string pattern;
    std::vector<BankCondition> conditions;
    std::string stemText;
    std::vector<BankOption> options;  // empty when no choice set was built
    StemScores stem;
    std::optional<ChoiceSetScores> choice;
    std::array<std::optional<double>, kLevelCount> dPredicted;  // by Trait
    std::optional<Level> predictedLevel;

    bool has_options() const { return !options.empty(); }
    /// Letter of the key option; empty when the item has no options.
    std::string key_letter() const;
};

struct BankCounts {
    std::size_t stems = 0;
    std::size_t valid = 0;
    std::size_t withOptions = 0;
    std::array<std::size_t, kLevelCount> perLevel{};  // by predicted Level
};

struct BankMetadata {
    std::string ontologySource;
    std::string ontologyDigest;  // "fnv1a64:<hex>"
    std::vector<std::string> patterns;
    std::optional<std::size_t> maxStems;
    std::size_t optionCount = 3;
    Trait trait = Trait::Average;
    std::uint64_t seed = 0;
    std::array<double, kLevelCount> thetas{-1.5, 0.0, 1.5};
    std::string generatedAt;  // ISO-8601 UTC
    BankCounts counts;
};

struct QuestionBank {
    BankMetadata meta;
    std::vector<BankItem> items;

    const BankItem* find(const std::string& id) const;
};

/// Serialization uses decimal strings with 12 significant digits for every
/// score so files round-trip byte-for-byte; infinities are spelled
/// "+inf" / "-inf".
std::string format_score(double v);
double parse_score(const std::string& s);

std::string bank_to_json(const QuestionBank& bank);
QuestionBank bank_from_json(const std::string& text);
QuestionBank read_bank(const std::string& path);
/// Writes to a temp file in the target directory, then renames.
void write_bank(const QuestionBank& bank, const std::string& path);

/// Atomic text-file write used for every artifact the toolkit emits.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace ontomcq
