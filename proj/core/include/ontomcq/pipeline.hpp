#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ontomcq/bank.hpp"
#include "ontomcq/irt.hpp"
#include "ontomcq/ontology.hpp"
#include "ontomcq/pattern.hpp"

namespace ontomcq {

struct GenerateOptions {
    std::vector<PatternShape> shapes;
    std::optional<std::size_t> maxStems;  // enumeration cap
    std::size_t optionCount = 3;
    Trait trait = Trait::Average;
    std::uint64_t seed = 0;
    std::optional<Level> target;  // difficulty-targeted distractor pick
    std::array<double, kLevelCount> thetas{-1.5, 0.0, 1.5};
    std::string sourceName;        // recorded in metadata
    std::string sourceDigest;      // recorded in metadata
    std::optional<std::int64_t> timestamp;  // seconds since epoch; now() when absent
};

struct GenerateResult {
    QuestionBank bank;
    std::vector<std::string> warnings;
};

/// Full generation pipeline: enumerate stems, score, normalize per measure
/// over the run, set validity, build choice sets for valid stems, bucket
/// the combined scores, and assemble the bank. Per-item failures (not
/// enough distractors) degrade to option-less items with a warning.
GenerateResult generate_bank(const Ontology& o, const GenerateOptions& opts);

/// Report produced by the calibrate command.
struct CalibrationRow {
    std::string itemId;
    ItemStats stats;
    std::optional<Level> actual;
    Level predicted = Level::Low;
    bool excluded = false;
};

struct CalibrationReport {
    std::vector<CalibrationRow> rows;  // bank order
    AgreementReport agreement;
    std::array<double, kLevelCount> thetas{-1.5, 0.0, 1.5};
    std::vector<std::string> warnings;
};

CalibrationReport calibrate(const QuestionBank& bank, const std::vector<ResponseRecord>& records,
                            const Thetas& thetas);

std::string calibration_to_json(const CalibrationReport& report);
/// Plain-text table: one row per item with P and alpha per cohort, actual
/// and predicted level, then the agreement summary.
std::string calibration_to_markdown(const CalibrationReport& report);

}  // namespace ontomcq
