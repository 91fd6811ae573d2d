#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontomcq/bank.hpp"
#include "ontomcq/level.hpp"

namespace ontomcq {

/// Trait-level abilities on the logistic scale, indexed by Level.
struct Thetas {
    std::array<double, kLevelCount> values{-1.5, 0.0, 1.5};

    double of(Level l) const { return values[static_cast<int>(l)]; }
};

/// One-parameter logistic model: probability that a learner of ability
/// theta answers an item of difficulty alpha correctly. alpha may be
/// +inf (never answered, p = 0) or -inf (always answered, p = 1).
double p_correct(double theta, double alpha);

/// Inversion of the model: theta - ln(p / (1 - p)); +inf at p = 0 and
/// -inf at p = 1.
double alpha_from_p(double theta, double p);

struct ResponseRecord {
    std::string learnerId;
    Level trait = Level::Low;
    std::string itemId;
    std::string choice;  // "A".."Z", "SKIP" or "INVALID"
};

/// Per-item statistics across the three cohorts. p is undefined for a
/// cohort whose every vote was INVALID (or that is empty).
struct ItemStats {
    std::array<std::optional<double>, kLevelCount> p;
    std::array<std::optional<double>, kLevelCount> alpha;
};

struct Cohorts {
    std::array<std::set<std::string>, kLevelCount> learners;

    std::optional<Level> trait_of(const std::string& learnerId) const;
    static Cohorts from_records(const std::vector<ResponseRecord>& records);
};

/// Tabulates per-item, per-cohort correctness probabilities. A SKIP counts
/// as wrong; an INVALID vote is removed from both numerator and
/// denominator. Records naming unknown items, items without a key, or
/// learners outside the cohorts throw DataError naming the record.
std::map<std::string, ItemStats> tabulate_p(const std::vector<ResponseRecord>& records,
                                            const QuestionBank& bank, const Cohorts& cohorts);

/// Fills stats.alpha from stats.p.
void fill_alphas(ItemStats& stats, const Thetas& thetas);

/// Thumb-rule level assignment evaluated at the trait matching the
/// predicted level, with a 0.45 band around that trait's theta:
/// high passes at alpha >= theta_high - 0.45, medium at
/// alpha >= theta_medium - 0.45, low at alpha <= theta_low + 0.45.
/// Returns nullopt when the test fails; throws when alpha is missing.
std::optional<Level> assign_actual_level(const ItemStats& stats, Level predicted,
                                         const Thetas& thetas = {});

struct ItemOutcome {
    std::string id;
    Level predicted = Level::Low;
    std::optional<Level> actual;  // nullopt = no level assigned ("none")
    bool excluded = false;        // undefined p at the predicted trait
};

struct AgreementReport {
    struct PerLevel {
        std::size_t matched = 0;
        std::size_t total = 0;
    };
    std::array<PerLevel, kLevelCount> perLevel{};  // by predicted level
    std::vector<std::string> mismatches;           // item ids, actual != predicted
    std::vector<std::string> excludedItems;
    std::size_t matches = 0;
    std::size_t considered = 0;

    double fraction() const { return considered == 0 ? 0.0 : static_cast<double>(matches) / considered; }
};

AgreementReport agreement_report(const std::vector<ItemOutcome>& outcomes);

struct SimulationRates {
    double skip = 0.0;
    double invalid = 0.0;
};

/// Simulates one response per (learner, item) pair. Each learner gets an
/// independent substream derived from (seed, learnerId), so parallel and
/// serial generation orders agree. Correct answers pick the key's letter,
/// wrong answers a uniform distractor letter. Items without options are
/// skipped with a warning.
std::vector<ResponseRecord> simulate_responses(const QuestionBank& bank,
                                               const std::map<std::string, double>& alphaByItem,
                                               const std::array<std::size_t, kLevelCount>& cohortSizes,
                                               const Thetas& thetas, std::uint64_t seed,
                                               const SimulationRates& rates = {});

}  // namespace ontomcq
