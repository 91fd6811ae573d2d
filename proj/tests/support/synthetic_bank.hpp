#pragma once

#include <string>
#include <vector>

#include "ontomcq/bank.hpp"
#include "study_table.hpp"

namespace ontomcq::testsupport {

/// Minimal option-bearing bank item for calibration/simulation tests.
inline BankItem make_item(const std::string& id, std::size_t optionCount, std::size_t keyIndex,
                          std::optional<Level> predicted) {
    BankItem item;
    item.id = id;
    item.pivot = "http://example.org/synth#" + id;
    item.pattern = "p3";
    item.stemText = "Choose the one for " + id + ".";
    for (std::size_t i = 0; i < optionCount; ++i) {
        const std::string letter(1, static_cast<char>('A' + i));
        item.options.push_back({letter, "http://example.org/synth#" + id + "_o" + letter,
                                id + " option " + letter, i == keyIndex});
    }
    item.stem.dExpertRaw = 1.0;
    item.stem.dBeginnerRaw = 1.0;
    item.stem.dAverageRaw = 1.0;
    item.stem.dExpert = 0.5;
    item.stem.dBeginner = 0.9;
    item.stem.dAverage = 0.7;
    item.stem.valid = true;
    ChoiceSetScores cs;
    cs.simPerDistractor.assign(optionCount - 1, 0.5);
    cs.dSimilarity = 0.5;
    cs.dPopularity = 0.25;
    cs.dcScore = 0.125;
    item.choice = cs;
    for (int t = 0; t < 3; ++t) item.dPredicted[static_cast<std::size_t>(t)] = 0.1;
    item.predictedLevel = predicted;
    return item;
}

inline QuestionBank make_bank(const std::vector<BankItem>& items) {
    QuestionBank bank;
    bank.meta.ontologySource = "synthetic";
    bank.meta.ontologyDigest = "fnv1a64:0000000000000000";
    bank.meta.patterns = {"p3"};
    bank.meta.optionCount = items.empty() ? 3 : items.front().options.size();
    bank.meta.generatedAt = "2000-01-01T00:00:00Z";
    bank.meta.counts.stems = items.size();
    bank.meta.counts.valid = items.size();
    bank.meta.counts.withOptions = items.size();
    bank.items = items;
    return bank;
}

/// The 24-item bank mirroring the reference study: ids i1..i24, three
/// options each, key letters cycling A/B/C, predicted levels as reported.
inline QuestionBank make_study_bank() {
    std::vector<BankItem> items;
    std::size_t n = 0;
    for (const auto& row : kStudyTable) {
        items.push_back(
            make_item(row.id, 3, n % 3, level_from_string(row.predicted)));
        ++n;
    }
    return make_bank(items);
}

}  // namespace ontomcq::testsupport
