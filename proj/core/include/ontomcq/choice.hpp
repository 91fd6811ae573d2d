#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ontomcq/level.hpp"
#include "ontomcq/pattern.hpp"

namespace ontomcq {

struct ChoiceSet {
    TermId key = kNoTerm;
    std::vector<TermId> distractors;
    /// Seeded shuffle of key + distractors; positions map to option letters.
    std::vector<TermId> optionOrder;
};

/// Scores a prospective choice set; higher means harder. Injected so the
/// generator does not depend on the difficulty model.
using ChoiceScorer =
    std::function<double(const Ontology&, const Stem&, TermId key, const std::vector<TermId>& distractors)>;

/// Eligible distractors for a stem, sorted by IRI: the potential set minus
/// the key, minus alternate correct answers (instances satisfying every stem
/// condition), minus instances sharing no stem condition with the key.
std::vector<TermId> distractor_candidates(const Ontology& o, const Stem& s);

/// Builds a choice set with `optionCount` options total (key included).
/// Without a target the distractors are a seeded draw from the candidates;
/// with a target the candidate combination whose score sits at the matching
/// end (low -> smallest, high -> largest, medium -> median) is picked,
/// ties broken by IRI order. Throws InsufficientDistractorsError when fewer
/// than optionCount-1 candidates exist.
ChoiceSet build_choice_set(const Ontology& o, const Stem& s, std::size_t optionCount,
                           std::optional<Level> target, const ChoiceScorer& scorer,
                           std::uint64_t seed);

}  // namespace ontomcq
