#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ontomcq/choice.hpp"
#include "ontomcq/level.hpp"
#include "ontomcq/pattern.hpp"

namespace ontomcq {

/// Mean, over the instances satisfying p, of their instance popularity.
/// Throws PreconditionError when nothing satisfies p.
double predicate_popularity(const Ontology& o, const Condition& p);

/// Stem difficulty for an expert: sum over conditions of
/// ln(1 + |answer space|) / max(1, predicate popularity).
double d_expert(const Ontology& o, const Stem& s);

/// Relative depth of a condition's predicate within the longest
/// subsumption chain through the pivot's concepts (or incident roles)
/// containing it. In (0, 1].
double depth_ratio(const Ontology& o, const Condition& c, const Stem& s);

/// Stem difficulty for a beginner: sum over conditions of
/// depth_ratio * 1 / (1 + ln(1 + |answer space|)).
double d_beginner(const Ontology& o, const Stem& s);

/// Mean of the expert and beginner scores.
double d_average(double dExpert, double dBeginner);

/// Divides by the batch maximum. Throws PreconditionError on an empty or
/// all-zero batch ("degenerate batch").
std::vector<double> normalize_batch(const std::vector<double>& scores);

/// A stem is valid iff its normalized expert score is strictly below its
/// normalized beginner score.
bool validate_stem(double dExpertNorm, double dBeginnerNorm);

/// Generic similarity of two instances over their full condition profiles:
/// (|satisfy-all(Ak)| + |satisfy-all(Ad)|) / (2 * |satisfy-all(Ak n Ad)|).
/// In (0, 1].
double generic_similarity(const Ontology& o, TermId k, TermId d);

/// Instance Similarity Ratio between key k and distractor d for a stem:
/// |satisfy-all(Ck u Cd)| / |satisfy-all(Ck n Cd)| + GSim(k,d)^2 where
/// Ck/Cd are the stem conditions each satisfies and GSim is the generic
/// similarity. Requires k != d and a shared stem condition.
double instance_similarity(const Ontology& o, TermId k, TermId d, const Stem& s);

/// Mean of the per-distractor similarity values. Throws on an empty list.
double d_similarity(const std::vector<double>& simValues);

struct DPopularityScore {
    double value = 0.0;
    bool floored = false;  // all-zero connectivity choice set hit the epsilon guard
};

/// 1 / (connectivity(key)/2 + sum of ln(1 + connectivity(d))) with a 1e-6
/// floor on the denominator.
DPopularityScore d_popularity(const Ontology& o, TermId key, const std::vector<TermId>& distractors);

/// Overall choice-set difficulty: similarity score times popularity score.
double dc(double dSimilarity, double dPopularity);

struct StemScores {
    double dExpertRaw = 0.0, dBeginnerRaw = 0.0, dAverageRaw = 0.0;
    double dExpert = 0.0, dBeginner = 0.0, dAverage = 0.0;  // normalized
    bool valid = false;

    double normalized(Trait t) const {
        switch (t) {
            case Trait::Beginner: return dBeginner;
            case Trait::Expert: return dExpert;
            default: return dAverage;
        }
    }
};

/// Combined item difficulty: the trait-selected normalized stem score times
/// the choice-set score.
double d_predicted(const StemScores& scores, double dcScore, Trait trait);

/// Tertile split of the batch; ties fall into the lower bucket.
std::vector<Level> assign_predicted_levels(const std::vector<double>& dPredicted);

/// Choice scorer computing dc over similarity and popularity; the default
/// scorer for difficulty-targeted choice sets.
ChoiceScorer dc_scorer();

}  // namespace ontomcq
