#include "ontomcq/difficulty.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ontomcq/errors.hpp"
#include "ontomcq/vocab.hpp"

namespace ontomcq {

namespace {

constexpr double kPopularityEpsilon = 1e-6;

std::size_t count_satisfying_all(const Ontology& o, const std::set<Condition>& conditions) {
    if (conditions.empty()) return o.instances().size();
    auto it = conditions.begin();
    std::set<TermId> acc = o.satisfiers(*it);
    for (++it; it != conditions.end() && !acc.empty(); ++it) {
        std::set<TermId> next;
        const std::set<TermId> sat = o.satisfiers(*it);
        std::set_intersection(acc.begin(), acc.end(), sat.begin(), sat.end(),
                              std::inserter(next, next.begin()));
        acc = std::move(next);
    }
    return acc.size();
}

/// Longest strict chain extending from `node` in the given direction within
/// `universe`, counted in edges.
std::size_t longest_chain(const Ontology& o, HierarchyKind kind, const std::set<TermId>& universe,
                          TermId node, bool upward, std::map<TermId, std::size_t>& memo) {
    const auto found = memo.find(node);
    if (found != memo.end()) return found->second;
    memo[node] = 0;  // cycle guard; strict order is acyclic anyway
    std::size_t best = 0;
    for (const TermId other : universe) {
        const bool related = upward ? o.hierarchy_lt(kind, node, other)
                                    : o.hierarchy_lt(kind, other, node);
        if (related) best = std::max(best, 1 + longest_chain(o, kind, universe, other, upward, memo));
    }
    memo[node] = best;
    return best;
}

TermId condition_predicate(const Condition& c) { return c.predicate; }

}  // namespace

double predicate_popularity(const Ontology& o, const Condition& p) {
    const std::set<TermId> satisfying = o.satisfiers(p);
    if (satisfying.empty())
        throw PreconditionError("undefined popularity: empty answer space");
    double sum = 0.0;
    for (const TermId i : satisfying)
        sum += static_cast<double>(o.instance_popularity(p, i));
    return sum / static_cast<double>(satisfying.size());
}

double d_expert(const Ontology& o, const Stem& s) {
    double total = 0.0;
    for (const Condition& c : s.conditions) {
        const std::size_t aspace = o.satisfiers(c).size();
        const double pop = std::max(1.0, predicate_popularity(o, c));
        total += std::log(1.0 + static_cast<double>(aspace)) / pop;
    }
    return total;
}

double depth_ratio(const Ontology& o, const Condition& c, const Stem& s) {
    const TermId predicate = condition_predicate(c);
    const HierarchyKind kind =
        c.kind == Condition::Kind::Concept ? HierarchyKind::Concept : HierarchyKind::Role;

    std::set<TermId> universe;
    if (kind == HierarchyKind::Concept) {
        universe = o.types_of(s.pivot);
    } else {
        for (const Edge& e : o.outgoing(s.pivot)) universe.insert(e.role);
        for (const Edge& e : o.incoming(s.pivot)) universe.insert(e.role);
        for (const Edge& e : o.data_of(s.pivot)) universe.insert(e.role);
    }
    // the top entity never participates in a chain
    std::erase_if(universe, [&](TermId id) { return o.term(id).lexical == vocab::kOwlThing; });

    if (!universe.count(predicate))
        throw PreconditionError("depth_ratio: predicate not satisfied by / incident to the pivot");

    std::map<TermId, std::size_t> memoUp, memoDown;
    const std::size_t up = longest_chain(o, kind, universe, predicate, true, memoUp);
    const std::size_t down = longest_chain(o, kind, universe, predicate, false, memoDown);
    return static_cast<double>(up + 1) / static_cast<double>(up + down + 1);
}

double d_beginner(const Ontology& o, const Stem& s) {
    double total = 0.0;
    for (const Condition& c : s.conditions) {
        const std::size_t aspace = o.satisfiers(c).size();
        total += depth_ratio(o, c, s) / (1.0 + std::log(1.0 + static_cast<double>(aspace)));
    }
    return total;
}

double d_average(double dExpert, double dBeginner) { return 0.5 * (dExpert + dBeginner); }

std::vector<double> normalize_batch(const std::vector<double>& scores) {
    if (scores.empty()) throw PreconditionError("degenerate batch: no scores");
    const double maxScore = *std::max_element(scores.begin(), scores.end());
    if (maxScore <= 0.0) throw PreconditionError("degenerate batch: all scores are zero");
    std::vector<double> out;
    out.reserve(scores.size());
    for (const double v : scores) out.push_back(v / maxScore);
    return out;
}

bool validate_stem(double dExpertNorm, double dBeginnerNorm) {
    return dExpertNorm < dBeginnerNorm;
}

double generic_similarity(const Ontology& o, TermId k, TermId d) {
    const std::set<Condition> ak = o.condition_profile(k);
    const std::set<Condition> ad = o.condition_profile(d);
    std::set<Condition> commonProfile;
    std::set_intersection(ak.begin(), ak.end(), ad.begin(), ad.end(),
                          std::inserter(commonProfile, commonProfile.begin()));
    return 0.5 *
           (static_cast<double>(count_satisfying_all(o, ak)) +
            static_cast<double>(count_satisfying_all(o, ad))) /
           static_cast<double>(count_satisfying_all(o, commonProfile));
}

double instance_similarity(const Ontology& o, TermId k, TermId d, const Stem& s) {
    if (k == d) throw PreconditionError("instance similarity needs two distinct instances");
    std::set<Condition> ck, cd;
    for (const Condition& c : s.conditions) {
        if (o.satisfies(k, c)) ck.insert(c);
        if (o.satisfies(d, c)) cd.insert(c);
    }
    std::set<Condition> shared;
    std::set_intersection(ck.begin(), ck.end(), cd.begin(), cd.end(),
                          std::inserter(shared, shared.begin()));
    if (shared.empty()) throw PreconditionError("no shared stem condition");

    std::set<Condition> either = ck;
    either.insert(cd.begin(), cd.end());
    const double first = static_cast<double>(count_satisfying_all(o, either)) /
                         static_cast<double>(count_satisfying_all(o, shared));
    const double gsim = generic_similarity(o, k, d);
    return first + gsim * gsim;
}

double d_similarity(const std::vector<double>& simValues) {
    if (simValues.empty()) throw PreconditionError("empty similarity list");
    double sum = 0.0;
    for (const double v : simValues) sum += v;
    return sum / static_cast<double>(simValues.size());
}

DPopularityScore d_popularity(const Ontology& o, TermId key,
                              const std::vector<TermId>& distractors) {
    double denom = 0.5 * static_cast<double>(o.connectivity(key));
    for (const TermId d : distractors)
        denom += std::log(1.0 + static_cast<double>(o.connectivity(d)));
    DPopularityScore score;
    score.floored = denom < kPopularityEpsilon;
    score.value = 1.0 / std::max(kPopularityEpsilon, denom);
    return score;
}

double dc(double dSimilarity, double dPopularity) { return dSimilarity * dPopularity; }

double d_predicted(const StemScores& scores, double dcScore, Trait trait) {
    return scores.normalized(trait) * dcScore;
}

std::vector<Level> assign_predicted_levels(const std::vector<double>& dPredicted) {
    if (dPredicted.empty()) throw PreconditionError("empty score batch");
    std::vector<double> sorted = dPredicted;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    const double t1 = sorted[(n + 2) / 3 - 1];
    const double t2 = sorted[(2 * n + 2) / 3 - 1];
    std::vector<Level> out;
    out.reserve(n);
    for (const double v : dPredicted) {
        if (v <= t1)
            out.push_back(Level::Low);
        else if (v <= t2)
            out.push_back(Level::Medium);
        else
            out.push_back(Level::High);
    }
    return out;
}

ChoiceScorer dc_scorer() {
    return [](const Ontology& o, const Stem& s, TermId key,
              const std::vector<TermId>& distractors) {
        std::vector<double> sims;
        sims.reserve(distractors.size());
        for (const TermId d : distractors) sims.push_back(instance_similarity(o, key, d, s));
        return dc(d_similarity(sims), d_popularity(o, key, distractors).value);
    };
}

}  // namespace ontomcq
