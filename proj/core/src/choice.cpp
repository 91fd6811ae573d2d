#include "ontomcq/choice.hpp"

#include <algorithm>

#include "ontomcq/errors.hpp"
#include "ontomcq/rng.hpp"

namespace ontomcq {

namespace {

// above this many combinations the targeted pick falls back to a
// per-candidate greedy ordering
constexpr std::size_t kMaxCombinations = 20000;

std::size_t binomial_capped(std::size_t n, std::size_t k) {
    std::size_t result = 1;
    for (std::size_t i = 0; i < k; ++i) {
        result = result * (n - i) / (i + 1);
        if (result > kMaxCombinations) return kMaxCombinations + 1;
    }
    return result;
}

}  // namespace

std::vector<TermId> distractor_candidates(const Ontology& o, const Stem& s) {
    std::vector<std::pair<std::string, TermId>> keep;
    for (const TermId x : potential_set(o, s)) {
        if (x == s.pivot) continue;
        bool all = true, any = false;
        for (const Condition& c : s.conditions) {
            if (o.satisfies(x, c))
                any = true;
            else
                all = false;
        }
        if (all) continue;  // an alternate correct answer, not a distractor
        if (!any) continue;  // shares no stem condition with the key
        keep.emplace_back(o.term(x).lexical, x);
    }
    std::sort(keep.begin(), keep.end());
    std::vector<TermId> out;
    out.reserve(keep.size());
    for (const auto& [iri, id] : keep) out.push_back(id);
    return out;
}

ChoiceSet build_choice_set(const Ontology& o, const Stem& s, std::size_t optionCount,
                           std::optional<Level> target, const ChoiceScorer& scorer,
                           std::uint64_t seed) {
    if (optionCount < 2) throw PreconditionError("option count must be at least 2");
    const std::vector<TermId> candidates = distractor_candidates(o, s);
    const std::size_t need = optionCount - 1;
    if (candidates.size() < need) throw InsufficientDistractorsError(candidates.size(), need);

    std::vector<TermId> chosen;
    if (target) {
        std::vector<std::pair<double, std::vector<TermId>>> scored;
        if (binomial_capped(candidates.size(), need) <= kMaxCombinations) {
            // enumerate combinations in candidate (IRI) order
            std::vector<std::size_t> idx(need);
            for (std::size_t i = 0; i < need; ++i) idx[i] = i;
            for (;;) {
                std::vector<TermId> combo;
                combo.reserve(need);
                for (const std::size_t i : idx) combo.push_back(candidates[i]);
                scored.emplace_back(scorer(o, s, s.pivot, combo), std::move(combo));
                // next combination
                std::size_t k = need;
                while (k > 0 && idx[k - 1] == candidates.size() - need + (k - 1)) --k;
                if (k == 0) break;
                ++idx[k - 1];
                for (std::size_t j = k; j < need; ++j) idx[j] = idx[j - 1] + 1;
            }
        } else {
            // greedy: order candidates by their single-distractor score, take
            // a window at the matching end
            std::vector<std::pair<double, TermId>> singles;
            for (const TermId c : candidates)
                singles.emplace_back(scorer(o, s, s.pivot, {c}), c);
            std::stable_sort(singles.begin(), singles.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            std::size_t start = 0;
            if (*target == Level::High)
                start = singles.size() - need;
            else if (*target == Level::Medium)
                start = (singles.size() - need) / 2;
            std::vector<TermId> combo;
            for (std::size_t i = start; i < start + need; ++i) combo.push_back(singles[i].second);
            std::sort(combo.begin(), combo.end(), [&](TermId a, TermId b) {
                return o.term(a).lexical < o.term(b).lexical;
            });
            scored.emplace_back(scorer(o, s, s.pivot, combo), combo);
        }
        std::stable_sort(scored.begin(), scored.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t pick = 0;
        if (*target == Level::High)
            pick = scored.size() - 1;
        else if (*target == Level::Medium)
            pick = (scored.size() - 1) / 2;
        chosen = scored[pick].second;
    } else {
        std::vector<TermId> pool = candidates;
        Rng rng(derive_seed(seed, s.identity(o)));
        rng.shuffle(pool);
        chosen.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(need));
        std::sort(chosen.begin(), chosen.end(), [&](TermId a, TermId b) {
            return o.term(a).lexical < o.term(b).lexical;
        });
    }

    ChoiceSet cs;
    cs.key = s.pivot;
    cs.distractors = chosen;
    cs.optionOrder.push_back(cs.key);
    cs.optionOrder.insert(cs.optionOrder.end(), chosen.begin(), chosen.end());
    Rng orderRng(derive_seed(seed, s.identity(o) + "#order"));
    orderRng.shuffle(cs.optionOrder);
    return cs;
}

}  // namespace ontomcq
