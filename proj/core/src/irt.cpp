#include "ontomcq/irt.hpp"

#include <cmath>

#include "ontomcq/errors.hpp"
#include "ontomcq/log.hpp"
#include "ontomcq/rng.hpp"

namespace ontomcq {

namespace {

constexpr double kThumbBand = 0.45;

std::string pad4(std::size_t n) {
    std::string s = std::to_string(n);
    while (s.size() < 4) s.insert(s.begin(), '0');
    return s;
}

}  // namespace

double p_correct(double theta, double alpha) {
    if (std::isinf(alpha)) return alpha > 0 ? 0.0 : 1.0;
    const double x = theta - alpha;
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

double alpha_from_p(double theta, double p) {
    if (p <= 0.0) return std::numeric_limits<double>::infinity();
    if (p >= 1.0) return -std::numeric_limits<double>::infinity();
    return theta - (std::log(p) - std::log1p(-p));
}

std::optional<Level> Cohorts::trait_of(const std::string& learnerId) const {
    for (int t = 0; t < kLevelCount; ++t)
        if (learners[static_cast<std::size_t>(t)].count(learnerId)) return static_cast<Level>(t);
    return std::nullopt;
}

Cohorts Cohorts::from_records(const std::vector<ResponseRecord>& records) {
    Cohorts cohorts;
    for (const auto& r : records) {
        const auto existing = cohorts.trait_of(r.learnerId);
        if (existing && *existing != r.trait)
            throw DataError("learner " + r.learnerId + " appears with two trait levels (" +
                            to_string(*existing) + " and " + to_string(r.trait) + ")");
        cohorts.learners[static_cast<std::size_t>(r.trait)].insert(r.learnerId);
    }
    return cohorts;
}

std::map<std::string, ItemStats> tabulate_p(const std::vector<ResponseRecord>& records,
                                            const QuestionBank& bank, const Cohorts& cohorts) {
    struct Tally {
        std::array<std::size_t, kLevelCount> correct{};
        std::array<std::size_t, kLevelCount> invalid{};
    };
    std::map<std::string, Tally> tallies;
    std::set<std::pair<std::string, std::string>> seen;

    for (const auto& r : records) {
        const std::string where = "record (" + r.learnerId + ", " + r.itemId + ")";
        const BankItem* item = bank.find(r.itemId);
        if (item == nullptr) throw DataError(where + ": unknown item");
        const std::string key = item->key_letter();
        if (key.empty()) throw DataError(where + ": item has no designated key");
        const auto trait = cohorts.trait_of(r.learnerId);
        if (!trait) throw DataError(where + ": learner outside the declared cohorts");
        if (*trait != r.trait)
            throw DataError(where + ": trait level disagrees with the learner's cohort");
        if (!seen.insert({r.learnerId, r.itemId}).second)
            throw DataError(where + ": duplicate response");
        if (r.choice != "SKIP" && r.choice != "INVALID") {
            bool known = false;
            for (const auto& opt : item->options) known = known || opt.letter == r.choice;
            if (!known) throw DataError(where + ": choice '" + r.choice + "' is not an option");
        }

        Tally& t = tallies[r.itemId];
        const auto ti = static_cast<std::size_t>(*trait);
        if (r.choice == "INVALID")
            ++t.invalid[ti];
        else if (r.choice == key)
            ++t.correct[ti];
        // SKIP and wrong letters stay in the denominator
    }

    std::map<std::string, ItemStats> stats;
    for (const auto& [itemId, tally] : tallies) {
        ItemStats s;
        for (std::size_t t = 0; t < kLevelCount; ++t) {
            const std::size_t cohortSize = cohorts.learners[t].size();
            if (cohortSize < tally.invalid[t])
                throw DataError("item " + itemId + ": more INVALID votes than cohort members");
            const std::size_t denom = cohortSize - tally.invalid[t];
            if (denom == 0) continue;  // undefined
            s.p[t] = static_cast<double>(tally.correct[t]) / static_cast<double>(denom);
        }
        stats[itemId] = s;
    }
    return stats;
}

void fill_alphas(ItemStats& stats, const Thetas& thetas) {
    for (std::size_t t = 0; t < kLevelCount; ++t)
        if (stats.p[t])
            stats.alpha[t] = alpha_from_p(thetas.values[t], *stats.p[t]);
}

std::optional<Level> assign_actual_level(const ItemStats& stats, Level predicted,
                                         const Thetas& thetas) {
    const auto t = static_cast<std::size_t>(predicted);
    if (!stats.alpha[t])
        throw PreconditionError("missing alpha for trait " + to_string(predicted));
    const double alpha = *stats.alpha[t];
    const double theta = thetas.of(predicted);
    switch (predicted) {
        case Level::High:
        case Level::Medium:
            return alpha >= theta - kThumbBand ? std::optional<Level>(predicted) : std::nullopt;
        default:
            return alpha <= theta + kThumbBand ? std::optional<Level>(predicted) : std::nullopt;
    }
}

AgreementReport agreement_report(const std::vector<ItemOutcome>& outcomes) {
    AgreementReport report;
    for (const auto& item : outcomes) {
        if (item.excluded) {
            report.excludedItems.push_back(item.id);
            continue;
        }
        ++report.considered;
        auto& perLevel = report.perLevel[static_cast<std::size_t>(item.predicted)];
        ++perLevel.total;
        if (item.actual && *item.actual == item.predicted) {
            ++report.matches;
            ++perLevel.matched;
        } else {
            report.mismatches.push_back(item.id);
        }
    }
    return report;
}

std::vector<ResponseRecord> simulate_responses(const QuestionBank& bank,
                                               const std::map<std::string, double>& alphaByItem,
                                               const std::array<std::size_t, kLevelCount>& cohortSizes,
                                               const Thetas& thetas, std::uint64_t seed,
                                               const SimulationRates& rates) {
    std::vector<const BankItem*> items;
    for (const auto& item : bank.items) {
        if (!item.has_options()) continue;
        const auto it = alphaByItem.find(item.id);
        if (it == alphaByItem.end()) {
            log::warn("simulate: no alpha for item " + item.id + ", skipping it");
            continue;
        }
        if (std::isinf(it->second) || std::isnan(it->second))
            throw DataError("simulate: alpha for item " + item.id + " must be finite");
        items.push_back(&item);
    }

    std::vector<ResponseRecord> out;
    for (int t = 0; t < kLevelCount; ++t) {
        const Level trait = static_cast<Level>(t);
        const double theta = thetas.of(trait);
        for (std::size_t n = 0; n < cohortSizes[static_cast<std::size_t>(t)]; ++n) {
            const std::string learner = to_string(trait) + "-" + pad4(n + 1);
            Rng rng(derive_seed(seed, learner));
            for (const BankItem* item : items) {
                const double u0 = rng.next_double();
                const double u1 = rng.next_double();
                std::string choice;
                if (u0 < rates.invalid) {
                    choice = "INVALID";
                } else if (u0 < rates.invalid + rates.skip) {
                    choice = "SKIP";
                } else if (u1 < p_correct(theta, alphaByItem.at(item->id))) {
                    choice = item->key_letter();
                } else {
                    std::vector<std::string> wrong;
                    for (const auto& opt : item->options)
                        if (!opt.key) wrong.push_back(opt.letter);
                    choice = wrong[rng.next_below(wrong.size())];
                }
                out.push_back({learner, trait, item->id, choice});
            }
        }
    }
    return out;
}

}  // namespace ontomcq
