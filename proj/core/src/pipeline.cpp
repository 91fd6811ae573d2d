#include "ontomcq/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <sstream>

#include <json.hpp>

#include "ontomcq/choice.hpp"
#include "ontomcq/difficulty.hpp"
#include "ontomcq/errors.hpp"
#include "ontomcq/log.hpp"
#include "ontomcq/verbalize.hpp"

namespace ontomcq {

using json = nlohmann::ordered_json;

namespace {

std::string iso_utc(std::int64_t secondsSinceEpoch) {
    const std::time_t t = static_cast<std::time_t>(secondsSinceEpoch);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string item_id(std::size_t index) {
    std::string n = std::to_string(index + 1);
    while (n.size() < 4) n.insert(n.begin(), '0');
    return "q" + n;
}

BankCondition to_bank_condition(const Ontology& o, const Condition& c) {
    BankCondition out;
    out.kind = to_string(c.kind);
    out.predicate = o.term(c.predicate).lexical;
    if (c.kind == Condition::Kind::DataEquals)
        out.literal = o.term(c.filler).lexical;
    else if (c.kind != Condition::Kind::Concept)
        out.filler = o.term(c.filler).lexical;
    return out;
}

json optional_level_json(const std::optional<Level>& l) {
    return l ? json(to_string(*l)) : json(nullptr);
}

json stats_triplet_json(const std::array<std::optional<double>, kLevelCount>& values) {
    json out;
    out["low"] = values[0] ? json(format_score(*values[0])) : json(nullptr);
    out["medium"] = values[1] ? json(format_score(*values[1])) : json(nullptr);
    out["high"] = values[2] ? json(format_score(*values[2])) : json(nullptr);
    return out;
}

std::string cell(const std::optional<double>& v) {
    return v ? format_score(*v) : "n/a";
}

}  // namespace

GenerateResult generate_bank(const Ontology& o, const GenerateOptions& opts) {
    GenerateResult result;
    QuestionBank& bank = result.bank;

    bank.meta.ontologySource = opts.sourceName;
    bank.meta.ontologyDigest = opts.sourceDigest;
    for (const auto& shape : opts.shapes) bank.meta.patterns.push_back(shape.name);
    bank.meta.maxStems = opts.maxStems;
    bank.meta.optionCount = opts.optionCount;
    bank.meta.trait = opts.trait;
    bank.meta.seed = opts.seed;
    bank.meta.thetas = opts.thetas;
    bank.meta.generatedAt =
        iso_utc(opts.timestamp ? *opts.timestamp : static_cast<std::int64_t>(std::time(nullptr)));

    const std::vector<Stem> stems = enumerate_stems(o, opts.shapes, opts.maxStems);
    bank.meta.counts.stems = stems.size();
    if (stems.empty()) {
        result.warnings.push_back("no stems were generated");
        log::warn(result.warnings.back());
        return result;
    }

    std::vector<double> rawExpert, rawBeginner, rawAverage;
    rawExpert.reserve(stems.size());
    for (const Stem& s : stems) {
        const double de = d_expert(o, s);
        const double db = d_beginner(o, s);
        rawExpert.push_back(de);
        rawBeginner.push_back(db);
        rawAverage.push_back(d_average(de, db));
    }
    const std::vector<double> normExpert = normalize_batch(rawExpert);
    const std::vector<double> normBeginner = normalize_batch(rawBeginner);
    const std::vector<double> normAverage = normalize_batch(rawAverage);

    const ChoiceScorer scorer = dc_scorer();
    for (std::size_t i = 0; i < stems.size(); ++i) {
        const Stem& s = stems[i];
        BankItem item;
        item.id = item_id(i);
        item.pivot = o.term(s.pivot).lexical;
        item.pattern = s.shape.name;
        for (const Condition& c : s.conditions) item.conditions.push_back(to_bank_condition(o, c));
        item.stemText = stem_sentence(o, s);
        item.stem.dExpertRaw = rawExpert[i];
        item.stem.dBeginnerRaw = rawBeginner[i];
        item.stem.dAverageRaw = rawAverage[i];
        item.stem.dExpert = normExpert[i];
        item.stem.dBeginner = normBeginner[i];
        item.stem.dAverage = normAverage[i];
        item.stem.valid = validate_stem(normExpert[i], normBeginner[i]);
        if (item.stem.valid) ++bank.meta.counts.valid;

        if (item.stem.valid) {
            try {
                const ChoiceSet cs =
                    build_choice_set(o, s, opts.optionCount, opts.target, scorer, opts.seed);
                ChoiceSetScores scores;
                for (const TermId d : cs.distractors)
                    scores.simPerDistractor.push_back(instance_similarity(o, cs.key, d, s));
                scores.dSimilarity = d_similarity(scores.simPerDistractor);
                const DPopularityScore pop = d_popularity(o, cs.key, cs.distractors);
                scores.dPopularity = pop.value;
                scores.popularityFloored = pop.floored;
                if (pop.floored)
                    result.warnings.push_back("item " + item.id +
                                              ": all-zero connectivity choice set, popularity "
                                              "score capped");
                scores.dcScore = dc(scores.dSimilarity, scores.dPopularity);
                item.choice = scores;
                for (std::size_t pos = 0; pos < cs.optionOrder.size(); ++pos) {
                    const TermId inst = cs.optionOrder[pos];
                    item.options.push_back({option_letter(pos), o.term(inst).lexical,
                                            o.display(inst, true), inst == cs.key});
                }
                for (int t = 0; t < 3; ++t)
                    item.dPredicted[static_cast<std::size_t>(t)] =
                        d_predicted(item.stem, scores.dcScore, static_cast<Trait>(t));
                ++bank.meta.counts.withOptions;
            } catch (const InsufficientDistractorsError& e) {
                result.warnings.push_back("item " + item.id + ": " + e.what() +
                                          "; stored without options");
            }
        }
        bank.items.push_back(std::move(item));
    }

    // bucket the combined score of the option-bearing items
    std::vector<std::size_t> scored;
    std::vector<double> predicted;
    for (std::size_t i = 0; i < bank.items.size(); ++i) {
        const auto& dp = bank.items[i].dPredicted[static_cast<std::size_t>(opts.trait)];
        if (dp) {
            scored.push_back(i);
            predicted.push_back(*dp);
        }
    }
    if (!scored.empty()) {
        const std::vector<Level> levels = assign_predicted_levels(predicted);
        for (std::size_t k = 0; k < scored.size(); ++k) {
            bank.items[scored[k]].predictedLevel = levels[k];
            ++bank.meta.counts.perLevel[static_cast<std::size_t>(levels[k])];
        }
    }

    for (const auto& w : result.warnings) log::warn(w);
    return result;
}

CalibrationReport calibrate(const QuestionBank& bank, const std::vector<ResponseRecord>& records,
                            const Thetas& thetas) {
    CalibrationReport report;
    report.thetas = thetas.values;

    const Cohorts cohorts = Cohorts::from_records(records);
    std::map<std::string, ItemStats> stats = tabulate_p(records, bank, cohorts);

    for (const auto& item : bank.items) {
        if (!item.has_options()) continue;
        CalibrationRow row;
        row.itemId = item.id;
        if (!item.predictedLevel) {
            row.excluded = true;
            report.warnings.push_back("item " + item.id +
                                      ": no predicted level in the bank; excluded");
            report.rows.push_back(row);
            continue;
        }
        row.predicted = *item.predictedLevel;
        const auto it = stats.find(item.id);
        if (it == stats.end()) {
            row.excluded = true;
            report.warnings.push_back("item " + item.id + ": no responses; excluded");
            report.rows.push_back(row);
            continue;
        }
        row.stats = it->second;
        fill_alphas(row.stats, thetas);
        const auto ti = static_cast<std::size_t>(row.predicted);
        if (!row.stats.p[ti]) {
            row.excluded = true;
            report.warnings.push_back("item " + item.id + ": every vote at trait " +
                                      to_string(row.predicted) + " was INVALID; excluded");
            report.rows.push_back(row);
            continue;
        }
        row.actual = assign_actual_level(row.stats, row.predicted, thetas);
        report.rows.push_back(row);
    }

    std::vector<ItemOutcome> outcomes;
    outcomes.reserve(report.rows.size());
    for (const auto& row : report.rows)
        outcomes.push_back({row.itemId, row.predicted, row.actual, row.excluded});
    report.agreement = agreement_report(outcomes);
    for (const auto& w : report.warnings) log::warn(w);
    return report;
}

std::string calibration_to_json(const CalibrationReport& report) {
    json root;
    root["thetas"] = {{"low", report.thetas[0]},
                      {"medium", report.thetas[1]},
                      {"high", report.thetas[2]}};
    json items = json::array();
    for (const auto& row : report.rows) {
        json j;
        j["id"] = row.itemId;
        j["p"] = stats_triplet_json(row.stats.p);
        j["alpha"] = stats_triplet_json(row.stats.alpha);
        j["actual_level"] = row.actual ? json(to_string(*row.actual)) : json("none");
        j["predicted_level"] = optional_level_json(row.predicted);
        j["excluded"] = row.excluded;
        items.push_back(j);
    }
    root["items"] = items;
    json agreement;
    agreement["matches"] = report.agreement.matches;
    agreement["considered"] = report.agreement.considered;
    agreement["fraction"] = format_score(report.agreement.fraction());
    json perLevel;
    const char* names[3] = {"low", "medium", "high"};
    for (int t = 0; t < 3; ++t) {
        const auto& pl = report.agreement.perLevel[static_cast<std::size_t>(t)];
        perLevel[names[t]] = {{"matched", pl.matched}, {"total", pl.total}};
    }
    agreement["per_level"] = perLevel;
    agreement["mismatches"] = report.agreement.mismatches;
    agreement["excluded_items"] = report.agreement.excludedItems;
    root["agreement"] = agreement;
    root["warnings"] = report.warnings;
    return root.dump(2) + "\n";
}

std::string calibration_to_markdown(const CalibrationReport& report) {
    std::ostringstream out;
    out << "| item | P(high) | P(medium) | P(low) | alpha(high) | alpha(medium) | alpha(low) "
           "| actual | predicted |\n";
    out << "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& row : report.rows) {
        out << "| " << row.itemId;
        out << " | " << cell(row.stats.p[2]) << " | " << cell(row.stats.p[1]) << " | "
            << cell(row.stats.p[0]);
        out << " | " << cell(row.stats.alpha[2]) << " | " << cell(row.stats.alpha[1]) << " | "
            << cell(row.stats.alpha[0]);
        out << " | " << (row.actual ? to_string(*row.actual) : std::string("--"));
        out << " | " << to_string(row.predicted);
        out << (row.excluded ? " (excluded)" : "") << " |\n";
    }
    out << "\n";
    const auto& a = report.agreement;
    const char* names[3] = {"low", "medium", "high"};
    for (int t = 2; t >= 0; --t) {
        const auto& pl = a.perLevel[static_cast<std::size_t>(t)];
        out << "matched " << names[t] << ": " << pl.matched << "/" << pl.total << "\n";
    }
    out << "agreement: " << a.matches << "/" << a.considered << " = "
        << format_score(a.fraction()) << "\n";
    for (const auto& w : report.warnings) out << "warning: " << w << "\n";
    return out.str();
}

}  // namespace ontomcq
