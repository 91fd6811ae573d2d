#include "ontomcq/bank.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "ontomcq/errors.hpp"

namespace ontomcq {

using json = nlohmann::ordered_json;

namespace {

json score_json(double v) { return json(format_score(v)); }

json optional_score_json(const std::optional<double>& v) {
    return v ? score_json(*v) : json(nullptr);
}

double require_score(const json& j, const std::string& context) {
    if (!j.is_string()) throw DataError("bank: " + context + " must be a score string");
    return parse_score(j.get<std::string>());
}

const json& require(const json& j, const char* key, const std::string& context) {
    const auto it = j.find(key);
    if (it == j.end()) throw DataError("bank: missing field '" + std::string(key) + "' in " + context);
    return *it;
}

}  // namespace

std::string format_score(double v) {
    if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double parse_score(const std::string& s) {
    if (s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') throw DataError("not a score: '" + s + "'");
    return v;
}

std::string BankItem::key_letter() const {
    for (const auto& opt : options)
        if (opt.key) return opt.letter;
    return "";
}

const BankItem* QuestionBank::find(const std::string& id) const {
    for (const auto& item : items)
        if (item.id == id) return &item;
    return nullptr;
}

std::string bank_to_json(const QuestionBank& bank) {
    json root;
    root["schema_version"] = kBankSchemaVersion;

    json meta;
    meta["ontology_source"] = bank.meta.ontologySource;
    meta["ontology_digest"] = bank.meta.ontologyDigest;
    meta["patterns"] = bank.meta.patterns;
    meta["max_stems"] = bank.meta.maxStems ? json(*bank.meta.maxStems) : json(nullptr);
    meta["option_count"] = bank.meta.optionCount;
    meta["trait"] = to_string(bank.meta.trait);
    meta["seed"] = bank.meta.seed;
    meta["thetas"] = {{"low", bank.meta.thetas[0]},
                      {"medium", bank.meta.thetas[1]},
                      {"high", bank.meta.thetas[2]}};
    meta["generated_at"] = bank.meta.generatedAt;
    json counts;
    counts["stems"] = bank.meta.counts.stems;
    counts["valid"] = bank.meta.counts.valid;
    counts["with_options"] = bank.meta.counts.withOptions;
    counts["levels"] = {{"low", bank.meta.counts.perLevel[0]},
                        {"medium", bank.meta.counts.perLevel[1]},
                        {"high", bank.meta.counts.perLevel[2]}};
    meta["counts"] = counts;
    root["metadata"] = meta;

    json items = json::array();
    for (const auto& item : bank.items) {
        json j;
        j["id"] = item.id;
        j["pivot"] = item.pivot;
        j["pattern"] = item.pattern;
        json conds = json::array();
        for (const auto& c : item.conditions) {
            json cj;
            cj["kind"] = c.kind;
            cj["predicate"] = c.predicate;
            if (c.kind == "data")
                cj["value"] = c.literal;
            else if (c.kind != "concept")
                cj["filler"] = c.filler;
            conds.push_back(cj);
        }
        j["conditions"] = conds;
        j["stem_text"] = item.stemText;
        json opts = json::array();
        for (const auto& o : item.options) {
            json oj;
            oj["letter"] = o.letter;
            oj["instance"] = o.instance;
            oj["text"] = o.text;
            oj["key"] = o.key;
            opts.push_back(oj);
        }
        j["options"] = opts;

        json scores;
        scores["d_expert_raw"] = score_json(item.stem.dExpertRaw);
        scores["d_beginner_raw"] = score_json(item.stem.dBeginnerRaw);
        scores["d_average_raw"] = score_json(item.stem.dAverageRaw);
        scores["d_expert"] = score_json(item.stem.dExpert);
        scores["d_beginner"] = score_json(item.stem.dBeginner);
        scores["d_average"] = score_json(item.stem.dAverage);
        scores["valid"] = item.stem.valid;
        if (item.choice) {
            json cj;
            json sims = json::array();
            for (const double v : item.choice->simPerDistractor) sims.push_back(score_json(v));
            cj["sim_per_distractor"] = sims;
            cj["d_similarity"] = score_json(item.choice->dSimilarity);
            cj["d_popularity"] = score_json(item.choice->dPopularity);
            cj["popularity_floored"] = item.choice->popularityFloored;
            cj["dc"] = score_json(item.choice->dcScore);
            scores["choice_set"] = cj;
        } else {
            scores["choice_set"] = nullptr;
        }
        if (item.dPredicted[0] || item.dPredicted[1] || item.dPredicted[2]) {
            scores["d_predicted"] = {{"beginner", optional_score_json(item.dPredicted[0])},
                                     {"average", optional_score_json(item.dPredicted[1])},
                                     {"expert", optional_score_json(item.dPredicted[2])}};
        } else {
            scores["d_predicted"] = nullptr;
        }
        scores["predicted_level"] =
            item.predictedLevel ? json(to_string(*item.predictedLevel)) : json(nullptr);
        j["scores"] = scores;
        items.push_back(j);
    }
    root["items"] = items;
    return root.dump(2) + "\n";
}

QuestionBank bank_from_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw DataError(std::string("bank: invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw DataError("bank: top level must be an object");
    const auto version = require(root, "schema_version", "document");
    if (!version.is_number_integer() || version.get<int>() != kBankSchemaVersion)
        throw DataError("bank: unsupported schema_version");

    QuestionBank bank;
    const json& meta = require(root, "metadata", "document");
    bank.meta.ontologySource = require(meta, "ontology_source", "metadata").get<std::string>();
    bank.meta.ontologyDigest = require(meta, "ontology_digest", "metadata").get<std::string>();
    for (const auto& p : require(meta, "patterns", "metadata"))
        bank.meta.patterns.push_back(p.get<std::string>());
    const json& maxStems = require(meta, "max_stems", "metadata");
    if (!maxStems.is_null()) bank.meta.maxStems = maxStems.get<std::size_t>();
    bank.meta.optionCount = require(meta, "option_count", "metadata").get<std::size_t>();
    bank.meta.trait = trait_from_string(require(meta, "trait", "metadata").get<std::string>());
    bank.meta.seed = require(meta, "seed", "metadata").get<std::uint64_t>();
    const json& thetas = require(meta, "thetas", "metadata");
    bank.meta.thetas = {require(thetas, "low", "thetas").get<double>(),
                        require(thetas, "medium", "thetas").get<double>(),
                        require(thetas, "high", "thetas").get<double>()};
    bank.meta.generatedAt = require(meta, "generated_at", "metadata").get<std::string>();
    const json& counts = require(meta, "counts", "metadata");
    bank.meta.counts.stems = require(counts, "stems", "counts").get<std::size_t>();
    bank.meta.counts.valid = require(counts, "valid", "counts").get<std::size_t>();
    bank.meta.counts.withOptions = require(counts, "with_options", "counts").get<std::size_t>();
    const json& levels = require(counts, "levels", "counts");
    bank.meta.counts.perLevel = {require(levels, "low", "levels").get<std::size_t>(),
                                 require(levels, "medium", "levels").get<std::size_t>(),
                                 require(levels, "high", "levels").get<std::size_t>()};

    std::set<std::string> ids;
    for (const json& j : require(root, "items", "document")) {
        BankItem item;
        item.id = require(j, "id", "item").get<std::string>();
        if (!ids.insert(item.id).second) throw DataError("bank: duplicate item id " + item.id);
        const std::string context = "item " + item.id;
        item.pivot = require(j, "pivot", context).get<std::string>();
        item.pattern = require(j, "pattern", context).get<std::string>();
        for (const json& cj : require(j, "conditions", context)) {
            BankCondition c;
            c.kind = require(cj, "kind", context).get<std::string>();
            c.predicate = require(cj, "predicate", context).get<std::string>();
            if (cj.contains("filler")) c.filler = cj["filler"].get<std::string>();
            if (cj.contains("value")) c.literal = cj["value"].get<std::string>();
            item.conditions.push_back(c);
        }
        item.stemText = require(j, "stem_text", context).get<std::string>();
        std::size_t keyCount = 0;
        for (const json& oj : require(j, "options", context)) {
            BankOption o;
            o.letter = require(oj, "letter", context).get<std::string>();
            o.instance = require(oj, "instance", context).get<std::string>();
            o.text = require(oj, "text", context).get<std::string>();
            o.key = require(oj, "key", context).get<bool>();
            keyCount += o.key ? 1 : 0;
            item.options.push_back(o);
        }
        if (!item.options.empty() && keyCount != 1)
            throw DataError("bank: " + context + " must have exactly one key option");

        const json& scores = require(j, "scores", context);
        item.stem.dExpertRaw = require_score(require(scores, "d_expert_raw", context), context);
        item.stem.dBeginnerRaw = require_score(require(scores, "d_beginner_raw", context), context);
        item.stem.dAverageRaw = require_score(require(scores, "d_average_raw", context), context);
        item.stem.dExpert = require_score(require(scores, "d_expert", context), context);
        item.stem.dBeginner = require_score(require(scores, "d_beginner", context), context);
        item.stem.dAverage = require_score(require(scores, "d_average", context), context);
        item.stem.valid = require(scores, "valid", context).get<bool>();
        const json& cj = require(scores, "choice_set", context);
        if (!cj.is_null()) {
            ChoiceSetScores c;
            for (const json& sv : require(cj, "sim_per_distractor", context))
                c.simPerDistractor.push_back(require_score(sv, context));
            c.dSimilarity = require_score(require(cj, "d_similarity", context), context);
            c.dPopularity = require_score(require(cj, "d_popularity", context), context);
            c.popularityFloored = require(cj, "popularity_floored", context).get<bool>();
            c.dcScore = require_score(require(cj, "dc", context), context);
            item.choice = c;
        }
        const json& dp = require(scores, "d_predicted", context);
        if (!dp.is_null()) {
            const char* names[3] = {"beginner", "average", "expert"};
            for (int t = 0; t < 3; ++t) {
                const json& v = require(dp, names[t], context);
                if (!v.is_null()) item.dPredicted[static_cast<std::size_t>(t)] = require_score(v, context);
            }
        }
        const json& pl = require(scores, "predicted_level", context);
        if (!pl.is_null()) item.predictedLevel = level_from_string(pl.get<std::string>());
        bank.items.push_back(std::move(item));
    }
    return bank;
}

QuestionBank read_bank(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open bank: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return bank_from_json(text);
}

void write_bank(const QuestionBank& bank, const std::string& path) {
    write_file_atomic(path, bank_to_json(bank));
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot write file: " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw DataError("write failed: " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw DataError("cannot move " + tmp.string() + " to " + path + ": " + ec.message());
}

}  // namespace ontomcq
