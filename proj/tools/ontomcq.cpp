#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ontomcq/bank.hpp"
#include "ontomcq/errors.hpp"
#include "ontomcq/irt.hpp"
#include "ontomcq/log.hpp"
#include "ontomcq/ontology.hpp"
#include "ontomcq/pipeline.hpp"
#include "ontomcq/response_log.hpp"
#include "ontomcq/rng.hpp"

namespace {

using namespace ontomcq;

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::array<double, kLevelCount> parse_thetas(const std::string& csv) {
    std::array<double, kLevelCount> out{};
    std::stringstream ss(csv);
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ',')) {
        if (i >= kLevelCount) throw DataError("--thetas expects three values: low,medium,high");
        out[static_cast<std::size_t>(i++)] = parse_score(part);
    }
    if (i != kLevelCount) throw DataError("--thetas expects three values: low,medium,high");
    return out;
}

std::array<std::size_t, kLevelCount> parse_cohorts(const std::string& csv) {
    std::array<std::size_t, kLevelCount> out{};
    std::stringstream ss(csv);
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ',')) {
        if (i >= kLevelCount) throw DataError("--cohorts expects three sizes: low,medium,high");
        out[static_cast<std::size_t>(i++)] = static_cast<std::size_t>(std::stoull(part));
    }
    if (i != kLevelCount) throw DataError("--cohorts expects three sizes: low,medium,high");
    return out;
}

std::optional<std::int64_t> timestamp_from_env() {
    const char* env = std::getenv("SOURCE_DATE_EPOCH");
    if (env == nullptr) return std::nullopt;
    return static_cast<std::int64_t>(std::stoll(env));
}

RdfFormat ontology_format(const std::string& flag, const std::string& path) {
    if (flag == "turtle") return RdfFormat::Turtle;
    if (flag == "ntriples") return RdfFormat::NTriples;
    return format_from_path(path);
}

int cmd_generate(const std::string& ontologyPath, const std::string& formatFlag,
                 const std::string& patterns, std::size_t maxSize, std::size_t options,
                 const std::string& trait, std::uint64_t seed, const std::string& target,
                 const std::string& thetasCsv, const std::string& outPath) {
    GenerateOptions opts;
    opts.shapes = parse_patterns(patterns);
    if (maxSize > 0) opts.maxStems = maxSize;
    opts.optionCount = options;
    if (options < 2 || options > 26) throw DataError("--options must be between 2 and 26");
    opts.trait = trait_from_string(trait);
    opts.seed = seed;
    if (!target.empty()) opts.target = level_from_string(target);
    opts.thetas = parse_thetas(thetasCsv);
    opts.sourceName = ontologyPath;
    const std::string bytes = read_file_bytes(ontologyPath);
    {
        char hex[20];
        std::snprintf(hex, sizeof(hex), "%016llx",
                      static_cast<unsigned long long>(fnv1a64(bytes)));
        opts.sourceDigest = std::string("fnv1a64:") + hex;
    }
    opts.timestamp = timestamp_from_env();

    const Ontology o = Ontology::from_triples(parse_rdf(bytes, ontology_format(formatFlag, ontologyPath)));
    const auto counts = o.counts();
    log::info("loaded " + ontologyPath + ": " + std::to_string(counts.concepts) + " concepts, " +
              std::to_string(counts.objectRoles) + " object roles, " +
              std::to_string(counts.datatypeRoles) + " datatype roles, " +
              std::to_string(counts.instances) + " instances");

    GenerateResult result = generate_bank(o, opts);
    write_bank(result.bank, outPath);

    const auto& c = result.bank.meta.counts;
    std::cout << "generated " << c.stems << " stems (" << c.valid << " valid, " << c.withOptions
              << " with options; levels low/medium/high = " << c.perLevel[0] << "/"
              << c.perLevel[1] << "/" << c.perLevel[2] << "; seed " << seed << ") -> " << outPath
              << "\n";
    if (opts.shapes.size() > 1) {
        for (const auto& shape : opts.shapes) {
            std::size_t stems = 0, valid = 0;
            for (const auto& item : result.bank.items) {
                if (item.pattern != shape.name) continue;
                ++stems;
                valid += item.stem.valid ? 1 : 0;
            }
            std::cout << "  " << shape.name << ": " << stems << " stems, " << valid << " valid\n";
        }
    }
    return 0;
}

int cmd_simulate(const std::string& bankPath, const std::string& alphas,
                 const std::string& cohortsCsv, const std::string& thetasCsv, std::uint64_t seed,
                 double skipRate, double invalidRate, const std::string& outPath) {
    const QuestionBank bank = read_bank(bankPath);
    Thetas thetas{parse_thetas(thetasCsv)};

    std::map<std::string, double> alphaByItem;
    if (alphas == "predicted-scaled") {
        for (const auto& item : bank.items)
            if (item.has_options() && item.predictedLevel)
                alphaByItem[item.id] = thetas.of(*item.predictedLevel);
    } else {
        alphaByItem = read_alpha_csv_file(alphas);
        for (const auto& [id, alpha] : alphaByItem)
            if (bank.find(id) == nullptr) throw DataError("alpha file names unknown item " + id);
    }

    const auto cohortSizes = parse_cohorts(cohortsCsv);
    const auto records =
        simulate_responses(bank, alphaByItem, cohortSizes, thetas, seed, {skipRate, invalidRate});
    write_response_csv(records, outPath);
    std::cout << "simulated " << records.size() << " responses (seed " << seed << ") -> "
              << outPath << "\n";
    return 0;
}

int cmd_calibrate(const std::string& bankPath, const std::string& responsesPath,
                  const std::string& thetasCsv, const std::string& format,
                  const std::string& outPath) {
    const QuestionBank bank = read_bank(bankPath);
    const auto records = read_response_csv_file(responsesPath);
    Thetas thetas{parse_thetas(thetasCsv)};
    const CalibrationReport report = calibrate(bank, records, thetas);
    const std::string rendered =
        format == "md" ? calibration_to_markdown(report) : calibration_to_json(report);
    write_file_atomic(outPath, rendered);
    std::cout << "calibrated " << report.rows.size() << " items, agreement "
              << report.agreement.matches << "/" << report.agreement.considered << " = "
              << format_score(report.agreement.fraction()) << " -> " << outPath << "\n";
    return 0;
}

int cmd_inspect(const std::string& bankPath, const std::string& itemId,
                const std::string& format) {
    const QuestionBank bank = read_bank(bankPath);
    const BankItem* item = bank.find(itemId);
    if (item == nullptr) throw DataError("no item " + itemId + " in " + bankPath);
    if (format == "json") {
        QuestionBank single;
        single.meta = bank.meta;
        single.items.push_back(*item);
        std::cout << bank_to_json(single);
        return 0;
    }
    std::cout << "id:        " << item->id << "\n";
    std::cout << "pivot:     " << item->pivot << "\n";
    std::cout << "pattern:   " << item->pattern << "\n";
    std::cout << "stem:      " << item->stemText << "\n";
    std::cout << "conditions:\n";
    for (const auto& c : item->conditions) {
        std::cout << "  - " << c.kind << " " << c.predicate;
        if (!c.filler.empty()) std::cout << " -> " << c.filler;
        if (!c.literal.empty()) std::cout << " = \"" << c.literal << "\"";
        std::cout << "\n";
    }
    if (item->has_options()) {
        std::cout << "options:\n";
        for (const auto& o : item->options)
            std::cout << "  " << o.letter << ". " << o.text << (o.key ? "  (key)" : "") << "\n";
    } else {
        std::cout << "options:   (none built)\n";
    }
    const auto& s = item->stem;
    std::cout << "stem scores:\n";
    std::cout << "  d_expert   raw " << format_score(s.dExpertRaw) << "  normalized "
              << format_score(s.dExpert) << "\n";
    std::cout << "  d_beginner raw " << format_score(s.dBeginnerRaw) << "  normalized "
              << format_score(s.dBeginner) << "\n";
    std::cout << "  d_average  raw " << format_score(s.dAverageRaw) << "  normalized "
              << format_score(s.dAverage) << "\n";
    std::cout << "  valid: " << (s.valid ? "true" : "false") << "\n";
    if (item->choice) {
        std::cout << "choice-set scores:\n  sim per distractor:";
        for (const double v : item->choice->simPerDistractor) std::cout << " " << format_score(v);
        std::cout << "\n  d_similarity " << format_score(item->choice->dSimilarity)
                  << "\n  d_popularity " << format_score(item->choice->dPopularity)
                  << (item->choice->popularityFloored ? " (floored)" : "") << "\n  dc           "
                  << format_score(item->choice->dcScore) << "\n";
    }
    const char* traits[3] = {"beginner", "average", "expert"};
    for (int t = 0; t < 3; ++t)
        if (item->dPredicted[static_cast<std::size_t>(t)])
            std::cout << "d_predicted(" << traits[t]
                      << "): " << format_score(*item->dPredicted[static_cast<std::size_t>(t)])
                      << "\n";
    if (item->predictedLevel)
        std::cout << "predicted level: " << to_string(*item->predictedLevel) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ontology-driven MCQ generation, difficulty prediction and 1PL calibration"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "generate a scored question bank from an ontology");
    std::string ontologyPath, genOut, patterns = "p1,p2,p3", trait = "average", target;
    std::string ontologyFormatFlag = "auto", genThetas = "-1.5,0,1.5";
    std::size_t maxSize = 0, options = 3;
    std::uint64_t genSeed = 0;
    gen->add_option("--ontology", ontologyPath, "ontology file (Turtle or N-Triples)")->required();
    gen->add_option("--ontology-format", ontologyFormatFlag, "auto|turtle|ntriples");
    gen->add_option("--patterns", patterns,
                    "comma-separated patterns: p1,p2,p3 or slot lists like type+out");
    gen->add_option("--max-size", maxSize, "cap on the number of enumerated stems (0 = no cap)");
    gen->add_option("--options", options, "options per item, key included");
    gen->add_option("--trait", trait, "beginner|average|expert");
    gen->add_option("--seed", genSeed, "random seed");
    gen->add_option("--target", target, "difficulty-targeted choice sets: low|medium|high");
    gen->add_option("--thetas", genThetas, "trait abilities low,medium,high");
    gen->add_option("--out", genOut, "output bank path")->required();

    // simulate
    auto* sim = app.add_subcommand("simulate", "simulate learner responses for a bank");
    std::string simBank, simAlphas = "predicted-scaled", simCohorts = "18,18,18";
    std::string simThetas = "-1.5,0,1.5", simOut;
    std::uint64_t simSeed = 0;
    double skipRate = 0.0, invalidRate = 0.0;
    sim->add_option("--bank", simBank, "question bank path")->required();
    sim->add_option("--alphas", simAlphas, "'predicted-scaled' or an item_id,alpha CSV file");
    sim->add_option("--cohorts", simCohorts, "cohort sizes low,medium,high");
    sim->add_option("--thetas", simThetas, "trait abilities low,medium,high");
    sim->add_option("--seed", simSeed, "random seed");
    sim->add_option("--skip-rate", skipRate, "fixed probability of a SKIP vote");
    sim->add_option("--invalid-rate", invalidRate, "fixed probability of an INVALID vote");
    sim->add_option("--out", simOut, "output response CSV path")->required();

    // calibrate
    auto* cal = app.add_subcommand("calibrate", "estimate actual difficulty from a response log");
    std::string calBank, calResponses, calThetas = "-1.5,0,1.5", calFormat = "json", calOut;
    cal->add_option("--bank", calBank, "question bank path")->required();
    cal->add_option("--responses", calResponses, "response CSV path")->required();
    cal->add_option("--thetas", calThetas, "trait abilities low,medium,high");
    cal->add_option("--format", calFormat, "json|md")->check(CLI::IsMember({"json", "md"}));
    cal->add_option("--out", calOut, "output report path")->required();

    // inspect
    auto* ins = app.add_subcommand("inspect", "print one item with all intermediate scores");
    std::string insBank, insItem, insFormat = "md";
    ins->add_option("--bank", insBank, "question bank path")->required();
    ins->add_option("--item", insItem, "item id")->required();
    ins->add_option("--format", insFormat, "md|json")->check(CLI::IsMember({"md", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_generate(ontologyPath, ontologyFormatFlag, patterns, maxSize, options,
                                trait, genSeed, target, genThetas, genOut);
        if (sim->parsed())
            return cmd_simulate(simBank, simAlphas, simCohorts, simThetas, simSeed, skipRate,
                                invalidRate, simOut);
        if (cal->parsed()) return cmd_calibrate(calBank, calResponses, calThetas, calFormat, calOut);
        if (ins->parsed()) return cmd_inspect(insBank, insItem, insFormat);
    } catch (const std::exception& e) {
        ontomcq::log::error(e.what());
        return 1;
    }
    return 0;
}
