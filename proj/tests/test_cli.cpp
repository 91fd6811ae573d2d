#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "ontomcq/bank.hpp"
#include "ontomcq/irt.hpp"
#include "ontomcq/ontology.hpp"
#include "ontomcq/response_log.hpp"
#include "support/paths.hpp"
#include "support/run_cli.hpp"
#include "support/study_table.hpp"
#include "support/synthetic_bank.hpp"

using namespace ontomcq;
using namespace ontomcq::testsupport;
using json = nlohmann::json;

TEST_CASE("generate: fixture bank with stem counts and validity flags") {
    TempDir dir("cli_generate");
    const std::string bankPath = dir.file("bank.json");
    const auto r = run_cli("generate --ontology " + fixture_path("movies.ttl") +
                               " --patterns p3 --options 2 --seed 7 --out " + bankPath,
                           dir.file("run1"));
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("generated 5 stems") != std::string::npos);
    CHECK(r.err.find("insufficient distractors") != std::string::npos);  // warning, not fatal

    const QuestionBank bank = read_bank(bankPath);
    CHECK(bank.meta.counts.stems == 5);
    CHECK(bank.meta.counts.valid == 3);
    std::size_t valid = 0;
    for (const auto& item : bank.items) valid += item.stem.valid ? 1 : 0;
    CHECK(valid == 3);
}

TEST_CASE("generate: byte-identical reruns under a pinned timestamp") {
    TempDir dir("cli_determinism");
    const std::string argsA = "generate --ontology " + fixture_path("movies.ttl") +
                              " --patterns p1,p2,p3 --seed 42 --out " + dir.file("a.json");
    const std::string argsB = "generate --ontology " + fixture_path("movies.ttl") +
                              " --patterns p1,p2,p3 --seed 42 --out " + dir.file("b.json");
    CHECK(run_cli(argsA, dir.file("ra"), "SOURCE_DATE_EPOCH=1700000000").exitCode == 0);
    CHECK(run_cli(argsB, dir.file("rb"), "SOURCE_DATE_EPOCH=1700000000").exitCode == 0);
    CHECK(slurp_file(dir.file("a.json")) == slurp_file(dir.file("b.json")));
    CHECK_FALSE(slurp_file(dir.file("a.json")).empty());
}

TEST_CASE("generate: empty ontology succeeds with a warning") {
    TempDir dir("cli_empty");
    const std::string ont = dir.file("empty.ttl");
    std::ofstream(ont) << "# nothing here\n";
    const auto r = run_cli("generate --ontology " + ont + " --out " + dir.file("bank.json"),
                           dir.file("run"));
    CHECK(r.exitCode == 0);
    CHECK(r.err.find("no stems") != std::string::npos);
    CHECK(read_bank(dir.file("bank.json")).items.empty());
}

TEST_CASE("generate: unreadable ontology fails with nonzero exit") {
    TempDir dir("cli_unreadable");
    const auto r = run_cli("generate --ontology /nonexistent.ttl --out " + dir.file("bank.json"),
                           dir.file("run"));
    CHECK(r.exitCode == 1);
    CHECK(r.err.find("[error]") != std::string::npos);
}

TEST_CASE("generate: studio ontology builds option-bearing leveled items") {
    TempDir dir("cli_studio");
    const std::string bankPath = dir.file("bank.json");
    const auto r = run_cli("generate --ontology " + test_data_path("studio.ttl") +
                               " --patterns type+out --options 3 --seed 5 --out " + bankPath,
                           dir.file("run"));
    REQUIRE(r.exitCode == 0);
    const QuestionBank bank = read_bank(bankPath);
    CHECK(bank.meta.counts.withOptions >= 3);
    for (const auto& item : bank.items) {
        if (!item.has_options()) continue;
        CHECK(item.options.size() == 3);
        CHECK(item.predictedLevel.has_value());
        CHECK(item.key_letter() != "");
        REQUIRE(item.choice.has_value());
        CHECK(item.choice->dcScore > 0.0);
    }
}

TEST_CASE("simulate: study-sized run emits 24 x 54 rows") {
    TempDir dir("cli_simulate");
    const std::string bankPath = dir.file("bank.json");
    write_bank(make_study_bank(), bankPath);

    std::map<std::string, double> alphas;
    for (const auto& row : kStudyTable)
        alphas[row.id] = parse_score(row.alpha[static_cast<int>(level_from_string(row.predicted))]);
    const std::string alphaPath = dir.file("alphas.csv");
    write_alpha_csv(alphas, alphaPath);

    const std::string csvPath = dir.file("responses.csv");
    const auto r = run_cli("simulate --bank " + bankPath + " --alphas " + alphaPath +
                               " --cohorts 18,18,18 --seed 3 --out " + csvPath,
                           dir.file("run"));
    REQUIRE(r.exitCode == 0);
    const auto records = read_response_csv_file(csvPath);
    CHECK(records.size() == 24 * 54);

    // a zero cohort produces no rows for that trait
    const auto r2 = run_cli("simulate --bank " + bankPath + " --alphas " + alphaPath +
                                " --cohorts 0,18,18 --seed 3 --out " + dir.file("r2.csv"),
                            dir.file("run2"));
    REQUIRE(r2.exitCode == 0);
    for (const auto& rec : read_response_csv_file(dir.file("r2.csv")))
        CHECK(rec.trait != Level::Low);

    // same seed, same bytes
    const auto r3 = run_cli("simulate --bank " + bankPath + " --alphas " + alphaPath +
                                " --cohorts 18,18,18 --seed 3 --out " + dir.file("r3.csv"),
                            dir.file("run3"));
    REQUIRE(r3.exitCode == 0);
    CHECK(slurp_file(csvPath) == slurp_file(dir.file("r3.csv")));
}

TEST_CASE("calibrate: hand-built log reproduces hand-computed stats") {
    TempDir dir("cli_calibrate");
    const std::string bankPath = dir.file("bank.json");
    // two items; i1 predicted high (key A), i2 predicted low (key B)
    write_bank(make_bank({make_item("i1", 3, 0, Level::High), make_item("i2", 3, 1, Level::Low)}),
               bankPath);

    // cohorts of 4; per item and cohort: crafted correct/wrong/skip/invalid mixes
    std::vector<ResponseRecord> records;
    auto fill = [&](const std::string& item, Level trait, const std::string& key, int correct,
                    int wrong, int skip, int invalid) {
        int n = 0;
        for (int i = 0; i < correct; ++i)
            records.push_back({to_string(trait) + std::to_string(n++), trait, item, key});
        for (int i = 0; i < wrong; ++i)
            records.push_back({to_string(trait) + std::to_string(n++), trait, item,
                               key == "A" ? "B" : "A"});
        for (int i = 0; i < skip; ++i)
            records.push_back({to_string(trait) + std::to_string(n++), trait, item, "SKIP"});
        for (int i = 0; i < invalid; ++i)
            records.push_back({to_string(trait) + std::to_string(n++), trait, item, "INVALID"});
    };
    // i1: high cohort 2/4 correct -> alpha_high = 1.5, actual high
    fill("i1", Level::High, "A", 2, 2, 0, 0);
    fill("i1", Level::Medium, "A", 1, 2, 1, 0);
    fill("i1", Level::Low, "A", 0, 3, 1, 0);
    // i2: low cohort 3 correct, 1 invalid -> P = 3/3 = 1 -> alpha_low = -inf, actual low
    fill("i2", Level::Low, "B", 3, 0, 0, 1);
    fill("i2", Level::Medium, "B", 3, 0, 1, 0);
    fill("i2", Level::High, "B", 4, 0, 0, 0);
    const std::string csvPath = dir.file("responses.csv");
    write_response_csv(records, csvPath);

    const std::string reportPath = dir.file("report.json");
    const auto r = run_cli("calibrate --bank " + bankPath + " --responses " + csvPath +
                               " --out " + reportPath,
                           dir.file("run"));
    REQUIRE(r.exitCode == 0);
    CHECK(r.out.find("agreement 2/2 = 1") != std::string::npos);

    const json report = json::parse(slurp_file(reportPath));
    REQUIRE(report["items"].size() == 2);
    CHECK(report["items"][0]["id"] == "i1");
    CHECK(parse_score(report["items"][0]["p"]["high"].get<std::string>()) ==
          doctest::Approx(0.5));
    CHECK(parse_score(report["items"][0]["alpha"]["high"].get<std::string>()) ==
          doctest::Approx(1.5));
    CHECK(report["items"][0]["actual_level"] == "high");
    CHECK(report["items"][1]["p"]["low"] == "1");
    CHECK(report["items"][1]["alpha"]["low"] == "-inf");
    CHECK(report["items"][1]["actual_level"] == "low");
    CHECK(report["agreement"]["matches"] == 2);

    // markdown mirrors the table layout
    const auto rmd = run_cli("calibrate --bank " + bankPath + " --responses " + csvPath +
                                 " --format md --out " + dir.file("report.md"),
                             dir.file("runmd"));
    REQUIRE(rmd.exitCode == 0);
    const std::string md = slurp_file(dir.file("report.md"));
    CHECK(md.find("| item | P(high) | P(medium) | P(low) |") != std::string::npos);
    CHECK(md.find("agreement: 2/2") != std::string::npos);
}

TEST_CASE("calibrate: all-INVALID item is excluded with a warning") {
    TempDir dir("cli_excluded");
    const std::string bankPath = dir.file("bank.json");
    write_bank(make_bank({make_item("i1", 3, 0, Level::Low)}), bankPath);
    std::vector<ResponseRecord> records;
    for (int i = 0; i < 3; ++i)
        records.push_back({"low" + std::to_string(i), Level::Low, "i1", "INVALID"});
    records.push_back({"med0", Level::Medium, "i1", "A"});
    write_response_csv(records, dir.file("r.csv"));
    const auto r = run_cli("calibrate --bank " + bankPath + " --responses " + dir.file("r.csv") +
                               " --out " + dir.file("report.json"),
                           dir.file("run"));
    REQUIRE(r.exitCode == 0);
    const json report = json::parse(slurp_file(dir.file("report.json")));
    CHECK(report["items"][0]["excluded"] == true);
    CHECK(report["agreement"]["considered"] == 0);
    REQUIRE_FALSE(report["warnings"].empty());
    CHECK(report["warnings"][0].get<std::string>().find("INVALID") != std::string::npos);
}

TEST_CASE("calibrate: schema violations name the offending row") {
    TempDir dir("cli_badcsv");
    const std::string bankPath = dir.file("bank.json");
    write_bank(make_bank({make_item("i1", 3, 0, Level::Low)}), bankPath);
    std::ofstream(dir.file("bad.csv"))
        << "learner_id,trait_level,item_id,choice\nl1,low,i1,A\nl2,nope,i1,A\n";
    const auto r = run_cli("calibrate --bank " + bankPath + " --responses " + dir.file("bad.csv") +
                               " --out " + dir.file("report.json"),
                           dir.file("run"));
    CHECK(r.exitCode == 1);
    CHECK(r.err.find("row 3") != std::string::npos);
}

TEST_CASE("simulate then calibrate recovers planted difficulty within 0.1") {
    TempDir dir("cli_recovery");
    const std::string bankPath = dir.file("bank.json");
    write_bank(make_bank({make_item("i1", 3, 0, Level::Medium),
                          make_item("i2", 3, 1, Level::High),
                          make_item("i3", 3, 2, Level::Low)}),
               bankPath);
    write_alpha_csv({{"i1", 0.2}, {"i2", 1.4}, {"i3", -1.2}}, dir.file("alphas.csv"));
    REQUIRE(run_cli("simulate --bank " + bankPath + " --alphas " + dir.file("alphas.csv") +
                        " --cohorts 2000,2000,2000 --seed 11 --out " + dir.file("r.csv"),
                    dir.file("sim"))
                .exitCode == 0);
    REQUIRE(run_cli("calibrate --bank " + bankPath + " --responses " + dir.file("r.csv") +
                        " --out " + dir.file("report.json"),
                    dir.file("cal"))
                .exitCode == 0);
    const json report = json::parse(slurp_file(dir.file("report.json")));
    const std::map<std::string, double> planted{{"i1", 0.2}, {"i2", 1.4}, {"i3", -1.2}};
    const std::map<std::string, double> thetaOf{{"low", -1.5}, {"medium", 0.0}, {"high", 1.5}};
    for (const auto& item : report["items"]) {
        const double alpha = planted.at(item["id"].get<std::string>());
        for (const auto& [traitName, theta] : thetaOf) {
            if (std::abs(alpha - theta) > 2.0) continue;
            const double got = parse_score(item["alpha"][traitName].get<std::string>());
            CHECK(std::abs(got - alpha) < 0.1);
        }
    }
    // predicted-scaled alphas run end to end too
    CHECK(run_cli("simulate --bank " + bankPath +
                      " --alphas predicted-scaled --cohorts 5,5,5 --seed 2 --out " +
                      dir.file("ps.csv"),
                  dir.file("sim2"))
              .exitCode == 0);
    CHECK(read_response_csv_file(dir.file("ps.csv")).size() == 45);
}

TEST_CASE("inspect prints the intermediate scores") {
    TempDir dir("cli_inspect");
    const std::string bankPath = dir.file("bank.json");
    write_bank(make_bank({make_item("i1", 3, 0, Level::Medium)}), bankPath);
    const auto r = run_cli("inspect --bank " + bankPath + " --item i1", dir.file("run"));
    REQUIRE(r.exitCode == 0);
    CHECK(r.out.find("d_expert") != std::string::npos);
    CHECK(r.out.find("d_similarity") != std::string::npos);
    CHECK(r.out.find("(key)") != std::string::npos);
    CHECK(r.out.find("predicted level: medium") != std::string::npos);

    CHECK(run_cli("inspect --bank " + bankPath + " --item zzz", dir.file("run2")).exitCode == 1);
}

TEST_CASE("generate: p1 on the studio ontology exercises datatype slots") {
    TempDir dir("cli_p1");
    const std::string bankPath = dir.file("bank.json");
    const auto r = run_cli("generate --ontology " + test_data_path("studio.ttl") +
                               " --patterns p1 --options 2 --seed 4 --out " + bankPath,
                           dir.file("run"));
    REQUIRE(r.exitCode == 0);
    const QuestionBank bank = read_bank(bankPath);
    REQUIRE_FALSE(bank.items.empty());
    for (const auto& item : bank.items) {
        REQUIRE(item.conditions.size() == 2);
        CHECK(item.conditions[0].kind == "incoming");
        CHECK(item.conditions[1].kind == "data");
        CHECK_FALSE(item.conditions[1].literal.empty());
    }
}

TEST_CASE("simulate: missing bank and unknown alpha items fail") {
    TempDir dir("cli_sim_errors");
    CHECK(run_cli("simulate --bank /nonexistent.json --out " + dir.file("r.csv"),
                  dir.file("r0"))
              .exitCode == 1);
    const std::string bankPath = dir.file("bank.json");
    write_bank(make_bank({make_item("i1", 3, 0, Level::Low)}), bankPath);
    write_alpha_csv({{"ghost", 1.0}}, dir.file("alphas.csv"));
    const auto r = run_cli("simulate --bank " + bankPath + " --alphas " + dir.file("alphas.csv") +
                               " --out " + dir.file("r.csv"),
                           dir.file("r1"));
    CHECK(r.exitCode == 1);
    CHECK(r.err.find("unknown item") != std::string::npos);

    std::ofstream(dir.file("bad_alphas.csv")) << "item_id,alpha\ni1,not-a-number\n";
    CHECK(run_cli("simulate --bank " + bankPath + " --alphas " + dir.file("bad_alphas.csv") +
                      " --out " + dir.file("r.csv"),
                  dir.file("r2"))
              .exitCode == 1);
}

TEST_CASE("ONTOMCQ_LOG gates warning output") {
    TempDir dir("cli_log");
    const std::string args = "generate --ontology " + fixture_path("movies.ttl") +
                             " --patterns p3 --options 2 --seed 7 --out ";
    const auto noisy = run_cli(args + dir.file("a.json"), dir.file("r1"), "ONTOMCQ_LOG=warn");
    CHECK(noisy.err.find("[warn]") != std::string::npos);
    const auto quiet = run_cli(args + dir.file("b.json"), dir.file("r2"), "ONTOMCQ_LOG=error");
    CHECK(quiet.exitCode == 0);
    CHECK(quiet.err.find("[warn]") == std::string::npos);
    const auto chatty = run_cli(args + dir.file("c.json"), dir.file("r3"), "ONTOMCQ_LOG=info");
    CHECK(chatty.err.find("[info]") != std::string::npos);
}

TEST_CASE("inspect --format json emits the item record") {
    TempDir dir("cli_inspect_json");
    const std::string bankPath = dir.file("bank.json");
    write_bank(make_bank({make_item("i1", 3, 0, Level::Medium)}), bankPath);
    const auto r = run_cli("inspect --bank " + bankPath + " --item i1 --format json",
                           dir.file("run"));
    REQUIRE(r.exitCode == 0);
    const json parsed = json::parse(r.out);
    REQUIRE(parsed["items"].size() == 1);
    CHECK(parsed["items"][0]["id"] == "i1");
    CHECK(parsed["items"][0]["scores"]["choice_set"]["d_similarity"] == "0.5");
}

TEST_CASE("generate: --max-size caps the enumeration") {
    TempDir dir("cli_maxsize");
    const auto r = run_cli("generate --ontology " + fixture_path("movies.ttl") +
                               " --patterns p3 --max-size 2 --options 2 --seed 1 --out " +
                               dir.file("bank.json"),
                           dir.file("run"));
    REQUIRE(r.exitCode == 0);
    CHECK(read_bank(dir.file("bank.json")).items.size() == 2);
}

TEST_CASE("generate: ntriples input gives the same bank as turtle") {
    TempDir dir("cli_ntriples");
    const Ontology o = Ontology::load_file(fixture_path("movies.ttl"), RdfFormat::Turtle);
    std::ofstream(dir.file("movies.nt")) << o.serialize();
    const std::string args = " --patterns p1,p2,p3 --options 2 --seed 3 --out ";
    REQUIRE(run_cli("generate --ontology " + fixture_path("movies.ttl") + args + dir.file("a.json"),
                    dir.file("r1"), "SOURCE_DATE_EPOCH=1")
                .exitCode == 0);
    REQUIRE(run_cli("generate --ontology " + dir.file("movies.nt") + args + dir.file("b.json"),
                    dir.file("r2"), "SOURCE_DATE_EPOCH=1")
                .exitCode == 0);
    const QuestionBank a = read_bank(dir.file("a.json"));
    const QuestionBank b = read_bank(dir.file("b.json"));
    REQUIRE(a.items.size() == b.items.size());
    for (std::size_t i = 0; i < a.items.size(); ++i) {
        CHECK(a.items[i].stemText == b.items[i].stemText);
        CHECK(a.items[i].stem.dExpertRaw == b.items[i].stem.dExpertRaw);
        CHECK(a.items[i].stem.valid == b.items[i].stem.valid);
    }
}

TEST_CASE("missing required flags exit nonzero") {
    TempDir dir("cli_flags");
    CHECK(run_cli("generate", dir.file("r0")).exitCode != 0);
    CHECK(run_cli("frobnicate", dir.file("r1")).exitCode != 0);
}
