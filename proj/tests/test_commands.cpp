#include <doctest.h>

#include <filesystem>
#include <set>

#include <json.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "corpus.hpp"
#include "csv.hpp"
#include "error.hpp"
#include "io_util.hpp"
#include "oracles.hpp"
#include "rng.hpp"
#include "testutil.hpp"

using namespace storyfear;
namespace fs = std::filesystem;

namespace {

std::string fixture(const std::string& name) {
    return std::string(SF_FIXTURE_DIR) + "/" + name;
}

RunConfig base_config(const testutil::TempDir& dir) {
    RunConfig config;
    config.set("corpus.scary", fixture("toy_scary.jsonl"));
    config.set("corpus.baseline", fixture("toy_baseline.jsonl"));
    config.set("embed.path", fixture("tiny_embeddings.txt"));
    config.set("embed.pos", fixture("pos_lexicon.tsv"));
    config.set("fear.labeled", fixture("labeled_fear.csv"));
    config.set("out_dir", dir.file("out"));
    config.set("seed", "4242");
    config.set("threads", "2");  // exercise the parallel paths
    return config;
}

nlohmann::json read_json(const std::string& path) {
    return nlohmann::json::parse(read_text_file(path));
}

}  // namespace

TEST_CASE("config files parse key-value lines") {
    const RunConfig c = RunConfig::from_text(
        "# comment\n"
        "corpus.scary = /tmp/x.jsonl\n"
        "lexicon.min_occurrence=50\n"
        "\n"
        "similarity.log_scores = true\n");
    CHECK(c.get_string("corpus.scary", "") == "/tmp/x.jsonl");
    CHECK(c.get_uint("lexicon.min_occurrence", 0) == 50);
    CHECK(c.get_bool("similarity.log_scores", false));
    CHECK(c.get_uint("missing", 7) == 7);
    CHECK_THROWS_AS(RunConfig::from_text("no equals sign\n"), FormatError);
    CHECK_THROWS_AS(c.get_uint("corpus.scary", 0), ArgError);
    CHECK_THROWS_AS(c.require_string("nope"), ArgError);

    // integers must parse completely, not just by prefix
    RunConfig strict;
    strict.set("epochs", "1e6");
    CHECK_THROWS_AS(strict.get_uint("epochs", 0), ArgError);
    strict.set("epochs", "42");
    CHECK(strict.get_uint("epochs", 0) == 42);
}

TEST_CASE("ingest cleans, filters and writes a deterministic cache") {
    testutil::TempDir dir("sf_cmd_ingest");
    const RunConfig config = base_config(dir);
    cmd_ingest(config);

    const auto manifest = read_json(dir.file("out") + "/ingest_manifest.json");
    CHECK(manifest["scary"]["stories"].get<std::size_t>() == 25);
    CHECK(manifest["baseline"]["stories"].get<std::size_t>() == 25);
    CHECK(manifest["scary"]["skipped_malformed"].get<std::size_t>() == 0);

    const auto stories = read_story_cache(scary_cache_path(dir.file("out")));
    REQUIRE(stories.size() == 25);
    for (const Story& s : stories) {
        CHECK(s.tokens.size() >= 500);
        CHECK(!s.sentences.empty());
    }

    // unchanged input -> identical checksum
    const std::string first = manifest["scary"]["checksum"].get<std::string>();
    cmd_ingest(config);
    const auto again = read_json(dir.file("out") + "/ingest_manifest.json");
    CHECK(again["scary"]["checksum"].get<std::string>() == first);
}

TEST_CASE("ingest drops stories below the length threshold") {
    testutil::TempDir dir("sf_cmd_short");
    RunConfig config = base_config(dir);
    const std::string small = dir.file("small.jsonl");
    write_text_file(
        small,
        R"({"id":"short1","created_utc":10,"subreddit":"s","title":"t","selftext":"too short. words here."})"
        "\n" +
            testutil::make_raw_corpus_jsonl({.n_stories = 2, .seed = 77}));
    config.set("corpus.scary", small);
    cmd_ingest(config);
    const auto manifest = read_json(dir.file("out") + "/ingest_manifest.json");
    CHECK(manifest["scary"]["stories"].get<std::size_t>() == 2);
    CHECK(manifest["scary"]["dropped_short"].get<std::size_t>() == 1);
}

TEST_CASE("stats histograms sum to the story count") {
    testutil::TempDir dir("sf_cmd_stats");
    const RunConfig config = base_config(dir);
    cmd_ingest(config);
    cmd_stats(config);

    for (const char* name : {"stats_years.csv", "stats_hours.csv"}) {
        const auto rows = read_csv_file(dir.file("out") + "/" + name);
        REQUIRE(rows.size() >= 2);
        CHECK(rows[0] == std::vector<std::string>{"key", "count"});
        std::size_t total = 0;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            total += std::stoull(rows[i][1]);
        }
        CHECK(total == 25);
    }
}

TEST_CASE("stats requires the ingest cache") {
    testutil::TempDir dir("sf_cmd_stats2");
    const RunConfig config = base_config(dir);
    try {
        cmd_stats(config);
        FAIL("expected StateError");
    } catch (const StateError& e) {
        CHECK(std::string(e.what()).find("ingest") != std::string::npos);
    }
}

TEST_CASE("sstop reproduces the committed golden lexicon byte for byte") {
    testutil::TempDir dir("sf_cmd_sstop");
    RunConfig config = base_config(dir);
    cmd_ingest(config);
    cmd_sstop(config);

    const std::string produced = read_text_file(lexicon_csv_path(dir.file("out")));
    CHECK(produced == read_text_file(fixture("golden_lexicon.csv")));

    // and independently: brute-force recount from the caches
    const auto scary = read_story_cache(scary_cache_path(dir.file("out")));
    const auto baseline = read_story_cache(baseline_cache_path(dir.file("out")));
    CHECK(produced == oracle::sstop_csv(oracle::sstop_recount(scary, baseline, 100)));
}

TEST_CASE("per-subreddit lexicons cover each baseline subreddit") {
    testutil::TempDir dir("sf_cmd_persub");
    RunConfig config = base_config(dir);
    config.set("lexicon.per_subreddit", "true");
    config.set("lexicon.min_occurrence", "30");
    cmd_ingest(config);
    cmd_sstop(config);

    const auto baseline = read_story_cache(baseline_cache_path(dir.file("out")));
    const auto scary = read_story_cache(scary_cache_path(dir.file("out")));
    std::set<std::string> subreddits;
    for (const Story& s : baseline) subreddits.insert(s.subreddit);
    REQUIRE(subreddits.size() >= 2);
    for (const std::string& subreddit : subreddits) {
        const std::string path = dir.file("out") + "/lexicon_" + subreddit + ".csv";
        REQUIRE(fs::exists(path));
        std::vector<Story> subset;
        for (const Story& s : baseline) {
            if (s.subreddit == subreddit) subset.push_back(s);
        }
        CHECK(read_text_file(path) ==
              oracle::sstop_csv(oracle::sstop_recount(scary, subset, 30)));
    }
}

TEST_CASE("modes without any fear scorer names the missing command") {
    testutil::TempDir dir("sf_cmd_modes0");
    RunConfig config = base_config(dir);
    cmd_ingest(config);
    cmd_sstop(config);
    try {
        cmd_modes(config);
        FAIL("expected StateError");
    } catch (const StateError& e) {
        CHECK(std::string(e.what()).find("fear-train") != std::string::npos);
    }
}

TEST_CASE("fear-train then fear-eval writes valid reports") {
    testutil::TempDir dir("sf_cmd_fear");
    RunConfig config = base_config(dir);
    config.set("fear.lambda", "1e-4");
    config.set("fear.epochs", "200");
    cmd_fear_train(config);

    const auto model = read_json(fear_model_path(dir.file("out")));
    CHECK(model["dim"].get<std::size_t>() == 8);
    CHECK(model["weights"].size() == 8);
    CHECK(model["reg"].get<std::string>() == "l2");

    cmd_fear_eval(config);
    const auto eval = read_json(dir.file("out") + "/fear_eval.json");
    const double accuracy = eval["accuracy"].get<double>();
    const double auc = eval["roc_auc"].get<double>();
    CHECK(accuracy >= 0.0);
    CHECK(accuracy <= 1.0);
    CHECK(auc >= 0.0);
    CHECK(auc <= 1.0);
    const auto& confusion = eval["confusion"];
    const std::size_t total = confusion["tp"].get<std::size_t>() +
                              confusion["fp"].get<std::size_t>() +
                              confusion["tn"].get<std::size_t>() +
                              confusion["fn"].get<std::size_t>();
    CHECK(total == eval["n"].get<std::size_t>());

    // the synthetic labels are strongly separated in embedding space
    CHECK(auc > 0.8);
}

TEST_CASE("fear-train grid search picks a lambda from the grid") {
    testutil::TempDir dir("sf_cmd_grid");
    RunConfig config = base_config(dir);
    config.set("fear.epochs", "60");
    cmd_fear_train(config);  // fear.lambda defaults to auto
    const auto summary = read_json(dir.file("out") + "/fear_train_summary.json");
    CHECK(summary["lambda_grid"].size() == 5);
    const double chosen = summary["lambda"].get<double>();
    CHECK(chosen >= 1e-5);
    CHECK(chosen <= 1e-1);
}

TEST_CASE("modes runs with the trained model and with external scores") {
    testutil::TempDir dir("sf_cmd_modes");
    RunConfig config = base_config(dir);
    config.set("fear.lambda", "1e-4");
    cmd_ingest(config);
    cmd_sstop(config);
    cmd_fear_train(config);
    cmd_modes(config);

    const std::string out = dir.file("out");
    auto summary = read_json(out + "/modes_summary.json");
    CHECK(summary["n"].get<std::size_t>() == 25);
    std::size_t fear_total = 0, sstop_total = 0;
    for (const auto& v : summary["fear_histogram"]) fear_total += v.get<std::size_t>();
    for (const auto& v : summary["sstop_histogram"]) sstop_total += v.get<std::size_t>();
    CHECK(fear_total == 25);
    CHECK(sstop_total == 25);

    // determinism: byte-identical on a second run
    const std::string first_coeffs = read_text_file(out + "/modes_fear_coeffs.csv");
    cmd_modes(config);
    CHECK(read_text_file(out + "/modes_fear_coeffs.csv") == first_coeffs);

    // external scores: score every sentence of every cached story
    const auto stories = read_story_cache(scary_cache_path(out));
    std::string scores = "story_id,sentence_index,probability\n";
    Rng rng(3141);
    for (const Story& s : stories) {
        for (std::size_t i = 0; i < s.sentences.size(); ++i) {
            scores += s.id + "," + std::to_string(i) + "," +
                      std::to_string(rng.next_double()) + "\n";
        }
    }
    write_text_file(dir.file("scores.csv"), scores);
    config.set("modes.external_scores", dir.file("scores.csv"));
    cmd_modes(config);
    summary = read_json(out + "/modes_summary.json");
    CHECK(summary["n"].get<std::size_t>() == 25);
    const auto rows = read_csv_file(out + "/modes_fear_u.csv");
    CHECK(rows.size() == 11);  // header + 10 modes
}

TEST_CASE("outputs are identical across thread counts") {
    testutil::TempDir dir("sf_cmd_threads");
    RunConfig config = base_config(dir);
    config.set("fear.lambda", "1e-4");
    config.set("threads", "1");
    cmd_ingest(config);
    cmd_sstop(config);
    cmd_fear_train(config);
    cmd_modes(config);
    const std::string out = dir.file("out");
    const std::string cache = read_text_file(scary_cache_path(out));
    const std::string lexicon = read_text_file(lexicon_csv_path(out));
    const std::string profiles = read_text_file(out + "/profiles.csv");
    const std::string model = read_text_file(fear_model_path(out));

    config.set("threads", "3");
    cmd_ingest(config);
    cmd_sstop(config);
    cmd_fear_train(config);
    cmd_modes(config);
    CHECK(read_text_file(scary_cache_path(out)) == cache);
    CHECK(read_text_file(lexicon_csv_path(out)) == lexicon);
    CHECK(read_text_file(out + "/profiles.csv") == profiles);
    CHECK(read_text_file(fear_model_path(out)) == model);
}

TEST_CASE("an incomplete external-scores file fails cleanly") {
    testutil::TempDir dir("sf_cmd_badscores");
    RunConfig config = base_config(dir);
    cmd_ingest(config);
    cmd_sstop(config);
    write_text_file(dir.file("scores.csv"),
                    "story_id,sentence_index,probability\ns0,0,0.5\n");
    config.set("modes.external_scores", dir.file("scores.csv"));
    // thrown inside the worker threads and rethrown on the caller
    CHECK_THROWS_AS(cmd_modes(config), StateError);
}

TEST_CASE("similarity profile command emits plot-ready bins") {
    testutil::TempDir dir("sf_cmd_sim");
    RunConfig config = base_config(dir);
    cmd_ingest(config);
    cmd_sstop(config);
    cmd_similarity(config);
    const auto rows = read_csv_file(dir.file("out") + "/similarity.csv");
    REQUIRE(rows.size() >= 2);
    CHECK(rows[0] ==
          std::vector<std::string>{"bin_lo", "bin_hi", "mean_sstop", "stderr", "n_words"});
    std::size_t total = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) total += std::stoull(rows[i][4]);
    CHECK(total > 0);
}

TEST_CASE("topics and disease commands run on the cache") {
    testutil::TempDir dir("sf_cmd_topics");
    RunConfig config = base_config(dir);
    config.set("topics.k", "3");
    config.set("topics.iterations", "40");
    cmd_ingest(config);
    cmd_topics(config);
    cmd_disease(config);

    const auto topic_rows = read_csv_file(dir.file("out") + "/topics.csv");
    CHECK(topic_rows[0] == std::vector<std::string>{"topic", "rank", "word", "phi"});
    CHECK(topic_rows.size() == 1 + 3 * 10);

    const auto trend_rows = read_csv_file(dir.file("out") + "/topic_trend.csv");
    CHECK(trend_rows[0] ==
          std::vector<std::string>{"year", "topic", "mean_proportion"});

    const auto disease_rows = read_csv_file(dir.file("out") + "/disease.csv");
    CHECK(disease_rows[0] == std::vector<std::string>{"year", "month", "n_disease",
                                                      "n_total", "proportion"});
}

TEST_CASE("run summaries record inputs and outputs") {
    testutil::TempDir dir("sf_cmd_summary");
    const RunConfig config = base_config(dir);
    cmd_ingest(config);
    const auto summary = read_json(dir.file("out") + "/run_ingest.json");
    CHECK(summary["command"].get<std::string>() == "ingest");
    CHECK(summary["seed"].get<std::uint64_t>() == 4242);
    CHECK(summary["inputs"].size() >= 2);
    CHECK(summary["outputs"].size() >= 2);
    CHECK(summary["wall_seconds"].get<double>() >= 0.0);
}

TEST_CASE("a stale lock blocks new runs") {
    testutil::TempDir dir("sf_cmd_lock");
    const RunConfig config = base_config(dir);
    fs::create_directories(dir.file("out"));
    write_text_file(dir.file("out") + "/.storyfear.lock", "held\n");
    CHECK_THROWS_AS(cmd_ingest(config), LockError);
    fs::remove(dir.file("out") + "/.storyfear.lock");
    cmd_ingest(config);  // lock released, command proceeds
}

TEST_CASE("run_command dispatches and rejects unknown names") {
    testutil::TempDir dir("sf_cmd_dispatch");
    const RunConfig config = base_config(dir);
    run_command(config, "ingest");
    CHECK(fs::exists(scary_cache_path(dir.file("out"))));
    CHECK_THROWS_AS(run_command(config, "frobnicate"), ArgError);
    CHECK(command_names().size() == 9);
}
