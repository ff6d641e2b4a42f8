#include "commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include <fcntl.h>
#include <unistd.h>

#include <json.hpp>

#include "corpus.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "fear.hpp"
#include "format.hpp"
#include "io_util.hpp"
#include "lexicon.hpp"
#include "modes.hpp"
#include "parallel.hpp"
#include "porter.hpp"
#include "scorer.hpp"
#include "topics.hpp"

namespace storyfear {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Advisory lock: refuses to start while another command writes the same
// output directory. A crash can leave the file behind; deleting it is safe.
class OutputLock {
public:
    explicit OutputLock(const std::string& out_dir)
        : path_(fs::path(out_dir) / ".storyfear.lock") {
        std::error_code ec;
        fs::create_directories(out_dir, ec);
        if (ec) throw IoError("cannot create output directory: " + out_dir);
        const int fd = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
        if (fd < 0) {
            throw LockError("output directory is locked (" + path_.string() +
                            " exists); remove the file if no other run is active");
        }
        ::close(fd);
    }
    ~OutputLock() {
        std::error_code ec;
        fs::remove(path_, ec);
    }
    OutputLock(const OutputLock&) = delete;
    OutputLock& operator=(const OutputLock&) = delete;

private:
    fs::path path_;
};

class RunSummary {
public:
    RunSummary(const RunConfig& config, std::string command)
        : config_(config), command_(std::move(command)),
          start_(std::chrono::steady_clock::now()) {}

    void input(const std::string& path) { inputs_[path] = file_checksum(path); }
    void output(const std::string& path) { outputs_.push_back(path); }
    void param(const std::string& key, const json& value) { params_[key] = value; }

    void write() {
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                .count();
        json j;
        j["command"] = command_;
        j["seed"] = config_.seed();
        j["parameters"] = params_;
        j["inputs"] = inputs_;
        j["outputs"] = outputs_;
        j["wall_seconds"] = wall;
        const std::string path =
            (fs::path(config_.out_dir()) / ("run_" + command_ + ".json")).string();
        write_text_file(path, j.dump(2) + "\n");
    }

private:
    const RunConfig& config_;
    std::string command_;
    std::chrono::steady_clock::time_point start_;
    std::map<std::string, std::string> inputs_;
    std::vector<std::string> outputs_;
    json params_ = json::object();
};

std::string out_path(const RunConfig& config, const std::string& name) {
    return (fs::path(config.out_dir()) / name).string();
}

StopwordSet stopwords_for(const RunConfig& config, RunSummary* summary) {
    if (auto path = config.get("corpus.stopwords"); path && !path->empty()) {
        if (summary) summary->input(*path);
        return load_stopwords(*path);
    }
    return default_stopwords();
}

std::vector<Story> read_cache_or_fail(const std::string& path,
                                      const std::string& prerequisite) {
    if (!fs::exists(path)) {
        throw StateError("missing " + path + "; run `" + prerequisite + "` first");
    }
    return read_story_cache(path);
}

EmbeddingTable embeddings_for(const RunConfig& config, RunSummary* summary) {
    const std::string path = config.require_path("embed.path");
    if (summary) summary->input(path);
    return load_embeddings(path);
}

std::string histogram_csv(const std::map<int, std::size_t>& hist) {
    std::string out = "key,count\n";
    for (const auto& [key, count] : hist) {
        out += std::to_string(key) + "," + std::to_string(count) + "\n";
    }
    return out;
}

std::string histogram_csv(const std::map<unsigned, std::size_t>& hist) {
    std::map<int, std::size_t> copy;
    for (const auto& [key, count] : hist) copy[static_cast<int>(key)] = count;
    return histogram_csv(copy);
}

}  // namespace

std::string scary_cache_path(const std::string& out_dir) {
    return (fs::path(out_dir) / "corpus_scary.jsonl").string();
}
std::string baseline_cache_path(const std::string& out_dir) {
    return (fs::path(out_dir) / "corpus_baseline.jsonl").string();
}
std::string lexicon_csv_path(const std::string& out_dir) {
    return (fs::path(out_dir) / "lexicon.csv").string();
}
std::string fear_model_path(const std::string& out_dir) {
    return (fs::path(out_dir) / "fear_model.json").string();
}

void cmd_ingest(const RunConfig& config) {
    const std::string scary_path = config.require_path("corpus.scary");
    const std::string baseline_path = config.require_path("corpus.baseline");
    OutputLock lock(config.out_dir());
    RunSummary summary(config, "ingest");
    summary.input(scary_path);
    summary.input(baseline_path);
    const StopwordSet stopwords = stopwords_for(config, &summary);
    const std::size_t min_tokens = config.get_uint("corpus.min_tokens", 500);
    summary.param("min_tokens", min_tokens);

    json manifest;
    for (const auto& [genre, in_path, cache_path] :
         {std::tuple{Genre::Scary, scary_path, scary_cache_path(config.out_dir())},
          std::tuple{Genre::Baseline, baseline_path,
                     baseline_cache_path(config.out_dir())}}) {
        const LoadResult loaded = load_corpus(in_path, genre);
        std::vector<Story> cleaned(loaded.stories.size());
        parallel_for(loaded.stories.size(), config.threads(), [&](std::size_t i) {
            cleaned[i] = clean_story(loaded.stories[i], stopwords);
        });
        const std::size_t before = cleaned.size();
        std::vector<Story> kept = filter_min_length(std::move(cleaned), min_tokens);
        write_story_cache(cache_path, kept);
        summary.output(cache_path);

        std::size_t tokens = 0;
        for (const Story& s : kept) tokens += s.tokens.size();
        json entry;
        entry["input"] = in_path;
        entry["stories"] = kept.size();
        entry["dropped_short"] = before - kept.size();
        entry["skipped_malformed"] = loaded.skipped;
        entry["tokens"] = tokens;
        entry["checksum"] = file_checksum(cache_path);
        manifest[genre_name(genre)] = entry;
    }
    manifest["min_tokens"] = min_tokens;
    const std::string manifest_path = out_path(config, "ingest_manifest.json");
    write_text_file(manifest_path, manifest.dump(2) + "\n");
    summary.output(manifest_path);
    summary.write();
}

void cmd_stats(const RunConfig& config) {
    OutputLock lock(config.out_dir());
    RunSummary summary(config, "stats");
    const std::string genre = config.get_string("stats.genre", "scary");
    summary.param("genre", genre);

    std::vector<Story> stories;
    if (genre == "scary" || genre == "both") {
        const std::string path = scary_cache_path(config.out_dir());
        auto part = read_cache_or_fail(path, "ingest");
        summary.input(path);
        stories.insert(stories.end(), part.begin(), part.end());
    }
    if (genre == "baseline" || genre == "both") {
        const std::string path = baseline_cache_path(config.out_dir());
        auto part = read_cache_or_fail(path, "ingest");
        summary.input(path);
        stories.insert(stories.end(), part.begin(), part.end());
    }
    if (genre != "scary" && genre != "baseline" && genre != "both") {
        throw ArgError("stats.genre must be scary, baseline or both");
    }

    const CorpusStats stats = compute_stats(stories);
    const std::string years_path = out_path(config, "stats_years.csv");
    const std::string hours_path = out_path(config, "stats_hours.csv");
    write_text_file(years_path, histogram_csv(stats.stories_per_year));
    write_text_file(hours_path, histogram_csv(stats.stories_per_hour_gmt));
    summary.output(years_path);
    summary.output(hours_path);
    summary.param("total_stories", stats.total_stories);
    summary.param("total_tokens", stats.total_tokens);
    summary.write();
}

void cmd_sstop(const RunConfig& config) {
    OutputLock lock(config.out_dir());
    RunSummary summary(config, "sstop");
    const std::string scary_path = scary_cache_path(config.out_dir());
    const std::string baseline_path = baseline_cache_path(config.out_dir());
    const std::vector<Story> scary = read_cache_or_fail(scary_path, "ingest");
    const std::vector<Story> baseline = read_cache_or_fail(baseline_path, "ingest");
    summary.input(scary_path);
    summary.input(baseline_path);

    const std::uint64_t min_occurrence = config.get_uint("lexicon.min_occurrence", 100);
    summary.param("min_occurrence", min_occurrence);

    const GenreCounts scary_counts = count_tokens(scary);
    const GenreCounts baseline_counts = count_tokens(baseline);
    const SstopLexicon lexicon =
        compute_sstop(scary_counts, baseline_counts, min_occurrence);
    const std::string lexicon_path = lexicon_csv_path(config.out_dir());
    write_text_file(lexicon_path, lexicon_to_csv(lexicon));
    summary.output(lexicon_path);
    summary.param("entries", lexicon.size());

    // Optional robustness pass: one lexicon per baseline subreddit.
    if (config.get_bool("lexicon.per_subreddit", false)) {
        std::map<std::string, std::vector<Story>> by_subreddit;
        for (const Story& s : baseline) by_subreddit[s.subreddit].push_back(s);
        for (const auto& [subreddit, stories] : by_subreddit) {
            const SstopLexicon sub_lexicon =
                compute_sstop(scary_counts, count_tokens(stories), min_occurrence);
            const std::string path =
                out_path(config, "lexicon_" + subreddit + ".csv");
            write_text_file(path, lexicon_to_csv(sub_lexicon));
            summary.output(path);
        }
    }
    summary.write();
}

void cmd_similarity(const RunConfig& config) {
    OutputLock lock(config.out_dir());
    RunSummary summary(config, "similarity");
    const std::string lexicon_path = lexicon_csv_path(config.out_dir());
    if (!fs::exists(lexicon_path)) {
        throw StateError("missing " + lexicon_path + "; run `sstop` first");
    }
    summary.input(lexicon_path);
    const SstopLexicon lexicon = load_lexicon_csv(lexicon_path);
    const EmbeddingTable table = embeddings_for(config, &summary);
    const std::string pos_path = config.require_path("embed.pos");
    summary.input(pos_path);
    const PosLexicon pos = load_pos_lexicon(pos_path);

    SimilarityOptions opts;
    opts.n_bins = config.get_uint("similarity.bins", 20);
    opts.log_scores = config.get_bool("similarity.log_scores", false);
    const std::string metric = config.get_string("similarity.metric", "euclidean");
    if (metric == "manhattan") opts.metric = DistanceMetric::Manhattan;
    else if (metric != "euclidean") {
        throw ArgError("similarity.metric must be euclidean or manhattan");
    }
    summary.param("bins", opts.n_bins);
    summary.param("log_scores", opts.log_scores);
    summary.param("metric", metric);

    const SimilarityProfile profile = similarity_profile(lexicon, table, pos, opts);
    const std::string csv_path = out_path(config, "similarity.csv");
    write_text_file(csv_path, similarity_profile_to_csv(profile));
    summary.output(csv_path);
    summary.param("qualifying_words", profile.n_words);
    summary.write();
}

namespace {

struct FearData {
    DatasetSplit split;
    std::vector<std::vector<double>> train_features;
    std::vector<int> train_labels;
    std::size_t train_oov = 0;
};

FearData prepare_fear_training(const RunConfig& config, const EmbeddingTable& table,
                               const StopwordSet& stopwords, RunSummary* summary) {
    const std::string labeled_path = config.require_path("fear.labeled");
    if (summary) summary->input(labeled_path);
    const LabelAliases aliases =
        parse_label_aliases(config.get_string("fear.aliases", ""));
    const std::vector<LabeledSentence> data = load_labeled(labeled_path, aliases);
    if (data.empty()) throw ArgError("fear.labeled contains no usable rows");

    FearData out;
    out.split = split_dataset(data, config.get_uint("fear.seed", config.seed()));

    const std::string balance_mode = config.get_string("fear.balance", "down");
    std::vector<LabeledSentence> train = out.split.train;
    if (balance_mode == "down") {
        train = balance(train, BalanceMode::Downsample,
                        config.get_uint("fear.seed", config.seed()));
    } else if (balance_mode == "up") {
        train = balance(train, BalanceMode::Upsample,
                        config.get_uint("fear.seed", config.seed()));
    } else if (balance_mode != "none") {
        throw ArgError("fear.balance must be down, up or none");
    }

    out.train_features.resize(train.size());
    out.train_labels.resize(train.size());
    std::vector<unsigned char> oov(train.size(), 0);
    parallel_for(train.size(), config.threads(), [&](std::size_t i) {
        bool flag = false;
        out.train_features[i] = featurize(train[i].text, table, stopwords, &flag);
        out.train_labels[i] = train[i].label;
        oov[i] = flag ? 1 : 0;
    });
    for (unsigned char f : oov) out.train_oov += f;
    return out;
}

std::vector<double> grid_lambdas() { return {1e-5, 1e-4, 1e-3, 1e-2, 1e-1}; }

}  // namespace

void cmd_fear_train(const RunConfig& config) {
    OutputLock lock(config.out_dir());
    RunSummary summary(config, "fear-train");
    const EmbeddingTable table = embeddings_for(config, &summary);
    const StopwordSet stopwords = stopwords_for(config, &summary);
    FearData data = prepare_fear_training(config, table, stopwords, &summary);

    TrainOptions opts;
    const std::string reg = config.get_string("fear.reg", "l2");
    if (reg == "l1") opts.reg = Regularizer::L1;
    else if (reg == "l2") opts.reg = Regularizer::L2;
    else throw ArgError("fear.reg must be l1 or l2");
    opts.epochs = config.get_uint("fear.epochs", 500);
    opts.learning_rate = config.get_double("fear.lr", 0.1);
    opts.seed = config.get_uint("fear.seed", config.seed());

    json lambda_report = json::array();
    const std::string lambda_setting = config.get_string("fear.lambda", "auto");
    double chosen_lambda = 0.0;
    if (lambda_setting == "auto") {
        // Validation picks lambda from a fixed grid by AUC.
        std::vector<double> val_probs;
        std::vector<int> val_labels;
        double best_auc = -1.0;
        for (double lambda : grid_lambdas()) {
            TrainOptions candidate = opts;
            candidate.lambda = lambda;
            const TrainResult trained =
                train_logistic(data.train_features, data.train_labels, candidate);
            val_probs.clear();
            val_labels.clear();
            for (const LabeledSentence& s : data.split.validation) {
                val_probs.push_back(predict_proba(
                    trained.model, featurize(s.text, table, stopwords)));
                val_labels.push_back(s.label);
            }
            if (val_labels.empty()) {
                throw ArgError(
                    "fear.lambda=auto needs a non-empty validation split; set a "
                    "numeric fear.lambda instead");
            }
            const double auc = roc_auc(val_probs, val_labels);
            lambda_report.push_back({{"lambda", lambda}, {"val_auc", auc}});
            if (auc > best_auc) {
                best_auc = auc;
                chosen_lambda = lambda;
            }
        }
    } else {
        chosen_lambda = config.get_double("fear.lambda", 1e-4);
        if (chosen_lambda < 0.0) throw ArgError("fear.lambda must be >= 0");
    }
    opts.lambda = chosen_lambda;

    const TrainResult result =
        train_logistic(data.train_features, data.train_labels, opts);
    const std::string model_path = fear_model_path(config.out_dir());
    save_model(model_path, result.model);
    summary.output(model_path);

    json train_summary;
    train_summary["reg"] = reg;
    train_summary["lambda"] = chosen_lambda;
    train_summary["lambda_grid"] = lambda_report;
    train_summary["epochs_run"] = result.epochs_run;
    train_summary["final_loss"] = result.final_loss;
    train_summary["train_sentences"] = data.train_features.size();
    train_summary["train_oov"] = data.train_oov;
    train_summary["validation_sentences"] = data.split.validation.size();
    train_summary["test_sentences"] = data.split.test.size();
    const std::string summary_path = out_path(config, "fear_train_summary.json");
    write_text_file(summary_path, train_summary.dump(2) + "\n");
    summary.output(summary_path);
    summary.param("reg", reg);
    summary.param("lambda", chosen_lambda);
    summary.param("epochs", opts.epochs);
    summary.param("lr", opts.learning_rate);
    summary.write();
}

void cmd_fear_eval(const RunConfig& config) {
    OutputLock lock(config.out_dir());
    RunSummary summary(config, "fear-eval");
    const std::string model_path = fear_model_path(config.out_dir());
    if (!fs::exists(model_path)) {
        throw StateError("missing " + model_path + "; run `fear-train` first");
    }
    summary.input(model_path);
    const FearModel model = load_model(model_path);
    const EmbeddingTable table = embeddings_for(config, &summary);
    const StopwordSet stopwords = stopwords_for(config, &summary);

    const std::string labeled_path = config.require_path("fear.labeled");
    summary.input(labeled_path);
    const LabelAliases aliases =
        parse_label_aliases(config.get_string("fear.aliases", ""));
    const std::vector<LabeledSentence> data = load_labeled(labeled_path, aliases);
    const DatasetSplit split =
        split_dataset(data, config.get_uint("fear.seed", config.seed()));
    if (split.test.empty()) throw ArgError("test split is empty");

    // Test set keeps its natural class distribution.
    const EvalReport report = evaluate(model, split.test, table, stopwords);
    json j;
    j["accuracy"] = report.accuracy;
    j["f1_macro"] = report.f1_macro;
    j["roc_auc"] = report.roc_auc;
    j["confusion"] = {{"tp", report.tp}, {"fp", report.fp},
                      {"tn", report.tn}, {"fn", report.fn}};
    j["n"] = report.n;
    j["oov_ratio"] = report.oov_ratio;
    const std::string eval_path = out_path(config, "fear_eval.json");
    write_text_file(eval_path, j.dump(2) + "\n");
    summary.output(eval_path);
    summary.write();
}

void cmd_modes(const RunConfig& config) {
    OutputLock lock(config.out_dir());
    RunSummary summary(config, "modes");
    const std::string cache_path = scary_cache_path(config.out_dir());
    const std::vector<Story> stories = read_cache_or_fail(cache_path, "ingest");
    summary.input(cache_path);
    const std::string lexicon_path = lexicon_csv_path(config.out_dir());
    if (!fs::exists(lexicon_path)) {
        throw StateError("missing " + lexicon_path + "; run `sstop` first");
    }
    summary.input(lexicon_path);
    const SstopLexicon lexicon = load_lexicon_csv(lexicon_path);

    // Fear scores come from the trained model or from an external score file.
    std::unique_ptr<FearScorer> scorer;
    EmbeddingTable table;
    if (auto external = config.get("modes.external_scores");
        external && !external->empty()) {
        summary.input(*external);
        scorer = std::make_unique<ExternalScorer>(*external);
        summary.param("scorer", "external");
    } else if (fs::exists(fear_model_path(config.out_dir()))) {
        summary.input(fear_model_path(config.out_dir()));
        table = embeddings_for(config, &summary);
        scorer = std::make_unique<LogisticScorer>(
            load_model(fear_model_path(config.out_dir())), &table);
        summary.param("scorer", "logistic");
    } else {
        throw StateError(
            "no fear scorer available: run `fear-train` first or set "
            "modes.external_scores");
    }

    if (stories.size() < kProfilePoints) {
        throw ArgError("modes needs at least 10 stories, have " +
                       std::to_string(stories.size()));
    }
    const std::size_t window = config.get_uint("modes.window", 50);
    summary.param("window", window);

    std::vector<StoryProfile> fear_profiles(stories.size());
    std::vector<StoryProfile> sstop_profiles(stories.size());
    parallel_for(stories.size(), config.threads(), [&](std::size_t i) {
        fear_profiles[i] = sample_fear_profile(stories[i], *scorer);
        sstop_profiles[i] = sample_sstop_profile(stories[i], lexicon, window);
    });

    std::vector<std::string> ids;
    ids.reserve(stories.size());
    for (const Story& s : stories) ids.push_back(s.id);

    const ModeDecomposition fear_modes =
        svd_decompose(profiles_to_matrix(fear_profiles), ids);
    const ModeDecomposition sstop_modes =
        svd_decompose(profiles_to_matrix(sstop_profiles), ids);
    const std::vector<ModeAssignment> fear_assignments = assign_modes(fear_modes);
    const std::vector<ModeAssignment> sstop_assignments = assign_modes(sstop_modes);

    std::vector<StoryProfile> all_profiles = fear_profiles;
    all_profiles.insert(all_profiles.end(), sstop_profiles.begin(),
                        sstop_profiles.end());

    const struct {
        std::string path;
        std::string content;
    } files[] = {
        {out_path(config, "profiles.csv"), profiles_to_csv(all_profiles)},
        {out_path(config, "modes_fear_u.csv"), modes_to_csv(fear_modes)},
        {out_path(config, "modes_sstop_u.csv"), modes_to_csv(sstop_modes)},
        {out_path(config, "modes_fear_coeffs.csv"),
         assignments_to_csv(fear_assignments)},
        {out_path(config, "modes_sstop_coeffs.csv"),
         assignments_to_csv(sstop_assignments)},
        {out_path(config, "modes_summary.json"),
         summary_to_json(summarize_modes(fear_assignments, sstop_assignments))},
    };
    for (const auto& f : files) {
        write_text_file(f.path, f.content);
        summary.output(f.path);
    }
    summary.write();
}

void cmd_topics(const RunConfig& config) {
    OutputLock lock(config.out_dir());
    RunSummary summary(config, "topics");
    const std::string cache_path = scary_cache_path(config.out_dir());
    const std::vector<Story> stories = read_cache_or_fail(cache_path, "ingest");
    summary.input(cache_path);
    if (stories.empty()) throw ArgError("topics: story cache is empty");

    LdaOptions opts;
    opts.k = config.get_uint("topics.k", 10);
    opts.alpha = config.get_double("topics.alpha", 0.0);
    opts.beta = config.get_double("topics.beta", 0.01);
    opts.iterations = config.get_uint("topics.iterations", 1000);
    opts.seed = config.get_uint("topics.seed", config.seed());
    summary.param("k", opts.k);
    summary.param("alpha", opts.alpha > 0.0 ? opts.alpha : 5.0 / static_cast<double>(opts.k));
    summary.param("beta", opts.beta);
    summary.param("iterations", opts.iterations);

    std::vector<std::vector<std::string>> docs(stories.size());
    parallel_for(stories.size(), config.threads(), [&](std::size_t i) {
        docs[i].reserve(stories[i].tokens.size());
        for (const std::string& tok : stories[i].tokens) {
            docs[i].push_back(porter_stem(tok));
        }
    });

    TopicModel model = lda_fit(docs, opts);
    const std::size_t trend_samples = config.get_uint("topics.trend_samples", 1);
    summary.param("trend_samples", trend_samples);
    const TopicTrend trend = topic_trend_sampled(model, stories, trend_samples);

    const std::string topics_path = out_path(config, "topics.csv");
    const std::string trend_path = out_path(config, "topic_trend.csv");
    write_text_file(topics_path, topics_to_csv(model));
    write_text_file(trend_path, topic_trend_to_csv(trend));
    summary.output(topics_path);
    summary.output(trend_path);
    summary.write();
}

void cmd_disease(const RunConfig& config) {
    OutputLock lock(config.out_dir());
    RunSummary summary(config, "disease");
    const std::string cache_path = scary_cache_path(config.out_dir());
    const std::vector<Story> stories = read_cache_or_fail(cache_path, "ingest");
    summary.input(cache_path);

    std::vector<std::string> stems;
    const std::string setting =
        config.get_string("disease.stems", "lockdown,infect,viru,diseas");
    std::size_t start = 0;
    while (start <= setting.size()) {
        std::size_t comma = setting.find(',', start);
        if (comma == std::string::npos) comma = setting.size();
        const std::string stem = setting.substr(start, comma - start);
        if (!stem.empty()) stems.push_back(stem);
        start = comma + 1;
    }
    if (stems.empty()) throw ArgError("disease.stems is empty");
    summary.param("stems", stems);

    const std::vector<DiseaseMonth> trend = disease_trend(stories, stems);
    const std::string path = out_path(config, "disease.csv");
    write_text_file(path, disease_trend_to_csv(trend));
    summary.output(path);
    summary.write();
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {
        "ingest", "stats",      "sstop",  "similarity", "fear-train",
        "fear-eval", "modes",   "topics", "disease",
    };
    return names;
}

void run_command(const RunConfig& config, const std::string& name) {
    if (name == "ingest") return cmd_ingest(config);
    if (name == "stats") return cmd_stats(config);
    if (name == "sstop") return cmd_sstop(config);
    if (name == "similarity") return cmd_similarity(config);
    if (name == "fear-train") return cmd_fear_train(config);
    if (name == "fear-eval") return cmd_fear_eval(config);
    if (name == "modes") return cmd_modes(config);
    if (name == "topics") return cmd_topics(config);
    if (name == "disease") return cmd_disease(config);
    throw ArgError("unknown command: " + name);
}

}  // namespace storyfear
