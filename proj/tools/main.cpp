// storyfear command-line front end. Links the C API only; all pipeline logic
// lives in the shared library.

#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "storyfear/storyfear.h"

namespace {

struct ConfigDeleter {
    void operator()(sf_config* c) const { sf_config_free(c); }
};
using ConfigPtr = std::unique_ptr<sf_config, ConfigDeleter>;

struct CommandContext {
    std::string command;
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> overrides;
    std::vector<std::string> raw_sets;  // --set key=value
};

// Registers a string option that lands in the run config under `key`.
void map_option(CLI::App* cmd, CommandContext& ctx, const std::string& flag,
                const std::string& key, const std::string& description) {
    cmd->add_option_function<std::string>(
        flag,
        [&ctx, key](const std::string& value) {
            ctx.overrides.emplace_back(key, value);
        },
        description);
}

void map_flag(CLI::App* cmd, CommandContext& ctx, const std::string& flag,
              const std::string& key, const std::string& description,
              const std::string& value = "true") {
    cmd->add_flag_callback(
        flag, [&ctx, key, value] { ctx.overrides.emplace_back(key, value); },
        description);
}

void add_common(CLI::App* cmd, CommandContext& ctx) {
    cmd->add_option("--config", ctx.config_path, "run configuration file");
    map_option(cmd, ctx, "--out-dir", "out_dir", "output directory (default: out)");
    map_option(cmd, ctx, "--seed", "seed", "global random seed");
    map_option(cmd, ctx, "--threads", "threads", "worker threads (default: 1)");
    map_option(cmd, ctx, "--stopwords", "corpus.stopwords",
               "stopword file overriding the bundled list");
    cmd->add_option("--set", ctx.raw_sets, "extra config override, key=value")
        ->expected(-1);
}

int run(const CommandContext& ctx) {
    ConfigPtr config(sf_config_new());
    if (!config) {
        std::fprintf(stderr, "error: out of memory\n");
        return SF_ERR_INTERNAL;
    }
    if (!ctx.config_path.empty()) {
        if (int rc = sf_config_load_file(config.get(), ctx.config_path.c_str())) {
            std::fprintf(stderr, "error: %s\n", sf_last_error());
            return rc;
        }
    }
    for (const auto& [key, value] : ctx.overrides) {
        if (int rc = sf_config_set(config.get(), key.c_str(), value.c_str())) {
            std::fprintf(stderr, "error: %s\n", sf_last_error());
            return rc;
        }
    }
    for (const std::string& kv : ctx.raw_sets) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            std::fprintf(stderr, "error: --set expects key=value, got `%s`\n",
                         kv.c_str());
            return SF_ERR_ARG;
        }
        if (int rc = sf_config_set(config.get(), kv.substr(0, eq).c_str(),
                                   kv.substr(eq + 1).c_str())) {
            std::fprintf(stderr, "error: %s\n", sf_last_error());
            return rc;
        }
    }
    if (int rc = sf_run(config.get(), ctx.command.c_str())) {
        std::fprintf(stderr, "error: %s\n", sf_last_error());
        return rc;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"storyfear: scary-story corpus analytics"};
    app.set_version_flag("--version", sf_version());
    app.require_subcommand(1);

    CommandContext ctx;

    CLI::App* ingest = app.add_subcommand(
        "ingest", "clean and cache both story corpora");
    add_common(ingest, ctx);
    map_option(ingest, ctx, "--scary", "corpus.scary", "scary-genre JSONL corpus");
    map_option(ingest, ctx, "--baseline", "corpus.baseline",
               "baseline-genre JSONL corpus");
    map_option(ingest, ctx, "--min-tokens", "corpus.min_tokens",
               "minimum story length (default: 500)");

    CLI::App* stats = app.add_subcommand(
        "stats", "posting-time histograms from the cached corpus");
    add_common(stats, ctx);
    map_option(stats, ctx, "--genre", "stats.genre", "scary, baseline or both");

    CLI::App* sstop = app.add_subcommand(
        "sstop", "build the SSToP odds-ratio lexicon");
    add_common(sstop, ctx);
    map_option(sstop, ctx, "--min-occurrence", "lexicon.min_occurrence",
               "combined-count threshold (default: 100)");
    map_flag(sstop, ctx, "--per-subreddit", "lexicon.per_subreddit",
             "also score against each baseline subreddit separately");

    CLI::App* similarity = app.add_subcommand(
        "similarity", "SSToP vs distance-to-human profile");
    add_common(similarity, ctx);
    map_option(similarity, ctx, "--embeddings", "embed.path", "word-vector file");
    map_option(similarity, ctx, "--pos", "embed.pos", "POS lexicon (word<TAB>TAGS)");
    map_option(similarity, ctx, "--bins", "similarity.bins",
               "distance bins (default: 20)");
    map_flag(similarity, ctx, "--log-scores", "similarity.log_scores",
             "average log scores instead of raw scores");
    map_flag(similarity, ctx, "--manhattan", "similarity.metric",
             "use Manhattan distance", "manhattan");

    CLI::App* fear_train = app.add_subcommand(
        "fear-train", "train the logistic fear classifier");
    add_common(fear_train, ctx);
    map_option(fear_train, ctx, "--labeled", "fear.labeled",
               "labeled sentences CSV (text,label,source)");
    map_option(fear_train, ctx, "--embeddings", "embed.path", "word-vector file");
    map_option(fear_train, ctx, "--reg", "fear.reg", "l1 or l2 (default: l2)");
    map_option(fear_train, ctx, "--lambda", "fear.lambda",
               "penalty strength, or `auto` for validation grid search");
    map_option(fear_train, ctx, "--epochs", "fear.epochs", "default: 500");
    map_option(fear_train, ctx, "--lr", "fear.lr", "learning rate (default: 0.1)");
    map_option(fear_train, ctx, "--balance", "fear.balance",
               "down, up or none (default: down)");
    map_option(fear_train, ctx, "--aliases", "fear.aliases",
               "per-source fear labels, e.g. crowdflower:fear|worry");

    CLI::App* fear_eval = app.add_subcommand(
        "fear-eval", "evaluate the trained classifier on the test split");
    add_common(fear_eval, ctx);
    map_option(fear_eval, ctx, "--labeled", "fear.labeled", "labeled sentences CSV");
    map_option(fear_eval, ctx, "--embeddings", "embed.path", "word-vector file");
    map_option(fear_eval, ctx, "--aliases", "fear.aliases", "per-source fear labels");

    CLI::App* modes = app.add_subcommand(
        "modes", "decile profiles, SVD story modes and mode histograms");
    add_common(modes, ctx);
    map_option(modes, ctx, "--external-scores", "modes.external_scores",
               "fear scores CSV (story_id,sentence_index,probability)");
    map_option(modes, ctx, "--embeddings", "embed.path",
               "word-vector file (for the built-in scorer)");
    map_option(modes, ctx, "--window", "modes.window",
               "SSToP window width (default: 50)");

    CLI::App* topics = app.add_subcommand(
        "topics", "LDA topics over Porter-stemmed stories");
    add_common(topics, ctx);
    map_option(topics, ctx, "--k", "topics.k", "topic count (default: 10)");
    map_option(topics, ctx, "--alpha", "topics.alpha", "default: 5/k");
    map_option(topics, ctx, "--beta", "topics.beta", "default: 0.01");
    map_option(topics, ctx, "--iterations", "topics.iterations", "default: 1000");
    map_option(topics, ctx, "--lda-seed", "topics.seed", "LDA-specific seed");
    map_option(topics, ctx, "--trend-samples", "topics.trend_samples",
               "average trend proportions over this many Gibbs samples (default: 1)");

    CLI::App* disease = app.add_subcommand(
        "disease", "monthly share of disease-related stories");
    add_common(disease, ctx);
    map_option(disease, ctx, "--stems", "disease.stems",
               "comma-separated stem prefixes (default: lockdown,infect,viru,diseas)");

    CLI11_PARSE(app, argc, argv);

    for (CLI::App* cmd : {ingest, stats, sstop, similarity, fear_train, fear_eval,
                          modes, topics, disease}) {
        if (cmd->parsed()) {
            ctx.command = cmd->get_name();
            break;
        }
    }
    return run(ctx);
}
