#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "embedding.hpp"
#include "text_clean.hpp"

namespace storyfear {

struct LabeledSentence {
    std::string text;
    int label = 0;  // 1 = fear
    std::string source;
};

// Per-source emotion names that map to label 1; every other name maps to 0.
// "0"/"1" pass through regardless. Default for unlisted sources: {"fear"}.
struct LabelAliases {
    std::unordered_map<std::string, std::unordered_set<std::string>> per_source;
    std::unordered_set<std::string> fallback{"fear"};

    bool is_positive(const std::string& label, const std::string& source) const;
};

// Parses `source:name[|name...][;source:...]`, e.g. "crowdflower:fear|worry".
LabelAliases parse_label_aliases(const std::string& config);

// CSV with header text,label,source (any column order). Rows with empty text
// are dropped.
std::vector<LabeledSentence> load_labeled(const std::string& path,
                                          const LabelAliases& aliases = {});

struct DatasetSplit {
    std::vector<LabeledSentence> train;
    std::vector<LabeledSentence> validation;
    std::vector<LabeledSentence> test;
    std::uint64_t seed = 0;
};

// Per-item random assignment: u < .75 train, < .85 validation, < .95 test,
// remainder train (so the expected split is 80/10/10 and the three parts
// partition the input). Deterministic in (seed, input order).
DatasetSplit split_dataset(const std::vector<LabeledSentence>& data,
                           std::uint64_t seed);

enum class BalanceMode { Downsample, Upsample };

// Downsample: majority class sampled without replacement to minority size.
// Upsample: minority class redrawn with replacement to majority size,
// majority kept exactly once. Both classes must be present.
std::vector<LabeledSentence> balance(const std::vector<LabeledSentence>& data,
                                     BalanceMode mode, std::uint64_t seed);

// Mean embedding of the cleaned tokens; zero vector when nothing is in
// vocabulary (oov_flag reports that case).
std::vector<double> featurize(const std::string& sentence,
                              const EmbeddingTable& table,
                              const StopwordSet& stopwords,
                              bool* oov_flag = nullptr);

enum class Regularizer { L1, L2 };

struct FearModel {
    std::vector<double> weights;
    double bias = 0.0;
    Regularizer reg = Regularizer::L2;
    double lambda = 0.0;
};

struct TrainOptions {
    Regularizer reg = Regularizer::L2;
    double lambda = 0.0;
    std::size_t epochs = 500;
    double learning_rate = 0.1;
    std::uint64_t seed = 0;
    double loss_tolerance = 1e-9;  // early stop when the loss change is below
};

struct TrainResult {
    FearModel model;
    std::size_t epochs_run = 0;
    double final_loss = 0.0;
};

// Mean logistic loss plus lambda * penalty (L2: squared norm, L1: absolute
// norm); the bias is never penalized.
double logistic_loss(const std::vector<std::vector<double>>& features,
                     const std::vector<int>& labels,
                     const std::vector<double>& weights, double bias,
                     Regularizer reg, double lambda);

// Analytic gradient of logistic_loss; d_bias is the bias derivative. For L1
// the penalty subgradient sign(w) is used (valid away from zeros).
void logistic_gradient(const std::vector<std::vector<double>>& features,
                       const std::vector<int>& labels,
                       const std::vector<double>& weights, double bias,
                       Regularizer reg, double lambda,
                       std::vector<double>& d_weights, double& d_bias);

// Full-batch gradient descent from zero weights; L1 applies proximal
// soft-thresholding after each step.
TrainResult train_logistic(const std::vector<std::vector<double>>& features,
                           const std::vector<int>& labels,
                           const TrainOptions& opts);

double predict_proba(const FearModel& model, const std::vector<double>& features);

struct EvalReport {
    double accuracy = 0.0;
    double f1_macro = 0.0;
    double roc_auc = 0.0;
    std::size_t tp = 0, fp = 0, tn = 0, fn = 0;  // at threshold 0.5
    std::size_t n = 0;
    double oov_ratio = 0.0;  // sentences featurized to the zero vector
};

EvalReport evaluate(const FearModel& model,
                    const std::vector<LabeledSentence>& test,
                    const EmbeddingTable& table, const StopwordSet& stopwords);

EvalReport evaluate_scores(const std::vector<double>& probabilities,
                           const std::vector<int>& labels);

// Model persistence: JSON {dim, weights, bias, reg, lambda}.
std::string model_to_json(const FearModel& model);
FearModel model_from_json(const std::string& text);
void save_model(const std::string& path, const FearModel& model);
FearModel load_model(const std::string& path);

}  // namespace storyfear
