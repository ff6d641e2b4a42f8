#include "fear.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "csv.hpp"
#include "error.hpp"
#include "io_util.hpp"
#include "metrics.hpp"
#include "rng.hpp"

namespace storyfear {

using nlohmann::json;

namespace {

std::string lower_trim(const std::string& s) {
    std::size_t lo = 0, hi = s.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
    std::string out = s.substr(lo, hi - lo);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

}  // namespace

bool LabelAliases::is_positive(const std::string& label,
                               const std::string& source) const {
    const std::string name = lower_trim(label);
    if (name == "1") return true;
    if (name == "0") return false;
    auto it = per_source.find(lower_trim(source));
    const auto& set = it == per_source.end() ? fallback : it->second;
    return set.contains(name);
}

LabelAliases parse_label_aliases(const std::string& config) {
    LabelAliases aliases;
    std::size_t start = 0;
    while (start < config.size()) {
        std::size_t semi = config.find(';', start);
        if (semi == std::string::npos) semi = config.size();
        const std::string part = config.substr(start, semi - start);
        start = semi + 1;
        if (part.empty()) continue;
        const std::size_t colon = part.find(':');
        if (colon == std::string::npos) {
            throw FormatError("label alias entry needs `source:name[|name...]`: " + part);
        }
        std::unordered_set<std::string> names;
        std::size_t p = colon + 1;
        while (p <= part.size()) {
            std::size_t bar = part.find('|', p);
            if (bar == std::string::npos) bar = part.size();
            const std::string name = lower_trim(part.substr(p, bar - p));
            if (!name.empty()) names.insert(name);
            p = bar + 1;
        }
        if (names.empty()) {
            throw FormatError("label alias entry has no names: " + part);
        }
        aliases.per_source[lower_trim(part.substr(0, colon))] = std::move(names);
    }
    return aliases;
}

std::vector<LabeledSentence> load_labeled(const std::string& path,
                                          const LabelAliases& aliases) {
    const auto rows = read_csv_file(path);
    if (rows.empty()) throw FormatError(path + ": empty labeled-sentence file");
    const auto& header = rows[0];
    auto col = [&](const char* name) -> std::size_t {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (lower_trim(header[i]) == name) return i;
        }
        throw FormatError(path + ": missing column `" + name + "`");
    };
    const std::size_t text_col = col("text");
    const std::size_t label_col = col("label");
    const std::size_t source_col = col("source");

    std::vector<LabeledSentence> data;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const std::size_t need = std::max({text_col, label_col, source_col});
        if (row.size() <= need) {
            throw FormatError(path + ": row " + std::to_string(i + 1) +
                              " has too few fields");
        }
        if (row[text_col].empty()) continue;
        LabeledSentence s;
        s.text = row[text_col];
        s.source = row[source_col];
        s.label = aliases.is_positive(row[label_col], row[source_col]) ? 1 : 0;
        data.push_back(std::move(s));
    }
    return data;
}

DatasetSplit split_dataset(const std::vector<LabeledSentence>& data,
                           std::uint64_t seed) {
    DatasetSplit split;
    split.seed = seed;
    Rng rng(seed);
    for (const LabeledSentence& s : data) {
        const double u = rng.next_double();
        if (u < 0.75) split.train.push_back(s);
        else if (u < 0.85) split.validation.push_back(s);
        else if (u < 0.95) split.test.push_back(s);
        else split.train.push_back(s);
    }
    return split;
}

std::vector<LabeledSentence> balance(const std::vector<LabeledSentence>& data,
                                     BalanceMode mode, std::uint64_t seed) {
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < data.size(); ++i) {
        (data[i].label != 0 ? pos : neg).push_back(i);
    }
    if (pos.empty() || neg.empty()) {
        throw ArgError("balance: both classes must be present");
    }
    auto& minority = pos.size() <= neg.size() ? pos : neg;
    auto& majority = pos.size() <= neg.size() ? neg : pos;

    Rng rng(seed);
    std::vector<std::size_t> keep;
    if (mode == BalanceMode::Downsample) {
        // Partial Fisher-Yates picks minority.size() majority rows without
        // replacement; original order is restored afterwards.
        std::vector<std::size_t> pool = majority;
        for (std::size_t i = 0; i < minority.size(); ++i) {
            const std::size_t j = i + rng.next_below(pool.size() - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(minority.size());
        keep = minority;
        keep.insert(keep.end(), pool.begin(), pool.end());
        std::sort(keep.begin(), keep.end());
        std::vector<LabeledSentence> out;
        out.reserve(keep.size());
        for (std::size_t i : keep) out.push_back(data[i]);
        return out;
    }

    // Upsample: every original row once, in order, then redraws with
    // replacement until the minority matches the majority count.
    std::vector<LabeledSentence> out;
    out.reserve(2 * majority.size());
    std::vector<LabeledSentence> resampled;
    resampled.reserve(majority.size());
    for (std::size_t i = 0; i < majority.size(); ++i) {
        resampled.push_back(data[minority[rng.next_below(minority.size())]]);
    }
    for (std::size_t i : majority) out.push_back(data[i]);
    out.insert(out.end(), resampled.begin(), resampled.end());
    return out;
}

std::vector<double> featurize(const std::string& sentence,
                              const EmbeddingTable& table,
                              const StopwordSet& stopwords, bool* oov_flag) {
    std::vector<double> mean(table.dim(), 0.0);
    std::size_t found = 0;
    for (const std::string& tok : clean_text(sentence, stopwords).tokens) {
        if (const double* vec = table.find(tok)) {
            for (std::size_t d = 0; d < table.dim(); ++d) mean[d] += vec[d];
            ++found;
        }
    }
    if (oov_flag) *oov_flag = found == 0;
    if (found > 0) {
        for (double& v : mean) v /= static_cast<double>(found);
    }
    return mean;
}

double logistic_loss(const std::vector<std::vector<double>>& features,
                     const std::vector<int>& labels,
                     const std::vector<double>& weights, double bias,
                     Regularizer reg, double lambda) {
    const std::size_t n = features.size();
    double loss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double z = bias;
        for (std::size_t d = 0; d < weights.size(); ++d) {
            z += weights[d] * features[i][d];
        }
        // max(z,0) - z*y + log(1 + exp(-|z|)) is the stable cross-entropy
        loss += std::max(z, 0.0) - z * static_cast<double>(labels[i]) +
                std::log1p(std::exp(-std::fabs(z)));
    }
    loss /= static_cast<double>(n);
    double penalty = 0.0;
    for (double w : weights) {
        penalty += reg == Regularizer::L2 ? w * w : std::fabs(w);
    }
    return loss + lambda * penalty;
}

void logistic_gradient(const std::vector<std::vector<double>>& features,
                       const std::vector<int>& labels,
                       const std::vector<double>& weights, double bias,
                       Regularizer reg, double lambda,
                       std::vector<double>& d_weights, double& d_bias) {
    const std::size_t n = features.size();
    d_weights.assign(weights.size(), 0.0);
    d_bias = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double z = bias;
        for (std::size_t d = 0; d < weights.size(); ++d) {
            z += weights[d] * features[i][d];
        }
        const double err = sigmoid(z) - static_cast<double>(labels[i]);
        for (std::size_t d = 0; d < weights.size(); ++d) {
            d_weights[d] += err * features[i][d];
        }
        d_bias += err;
    }
    for (double& g : d_weights) g /= static_cast<double>(n);
    d_bias /= static_cast<double>(n);
    for (std::size_t d = 0; d < weights.size(); ++d) {
        if (reg == Regularizer::L2) {
            d_weights[d] += 2.0 * lambda * weights[d];
        } else if (weights[d] > 0.0) {
            d_weights[d] += lambda;
        } else if (weights[d] < 0.0) {
            d_weights[d] -= lambda;
        }
    }
}

TrainResult train_logistic(const std::vector<std::vector<double>>& features,
                           const std::vector<int>& labels,
                           const TrainOptions& opts) {
    if (features.empty()) throw ArgError("train_logistic: empty training set");
    if (features.size() != labels.size()) {
        throw ArgError("train_logistic: features/labels length mismatch");
    }
    if (opts.lambda < 0.0) throw ArgError("train_logistic: lambda must be >= 0");
    const std::size_t dim = features[0].size();
    for (const auto& row : features) {
        if (row.size() != dim) throw ArgError("train_logistic: ragged feature rows");
    }

    TrainResult result;
    result.model.reg = opts.reg;
    result.model.lambda = opts.lambda;
    result.model.weights.assign(dim, 0.0);
    result.model.bias = 0.0;

    std::vector<double>& w = result.model.weights;
    double& b = result.model.bias;
    std::vector<double> grad(dim, 0.0);
    double prev_loss = std::numeric_limits<double>::infinity();

    for (std::size_t epoch = 0; epoch < opts.epochs; ++epoch) {
        double gb = 0.0;
        // For L1 the data gradient is applied first and the penalty enters
        // through the proximal soft-threshold below.
        logistic_gradient(features, labels, w, b,
                          opts.reg == Regularizer::L1 ? Regularizer::L2 : opts.reg,
                          opts.reg == Regularizer::L1 ? 0.0 : opts.lambda, grad, gb);
        for (std::size_t d = 0; d < dim; ++d) w[d] -= opts.learning_rate * grad[d];
        b -= opts.learning_rate * gb;
        if (opts.reg == Regularizer::L1) {
            const double threshold = opts.learning_rate * opts.lambda;
            for (double& wd : w) {
                if (wd > threshold) wd -= threshold;
                else if (wd < -threshold) wd += threshold;
                else wd = 0.0;
            }
        }
        const double loss = logistic_loss(features, labels, w, b, opts.reg, opts.lambda);
        if (!std::isfinite(loss)) {
            throw TrainError("train_logistic: non-finite loss at epoch " +
                             std::to_string(epoch + 1) + " (learning rate too high?)");
        }
        result.epochs_run = epoch + 1;
        result.final_loss = loss;
        if (std::fabs(prev_loss - loss) < opts.loss_tolerance) break;
        prev_loss = loss;
    }
    return result;
}

double predict_proba(const FearModel& model, const std::vector<double>& features) {
    if (features.size() != model.weights.size()) {
        throw ArgError("predict_proba: feature dimension mismatch");
    }
    double z = model.bias;
    for (std::size_t d = 0; d < features.size(); ++d) {
        z += model.weights[d] * features[d];
    }
    return sigmoid(z);
}

EvalReport evaluate_scores(const std::vector<double>& probabilities,
                           const std::vector<int>& labels) {
    if (probabilities.size() != labels.size() || labels.empty()) {
        throw ArgError("evaluate: scores/labels mismatch or empty");
    }
    EvalReport report;
    report.n = labels.size();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const bool predicted = probabilities[i] >= 0.5;
        if (predicted && labels[i] == 1) ++report.tp;
        else if (predicted && labels[i] == 0) ++report.fp;
        else if (!predicted && labels[i] == 0) ++report.tn;
        else ++report.fn;
    }
    report.accuracy = static_cast<double>(report.tp + report.tn) /
                      static_cast<double>(report.n);

    auto f1 = [](double tp, double fp, double fn) {
        const double denom = 2.0 * tp + fp + fn;
        return denom == 0.0 ? 0.0 : 2.0 * tp / denom;
    };
    const double f1_pos = f1(static_cast<double>(report.tp),
                             static_cast<double>(report.fp),
                             static_cast<double>(report.fn));
    const double f1_neg = f1(static_cast<double>(report.tn),
                             static_cast<double>(report.fn),
                             static_cast<double>(report.fp));
    report.f1_macro = (f1_pos + f1_neg) / 2.0;
    report.roc_auc = roc_auc(probabilities, labels);
    return report;
}

EvalReport evaluate(const FearModel& model,
                    const std::vector<LabeledSentence>& test,
                    const EmbeddingTable& table, const StopwordSet& stopwords) {
    if (test.empty()) throw ArgError("evaluate: empty test set");
    std::vector<double> probs;
    std::vector<int> labels;
    probs.reserve(test.size());
    labels.reserve(test.size());
    std::size_t oov = 0;
    for (const LabeledSentence& s : test) {
        bool oov_flag = false;
        probs.push_back(predict_proba(model, featurize(s.text, table, stopwords, &oov_flag)));
        labels.push_back(s.label);
        if (oov_flag) ++oov;
    }
    EvalReport report = evaluate_scores(probs, labels);
    report.oov_ratio = static_cast<double>(oov) / static_cast<double>(test.size());
    return report;
}

std::string model_to_json(const FearModel& model) {
    json j;
    j["dim"] = model.weights.size();
    j["weights"] = model.weights;
    j["bias"] = model.bias;
    j["reg"] = model.reg == Regularizer::L1 ? "l1" : "l2";
    j["lambda"] = model.lambda;
    return j.dump(2) + "\n";
}

FearModel model_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw FormatError("bad model JSON");
    FearModel model;
    model.weights = j.at("weights").get<std::vector<double>>();
    model.bias = j.at("bias").get<double>();
    model.lambda = j.at("lambda").get<double>();
    const std::string reg = j.at("reg").get<std::string>();
    if (reg == "l1") model.reg = Regularizer::L1;
    else if (reg == "l2") model.reg = Regularizer::L2;
    else throw FormatError("bad model JSON: reg must be l1 or l2");
    if (j.at("dim").get<std::size_t>() != model.weights.size()) {
        throw FormatError("bad model JSON: dim does not match weights");
    }
    return model;
}

void save_model(const std::string& path, const FearModel& model) {
    write_text_file(path, model_to_json(model));
}

FearModel load_model(const std::string& path) {
    return model_from_json(read_text_file(path));
}

}  // namespace storyfear
