#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "corpus.hpp"
#include "rng.hpp"

namespace storyfear {

struct LdaOptions {
    std::size_t k = 10;
    double alpha = 0.0;  // 0 means the 5/K default
    double beta = 0.01;
    std::size_t iterations = 1000;
    std::uint64_t seed = 0;
};

// Collapsed-Gibbs LDA state. Counts are kept incrementally; sweep() resamples
// every token's topic once.
class TopicModel {
public:
    TopicModel(const std::vector<std::vector<std::string>>& docs, const LdaOptions& opts);

    void sweep();

    std::size_t k() const { return k_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    std::size_t vocab_size() const { return vocab_.size(); }
    std::size_t doc_count() const { return doc_tokens_.size(); }
    std::size_t total_tokens() const { return total_tokens_; }

    const std::vector<std::string>& vocabulary() const { return vocab_; }
    const std::vector<std::vector<std::size_t>>& assignments() const {
        return assignments_;
    }
    const std::vector<std::vector<std::uint64_t>>& doc_topic_counts() const {
        return doc_topic_;
    }
    const std::vector<std::vector<std::uint64_t>>& topic_word_counts() const {
        return topic_word_;
    }
    const std::vector<std::uint64_t>& topic_totals() const { return topic_total_; }

    // Posterior-mean document proportions (doc_topic + alpha)/(len + K*alpha).
    std::vector<double> topic_proportions(std::size_t doc) const;

    // phi for (topic, word index): (count + beta) / (topic_total + V*beta).
    double phi(std::size_t topic, std::size_t word) const;

    struct TopWord {
        std::string word;
        double phi = 0.0;
    };
    std::vector<TopWord> top_words(std::size_t topic, std::size_t m = 10) const;

private:
    std::size_t k_;
    double alpha_;
    double beta_;
    std::size_t total_tokens_ = 0;
    std::vector<std::string> vocab_;
    std::unordered_map<std::string, std::size_t> vocab_index_;
    std::vector<std::vector<std::size_t>> doc_tokens_;   // word ids per doc
    std::vector<std::vector<std::size_t>> assignments_;  // topic per token
    std::vector<std::vector<std::uint64_t>> doc_topic_;
    std::vector<std::vector<std::uint64_t>> topic_word_;  // K x V
    std::vector<std::uint64_t> topic_total_;
    Rng rng_;
};

TopicModel lda_fit(const std::vector<std::vector<std::string>>& docs,
                   const LdaOptions& opts);

struct TopicTrend {
    // (year, topic) -> mean proportion over stories posted that year
    std::map<std::pair<int, std::size_t>, double> yearly_mean;
    std::vector<std::vector<TopicModel::TopWord>> top_words;  // per topic
};

// The model must have been fitted on `stories` in order.
TopicTrend topic_trend(const TopicModel& model, const std::vector<Story>& stories);

// Variant that averages the posterior-mean proportions over `samples` Gibbs
// states: the current state plus samples-1 further sweeps (which mutate the
// model). samples == 1 is plain topic_trend.
TopicTrend topic_trend_sampled(TopicModel& model, const std::vector<Story>& stories,
                               std::size_t samples);

struct DiseaseMonth {
    int year = 0;
    unsigned month = 0;
    std::size_t n_disease = 0;
    std::size_t n_total = 0;
};

// A story is disease-related iff any of its Porter-stemmed tokens has one of
// the given stems as a prefix.
std::vector<DiseaseMonth> disease_trend(
    const std::vector<Story>& stories,
    const std::vector<std::string>& stems = {"lockdown", "infect", "viru", "diseas"});

std::string topics_to_csv(const TopicModel& model, std::size_t top_m = 10);
std::string topic_trend_to_csv(const TopicTrend& trend);
std::string disease_trend_to_csv(const std::vector<DiseaseMonth>& trend);

}  // namespace storyfear
