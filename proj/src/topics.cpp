#include "topics.hpp"

#include <algorithm>

#include "civil.hpp"
#include "error.hpp"
#include "format.hpp"
#include "porter.hpp"

namespace storyfear {

TopicModel::TopicModel(const std::vector<std::vector<std::string>>& docs,
                       const LdaOptions& opts)
    : k_(opts.k),
      alpha_(opts.alpha > 0.0 ? opts.alpha : 5.0 / static_cast<double>(opts.k)),
      beta_(opts.beta),
      rng_(opts.seed) {
    if (docs.empty()) throw ArgError("lda: no documents");
    if (k_ < 1) throw ArgError("lda: k must be >= 1");

    doc_tokens_.reserve(docs.size());
    for (const auto& doc : docs) {
        std::vector<std::size_t> ids;
        ids.reserve(doc.size());
        for (const std::string& word : doc) {
            auto [it, inserted] = vocab_index_.emplace(word, vocab_.size());
            if (inserted) vocab_.push_back(word);
            ids.push_back(it->second);
        }
        total_tokens_ += ids.size();
        doc_tokens_.push_back(std::move(ids));
    }
    if (vocab_.empty()) throw ArgError("lda: empty vocabulary");

    doc_topic_.assign(doc_tokens_.size(), std::vector<std::uint64_t>(k_, 0));
    topic_word_.assign(k_, std::vector<std::uint64_t>(vocab_.size(), 0));
    topic_total_.assign(k_, 0);
    assignments_.resize(doc_tokens_.size());
    for (std::size_t d = 0; d < doc_tokens_.size(); ++d) {
        assignments_[d].resize(doc_tokens_[d].size());
        for (std::size_t i = 0; i < doc_tokens_[d].size(); ++i) {
            const std::size_t z = static_cast<std::size_t>(rng_.next_below(k_));
            assignments_[d][i] = z;
            ++doc_topic_[d][z];
            ++topic_word_[z][doc_tokens_[d][i]];
            ++topic_total_[z];
        }
    }
}

void TopicModel::sweep() {
    const double v_beta = static_cast<double>(vocab_.size()) * beta_;
    std::vector<double> cumulative(k_);
    for (std::size_t d = 0; d < doc_tokens_.size(); ++d) {
        for (std::size_t i = 0; i < doc_tokens_[d].size(); ++i) {
            const std::size_t w = doc_tokens_[d][i];
            const std::size_t old_z = assignments_[d][i];
            --doc_topic_[d][old_z];
            --topic_word_[old_z][w];
            --topic_total_[old_z];

            double total = 0.0;
            for (std::size_t z = 0; z < k_; ++z) {
                const double p =
                    (static_cast<double>(doc_topic_[d][z]) + alpha_) *
                    (static_cast<double>(topic_word_[z][w]) + beta_) /
                    (static_cast<double>(topic_total_[z]) + v_beta);
                total += p;
                cumulative[z] = total;
            }
            const double u = rng_.next_double() * total;
            std::size_t new_z = 0;
            while (new_z + 1 < k_ && u >= cumulative[new_z]) ++new_z;

            assignments_[d][i] = new_z;
            ++doc_topic_[d][new_z];
            ++topic_word_[new_z][w];
            ++topic_total_[new_z];
        }
    }
}

std::vector<double> TopicModel::topic_proportions(std::size_t doc) const {
    if (doc >= doc_tokens_.size()) throw ArgError("topic_proportions: bad doc index");
    const double len = static_cast<double>(doc_tokens_[doc].size());
    const double denom = len + static_cast<double>(k_) * alpha_;
    std::vector<double> theta(k_);
    for (std::size_t z = 0; z < k_; ++z) {
        theta[z] = (static_cast<double>(doc_topic_[doc][z]) + alpha_) / denom;
    }
    return theta;
}

double TopicModel::phi(std::size_t topic, std::size_t word) const {
    const double v_beta = static_cast<double>(vocab_.size()) * beta_;
    return (static_cast<double>(topic_word_[topic][word]) + beta_) /
           (static_cast<double>(topic_total_[topic]) + v_beta);
}

std::vector<TopicModel::TopWord> TopicModel::top_words(std::size_t topic,
                                                       std::size_t m) const {
    std::vector<std::size_t> order(vocab_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto ca = topic_word_[topic][a];
        const auto cb = topic_word_[topic][b];
        if (ca != cb) return ca > cb;
        return vocab_[a] < vocab_[b];
    });
    std::vector<TopWord> top;
    for (std::size_t i = 0; i < order.size() && i < m; ++i) {
        top.push_back({vocab_[order[i]], phi(topic, order[i])});
    }
    return top;
}

TopicModel lda_fit(const std::vector<std::vector<std::string>>& docs,
                   const LdaOptions& opts) {
    TopicModel model(docs, opts);
    for (std::size_t i = 0; i < opts.iterations; ++i) model.sweep();
    return model;
}

namespace {

TopicTrend trend_from_theta(const TopicModel& model,
                            const std::vector<Story>& stories,
                            const std::vector<std::vector<double>>& theta) {
    TopicTrend trend;
    std::map<int, std::vector<std::size_t>> by_year;
    for (std::size_t i = 0; i < stories.size(); ++i) {
        by_year[civil_from_utc(stories[i].created_utc).year].push_back(i);
    }
    for (const auto& [year, docs] : by_year) {
        std::vector<double> mean(model.k(), 0.0);
        for (std::size_t d : docs) {
            for (std::size_t z = 0; z < model.k(); ++z) mean[z] += theta[d][z];
        }
        for (std::size_t z = 0; z < model.k(); ++z) {
            trend.yearly_mean[{year, z}] = mean[z] / static_cast<double>(docs.size());
        }
    }
    for (std::size_t z = 0; z < model.k(); ++z) {
        trend.top_words.push_back(model.top_words(z, 10));
    }
    return trend;
}

}  // namespace

TopicTrend topic_trend(const TopicModel& model, const std::vector<Story>& stories) {
    if (stories.size() != model.doc_count()) {
        throw ArgError("topic_trend: story count does not match fitted documents");
    }
    std::vector<std::vector<double>> theta;
    theta.reserve(model.doc_count());
    for (std::size_t d = 0; d < model.doc_count(); ++d) {
        theta.push_back(model.topic_proportions(d));
    }
    return trend_from_theta(model, stories, theta);
}

TopicTrend topic_trend_sampled(TopicModel& model, const std::vector<Story>& stories,
                               std::size_t samples) {
    if (samples < 1) throw ArgError("topic_trend_sampled: samples must be >= 1");
    if (stories.size() != model.doc_count()) {
        throw ArgError("topic_trend: story count does not match fitted documents");
    }
    std::vector<std::vector<double>> theta(model.doc_count(),
                                           std::vector<double>(model.k(), 0.0));
    for (std::size_t s = 0; s < samples; ++s) {
        if (s > 0) model.sweep();
        for (std::size_t d = 0; d < model.doc_count(); ++d) {
            const std::vector<double> sample = model.topic_proportions(d);
            for (std::size_t z = 0; z < model.k(); ++z) theta[d][z] += sample[z];
        }
    }
    for (auto& row : theta) {
        for (double& v : row) v /= static_cast<double>(samples);
    }
    return trend_from_theta(model, stories, theta);
}

std::vector<DiseaseMonth> disease_trend(const std::vector<Story>& stories,
                                        const std::vector<std::string>& stems) {
    std::unordered_map<std::string, bool> token_matches;  // stem cache
    auto story_matches = [&](const Story& s) {
        for (const std::string& tok : s.tokens) {
            auto it = token_matches.find(tok);
            if (it == token_matches.end()) {
                const std::string stemmed = porter_stem(tok);
                bool hit = false;
                for (const std::string& stem : stems) {
                    if (stemmed.starts_with(stem)) {
                        hit = true;
                        break;
                    }
                }
                it = token_matches.emplace(tok, hit).first;
            }
            if (it->second) return true;
        }
        return false;
    };

    std::map<std::pair<int, unsigned>, DiseaseMonth> months;
    for (const Story& s : stories) {
        const CivilTime t = civil_from_utc(s.created_utc);
        DiseaseMonth& m = months[{t.year, t.month}];
        m.year = t.year;
        m.month = t.month;
        ++m.n_total;
        if (story_matches(s)) ++m.n_disease;
    }
    std::vector<DiseaseMonth> out;
    out.reserve(months.size());
    for (const auto& [key, m] : months) out.push_back(m);
    return out;
}

std::string topics_to_csv(const TopicModel& model, std::size_t top_m) {
    std::string out = "topic,rank,word,phi\n";
    for (std::size_t z = 0; z < model.k(); ++z) {
        const auto top = model.top_words(z, top_m);
        for (std::size_t r = 0; r < top.size(); ++r) {
            out += std::to_string(z) + "," + std::to_string(r + 1) + "," +
                   top[r].word + "," + fmt_g17(top[r].phi) + "\n";
        }
    }
    return out;
}

std::string topic_trend_to_csv(const TopicTrend& trend) {
    std::string out = "year,topic,mean_proportion\n";
    for (const auto& [key, mean] : trend.yearly_mean) {
        out += std::to_string(key.first) + "," + std::to_string(key.second) + "," +
               fmt_g17(mean) + "\n";
    }
    return out;
}

std::string disease_trend_to_csv(const std::vector<DiseaseMonth>& trend) {
    std::string out = "year,month,n_disease,n_total,proportion\n";
    for (const DiseaseMonth& m : trend) {
        const double p = m.n_total == 0
                             ? 0.0
                             : static_cast<double>(m.n_disease) /
                                   static_cast<double>(m.n_total);
        out += std::to_string(m.year) + "," + std::to_string(m.month) + "," +
               std::to_string(m.n_disease) + "," + std::to_string(m.n_total) + "," +
               fmt_g17(p) + "\n";
    }
    return out;
}

}  // namespace storyfear
