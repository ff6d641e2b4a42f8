#include "scorer.hpp"

#include "csv.hpp"
#include "error.hpp"

namespace storyfear {

double LogisticScorer::score(const Story& story, std::size_t sentence_index) const {
    if (sentence_index >= story.sentences.size()) {
        throw ArgError("LogisticScorer: sentence index out of range");
    }
    const auto [lo, hi] = story.sentences[sentence_index];
    std::vector<double> mean(table_->dim(), 0.0);
    std::size_t found = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        if (const double* vec = table_->find(story.tokens[i])) {
            for (std::size_t d = 0; d < mean.size(); ++d) mean[d] += vec[d];
            ++found;
        }
    }
    if (found > 0) {
        for (double& v : mean) v /= static_cast<double>(found);
    }
    return predict_proba(model_, mean);
}

ExternalScorer::ExternalScorer(const std::string& csv_path) : path_(csv_path) {
    const auto rows = read_csv_file(csv_path);
    if (rows.empty() ||
        rows[0] != std::vector<std::string>{"story_id", "sentence_index", "probability"}) {
        throw FormatError(csv_path + ": expected header story_id,sentence_index,probability");
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != 3) {
            throw FormatError(csv_path + ": row " + std::to_string(i + 1) +
                              " has " + std::to_string(rows[i].size()) + " fields");
        }
        std::size_t index = 0;
        double p = 0.0;
        try {
            index = std::stoull(rows[i][1]);
            p = std::stod(rows[i][2]);
        } catch (const std::exception&) {
            throw FormatError(csv_path + ": row " + std::to_string(i + 1) +
                              " has a non-numeric field");
        }
        if (!(p >= 0.0 && p <= 1.0)) {
            throw FormatError(csv_path + ": row " + std::to_string(i + 1) +
                              " probability outside [0,1]");
        }
        scores_[{rows[i][0], index}] = p;
    }
}

double ExternalScorer::score(const Story& story, std::size_t sentence_index) const {
    auto it = scores_.find({story.id, sentence_index});
    if (it == scores_.end()) {
        throw StateError(path_ + ": no score for story `" + story.id +
                         "` sentence " + std::to_string(sentence_index));
    }
    return it->second;
}

}  // namespace storyfear
