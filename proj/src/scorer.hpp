#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "corpus.hpp"
#include "fear.hpp"

namespace storyfear {

// Fear-confidence source for one story sentence. The built-in implementation
// scores with the logistic model; the external adapter replays scores from a
// file so any model (including ones trained elsewhere) can drive the mode
// decomposition.
class FearScorer {
public:
    virtual ~FearScorer() = default;
    virtual double score(const Story& story, std::size_t sentence_index) const = 0;
};

class LogisticScorer : public FearScorer {
public:
    LogisticScorer(FearModel model, const EmbeddingTable* table)
        : model_(std::move(model)), table_(table) {}

    double score(const Story& story, std::size_t sentence_index) const override;

private:
    FearModel model_;
    const EmbeddingTable* table_;
};

// CSV `story_id,sentence_index,probability`; probabilities must be in [0,1].
class ExternalScorer : public FearScorer {
public:
    explicit ExternalScorer(const std::string& csv_path);

    double score(const Story& story, std::size_t sentence_index) const override;
    std::size_t size() const { return scores_.size(); }

private:
    std::string path_;
    std::map<std::pair<std::string, std::size_t>, double> scores_;
};

}  // namespace storyfear
