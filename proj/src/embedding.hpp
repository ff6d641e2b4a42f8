#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lexicon.hpp"

namespace storyfear {

// Word vectors in the textual format: optional `<count> <dim>` header, then
// one `word v1 ... v_dim` line per word.
class EmbeddingTable {
public:
    EmbeddingTable() = default;
    explicit EmbeddingTable(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return index_.size(); }

    // First occurrence wins; duplicates are ignored.
    void add(const std::string& word, std::vector<double> vec);

    const double* find(const std::string& word) const;
    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * dim_, dim_};
    }
    const std::unordered_map<std::string, std::size_t>& index() const {
        return index_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
    std::unordered_map<std::string, std::size_t> index_;
};

EmbeddingTable load_embeddings(const std::string& path);
std::string embeddings_to_text(const EmbeddingTable& table);
void save_embeddings(const std::string& path, const EmbeddingTable& table);

struct HumanVector {
    std::vector<double> vector;
    std::vector<std::string> contributing_synonyms;
    std::vector<std::string> missing_synonyms;
};

// Mean of the resolvable human-synonym vectors; multi-word synonyms
// contribute the mean of their constituent word vectors and are skipped when
// any constituent is missing.
HumanVector human_vector(const EmbeddingTable& table);

const std::vector<std::string>& human_synonyms();

double euclidean(std::span<const double> a, std::span<const double> b);
double manhattan(std::span<const double> a, std::span<const double> b);

// POS lexicon: `word<TAB>TAG[,TAG...]` per line, '#' lines are comments.
using PosLexicon = std::unordered_map<std::string, std::vector<std::string>>;
PosLexicon load_pos_lexicon(const std::string& path);

// True when any tag starts with NN, PN or NP (so NNS and NNP qualify).
// Unknown words are simply not nouns.
bool is_noun(const std::string& word, const PosLexicon& pos);

struct SimilarityBin {
    double distance_lo = 0.0;
    double distance_hi = 0.0;
    double mean_sstop = 0.0;
    double stderr_sstop = 0.0;  // sample sd / sqrt(n); 0 when n == 1
    std::size_t n_words = 0;
};

struct SimilarityProfile {
    std::vector<SimilarityBin> bins;  // ordered, empty bins omitted
    std::size_t n_words = 0;
};

enum class DistanceMetric { Euclidean, Manhattan };

struct SimilarityOptions {
    std::size_t n_bins = 20;
    bool log_scores = false;  // average log(score) instead of raw scores
    DistanceMetric metric = DistanceMetric::Euclidean;
};

// Mean SSToP per equal-width distance-to-human bin, over lexicon words that
// are nouns and present in the table.
SimilarityProfile similarity_profile(const SstopLexicon& lexicon,
                                     const EmbeddingTable& table,
                                     const PosLexicon& pos,
                                     const SimilarityOptions& opts = {});

std::string similarity_profile_to_csv(const SimilarityProfile& profile);

}  // namespace storyfear
