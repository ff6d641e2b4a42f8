#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "corpus.hpp"

namespace storyfear {

struct GenreCounts {
    Genre genre = Genre::Scary;
    std::unordered_map<std::string, std::uint64_t> word_counts;
    std::uint64_t total_tokens = 0;
};

struct SstopEntry {
    std::uint64_t count_scary = 0;
    std::uint64_t count_baseline = 0;
    double score = 0.0;  // (count_scary/total_scary) / (count_baseline/total_baseline)
};

class SstopLexicon {
public:
    SstopLexicon() = default;
    SstopLexicon(std::unordered_map<std::string, SstopEntry> entries,
                 std::uint64_t min_occurrence, std::uint64_t total_scary,
                 std::uint64_t total_baseline)
        : entries_(std::move(entries)),
          min_occurrence_(min_occurrence),
          total_scary_(total_scary),
          total_baseline_(total_baseline) {}

    const std::unordered_map<std::string, SstopEntry>& entries() const {
        return entries_;
    }
    std::size_t size() const { return entries_.size(); }
    std::uint64_t min_occurrence() const { return min_occurrence_; }
    std::uint64_t total_scary() const { return total_scary_; }
    std::uint64_t total_baseline() const { return total_baseline_; }

    // nullptr when the word has no entry.
    const SstopEntry* find(const std::string& word) const {
        auto it = entries_.find(word);
        return it == entries_.end() ? nullptr : &it->second;
    }

private:
    std::unordered_map<std::string, SstopEntry> entries_;
    std::uint64_t min_occurrence_ = 0;
    std::uint64_t total_scary_ = 0;
    std::uint64_t total_baseline_ = 0;
};

// Exact multiset counts over all tokens; the stories must share one genre.
GenreCounts count_tokens(const std::vector<Story>& stories);

// Relative-frequency odds ratio per word. A word is scored only when its
// combined count reaches min_occurrence and it occurs at least once in each
// genre; everything else is excluded rather than smoothed.
SstopLexicon compute_sstop(const GenreCounts& scary, const GenreCounts& baseline,
                           std::uint64_t min_occurrence = 100);

// The score of one word: a single correctly-rounded division of exact
// integer cross-products, canonicalized so that exchanging the genres yields
// the exact floating-point reciprocal.
double sstop_score(std::uint64_t count_scary, std::uint64_t total_scary,
                   std::uint64_t count_baseline, std::uint64_t total_baseline);

// Mean lexicon score over tokens[start, start+width), counting only words the
// lexicon knows; 1.0 (the neutral ratio) when none are known. The window is
// clipped at the end of the token list.
double score_window(const std::vector<std::string>& tokens, std::size_t start,
                    std::size_t width, const SstopLexicon& lexicon);

// CSV `word,count_scary,count_baseline,score`, descending score (ties by
// word), score at 17 significant digits.
void export_lexicon_csv(std::ostream& out, const SstopLexicon& lexicon);
std::string lexicon_to_csv(const SstopLexicon& lexicon);
SstopLexicon load_lexicon_csv(const std::string& path);

}  // namespace storyfear
