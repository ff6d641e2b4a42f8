#include "lexicon.hpp"

#include <algorithm>
#include <sstream>

#include "csv.hpp"
#include "error.hpp"
#include "format.hpp"

namespace storyfear {

GenreCounts count_tokens(const std::vector<Story>& stories) {
    GenreCounts counts;
    if (!stories.empty()) counts.genre = stories.front().genre;
    for (const Story& s : stories) {
        if (s.genre != counts.genre) {
            throw ArgError("count_tokens: stories mix genres");
        }
        for (const std::string& tok : s.tokens) {
            ++counts.word_counts[tok];
            ++counts.total_tokens;
        }
    }
    return counts;
}

double sstop_score(std::uint64_t count_scary, std::uint64_t total_scary,
                   std::uint64_t count_baseline, std::uint64_t total_baseline) {
    // (count_scary/total_scary) / (count_baseline/total_baseline) as one
    // division of exact integer cross-products. The division always runs in
    // the >= 1 direction and the other direction takes the reciprocal, so
    // swapping the genres maps every score to exactly 1/score.
    const double p = static_cast<double>(count_scary) *
                     static_cast<double>(total_baseline);
    const double q = static_cast<double>(count_baseline) *
                     static_cast<double>(total_scary);
    if (p == q) return 1.0;
    return p > q ? p / q : 1.0 / (q / p);
}

SstopLexicon compute_sstop(const GenreCounts& scary, const GenreCounts& baseline,
                           std::uint64_t min_occurrence) {
    if (scary.total_tokens == 0 || baseline.total_tokens == 0) {
        throw ArgError("compute_sstop: empty corpus");
    }
    std::unordered_map<std::string, SstopEntry> entries;
    for (const auto& [word, count_scary] : scary.word_counts) {
        auto it = baseline.word_counts.find(word);
        if (it == baseline.word_counts.end()) continue;
        const std::uint64_t count_baseline = it->second;
        if (count_scary + count_baseline < min_occurrence) continue;
        SstopEntry e;
        e.count_scary = count_scary;
        e.count_baseline = count_baseline;
        e.score = sstop_score(count_scary, scary.total_tokens, count_baseline,
                              baseline.total_tokens);
        entries.emplace(word, e);
    }
    return SstopLexicon(std::move(entries), min_occurrence, scary.total_tokens,
                        baseline.total_tokens);
}

double score_window(const std::vector<std::string>& tokens, std::size_t start,
                    std::size_t width, const SstopLexicon& lexicon) {
    if (start >= tokens.size()) {
        throw ArgError("score_window: start index out of range");
    }
    if (width == 0) throw ArgError("score_window: width must be >= 1");
    const std::size_t end =
        width > tokens.size() - start ? tokens.size() : start + width;
    double sum = 0.0;
    std::size_t hits = 0;
    for (std::size_t i = start; i < end; ++i) {
        if (const SstopEntry* e = lexicon.find(tokens[i])) {
            sum += e->score;
            ++hits;
        }
    }
    return hits == 0 ? 1.0 : sum / static_cast<double>(hits);
}

namespace {

std::vector<std::pair<std::string, SstopEntry>> sorted_entries(
    const SstopLexicon& lexicon) {
    std::vector<std::pair<std::string, SstopEntry>> rows(
        lexicon.entries().begin(), lexicon.entries().end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second.score != b.second.score) return a.second.score > b.second.score;
        return a.first < b.first;
    });
    return rows;
}

}  // namespace

void export_lexicon_csv(std::ostream& out, const SstopLexicon& lexicon) {
    out << "word,count_scary,count_baseline,score\n";
    for (const auto& [word, e] : sorted_entries(lexicon)) {
        out << word << ',' << e.count_scary << ',' << e.count_baseline << ','
            << fmt_g17(e.score) << '\n';
    }
}

std::string lexicon_to_csv(const SstopLexicon& lexicon) {
    std::ostringstream out;
    export_lexicon_csv(out, lexicon);
    return out.str();
}

SstopLexicon load_lexicon_csv(const std::string& path) {
    const auto rows = read_csv_file(path);
    if (rows.empty() || rows[0] !=
        std::vector<std::string>{"word", "count_scary", "count_baseline", "score"}) {
        throw FormatError(path + ": not a lexicon CSV (bad header)");
    }
    std::unordered_map<std::string, SstopEntry> entries;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != 4) {
            throw FormatError(path + ": row " + std::to_string(i + 1) +
                              " has " + std::to_string(rows[i].size()) + " fields");
        }
        SstopEntry e;
        try {
            e.count_scary = std::stoull(rows[i][1]);
            e.count_baseline = std::stoull(rows[i][2]);
            e.score = std::stod(rows[i][3]);
        } catch (const std::exception&) {
            throw FormatError(path + ": row " + std::to_string(i + 1) +
                              " has a non-numeric field");
        }
        entries.emplace(rows[i][0], e);
    }
    return SstopLexicon(std::move(entries), 0, 0, 0);
}

}  // namespace storyfear
