#include "embedding.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "error.hpp"
#include "format.hpp"
#include "io_util.hpp"
#include "text_clean.hpp"

namespace storyfear {

void EmbeddingTable::add(const std::string& word, std::vector<double> vec) {
    if (dim_ == 0) dim_ = vec.size();
    if (vec.size() != dim_) throw ArgError("embedding dimension mismatch");
    if (index_.contains(word)) return;
    index_.emplace(word, index_.size());
    data_.insert(data_.end(), vec.begin(), vec.end());
}

const double* EmbeddingTable::find(const std::string& word) const {
    auto it = index_.find(word);
    return it == index_.end() ? nullptr : data_.data() + it->second * dim_;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool is_uint(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

EmbeddingTable load_embeddings(const std::string& path) {
    const std::vector<std::string> lines = split_lines(read_text_file(path));
    EmbeddingTable table;
    std::size_t lineno = 0;
    bool first_data_line = true;
    for (const std::string& line : lines) {
        ++lineno;
        if (line.empty()) continue;
        const auto fields = split_ws(line);
        if (first_data_line && fields.size() == 2 && is_uint(fields[0]) &&
            is_uint(fields[1])) {
            first_data_line = false;  // header `<count> <dim>`
            continue;
        }
        first_data_line = false;
        if (fields.size() < 2) {
            throw FormatError(path + ":" + std::to_string(lineno) +
                              ": expected `word v1 ... v_dim`");
        }
        std::vector<double> vec;
        vec.reserve(fields.size() - 1);
        for (std::size_t i = 1; i < fields.size(); ++i) {
            try {
                vec.push_back(std::stod(fields[i]));
            } catch (const std::exception&) {
                throw FormatError(path + ":" + std::to_string(lineno) +
                                  ": bad float `" + fields[i] + "`");
            }
        }
        if (table.dim() != 0 && vec.size() != table.dim()) {
            throw FormatError(path + ":" + std::to_string(lineno) + ": vector has " +
                              std::to_string(vec.size()) + " values, expected " +
                              std::to_string(table.dim()));
        }
        table.add(fields[0], std::move(vec));
    }
    return table;
}

std::string embeddings_to_text(const EmbeddingTable& table) {
    // Rows sorted by insertion index so save/load round-trips exactly.
    std::vector<std::pair<std::size_t, const std::string*>> order;
    order.reserve(table.size());
    for (const auto& [word, idx] : table.index()) order.emplace_back(idx, &word);
    std::sort(order.begin(), order.end());

    std::string out = std::to_string(table.size()) + " " +
                      std::to_string(table.dim()) + "\n";
    for (const auto& [idx, word] : order) {
        out += *word;
        for (double v : table.row(idx)) {
            out += ' ';
            out += fmt_g17(v);
        }
        out += '\n';
    }
    return out;
}

void save_embeddings(const std::string& path, const EmbeddingTable& table) {
    write_text_file(path, embeddings_to_text(table));
}

const std::vector<std::string>& human_synonyms() {
    static const std::vector<std::string> synonyms = {
        "human",     "mortal",        "person",        "soul",
        "homo sapien", "earthling",   "higher animal", "living person",
    };
    return synonyms;
}

HumanVector human_vector(const EmbeddingTable& table) {
    if (table.dim() == 0) throw CoverageError("human_vector: empty embedding table");
    HumanVector hv;
    hv.vector.assign(table.dim(), 0.0);
    for (const std::string& synonym : human_synonyms()) {
        // Multi-word synonyms contribute the mean of their constituent words.
        std::vector<double> contrib(table.dim(), 0.0);
        std::size_t words = 0;
        bool missing = false;
        std::istringstream in(synonym);
        std::string word;
        while (in >> word) {
            const double* vec = table.find(word);
            if (!vec) {
                missing = true;
                break;
            }
            for (std::size_t d = 0; d < table.dim(); ++d) contrib[d] += vec[d];
            ++words;
        }
        if (missing || words == 0) {
            hv.missing_synonyms.push_back(synonym);
            continue;
        }
        for (std::size_t d = 0; d < table.dim(); ++d) {
            hv.vector[d] += contrib[d] / static_cast<double>(words);
        }
        hv.contributing_synonyms.push_back(synonym);
    }
    if (hv.contributing_synonyms.empty()) {
        throw CoverageError("human_vector: no human synonym found in the table");
    }
    const double n = static_cast<double>(hv.contributing_synonyms.size());
    for (double& v : hv.vector) v /= n;
    return hv;
}

double euclidean(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw ArgError("euclidean: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double manhattan(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw ArgError("manhattan: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::fabs(a[i] - b[i]);
    return s;
}

PosLexicon load_pos_lexicon(const std::string& path) {
    PosLexicon pos;
    std::size_t lineno = 0;
    for (const std::string& line : split_lines(read_text_file(path))) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
            throw FormatError(path + ":" + std::to_string(lineno) +
                              ": expected `word<TAB>TAG[,TAG...]`");
        }
        std::vector<std::string> tags;
        std::size_t start = tab + 1;
        while (start <= line.size()) {
            std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) comma = line.size();
            std::string tag = line.substr(start, comma - start);
            for (char& c : tag) {
                if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
            }
            if (!tag.empty()) tags.push_back(std::move(tag));
            start = comma + 1;
        }
        pos.emplace(line.substr(0, tab), std::move(tags));
    }
    return pos;
}

bool is_noun(const std::string& word, const PosLexicon& pos) {
    auto it = pos.find(word);
    if (it == pos.end()) return false;
    for (const std::string& tag : it->second) {
        if (tag.starts_with("NN") || tag.starts_with("PN") || tag.starts_with("NP")) {
            return true;
        }
    }
    return false;
}

SimilarityProfile similarity_profile(const SstopLexicon& lexicon,
                                     const EmbeddingTable& table,
                                     const PosLexicon& pos,
                                     const SimilarityOptions& opts) {
    if (opts.n_bins < 2) throw ArgError("similarity_profile: n_bins must be >= 2");
    const HumanVector human = human_vector(table);

    std::vector<std::pair<double, double>> points;  // (distance, score)
    for (const auto& [word, entry] : lexicon.entries()) {
        if (!is_noun(word, pos)) continue;
        const double* vec = table.find(word);
        if (!vec) continue;
        const std::span<const double> v{vec, table.dim()};
        const double d = opts.metric == DistanceMetric::Euclidean
                             ? euclidean(v, human.vector)
                             : manhattan(v, human.vector);
        const double s = opts.log_scores ? std::log(entry.score) : entry.score;
        points.emplace_back(d, s);
    }
    if (points.empty()) {
        throw CoverageError(
            "similarity_profile: no lexicon word is both a noun and embedded");
    }

    double lo = points[0].first, hi = points[0].first;
    for (const auto& [d, s] : points) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }

    const std::size_t n_bins = opts.n_bins;
    const double width = (hi - lo) / static_cast<double>(n_bins);
    std::vector<std::vector<double>> binned(n_bins);
    for (const auto& [d, s] : points) {
        std::size_t idx = 0;
        if (width > 0.0) {
            idx = static_cast<std::size_t>((d - lo) / width);
            if (idx >= n_bins) idx = n_bins - 1;  // d == hi lands in the last bin
        }
        binned[idx].push_back(s);
    }

    SimilarityProfile profile;
    profile.n_words = points.size();
    for (std::size_t b = 0; b < n_bins; ++b) {
        if (binned[b].empty()) continue;
        SimilarityBin bin;
        bin.distance_lo = lo + width * static_cast<double>(b);
        bin.distance_hi = b + 1 == n_bins ? hi : lo + width * static_cast<double>(b + 1);
        bin.n_words = binned[b].size();
        double sum = 0.0;
        for (double s : binned[b]) sum += s;
        bin.mean_sstop = sum / static_cast<double>(bin.n_words);
        if (bin.n_words > 1) {
            double ss = 0.0;
            for (double s : binned[b]) {
                const double d = s - bin.mean_sstop;
                ss += d * d;
            }
            const double sd = std::sqrt(ss / static_cast<double>(bin.n_words - 1));
            bin.stderr_sstop = sd / std::sqrt(static_cast<double>(bin.n_words));
        }
        profile.bins.push_back(bin);
    }
    return profile;
}

std::string similarity_profile_to_csv(const SimilarityProfile& profile) {
    std::string out = "bin_lo,bin_hi,mean_sstop,stderr,n_words\n";
    for (const SimilarityBin& b : profile.bins) {
        out += fmt_g17(b.distance_lo) + "," + fmt_g17(b.distance_hi) + "," +
               fmt_g17(b.mean_sstop) + "," + fmt_g17(b.stderr_sstop) + "," +
               std::to_string(b.n_words) + "\n";
    }
    return out;
}

}  // namespace storyfear
