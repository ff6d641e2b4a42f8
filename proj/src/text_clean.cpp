#include "text_clean.hpp"

#include <cctype>

#include "io_util.hpp"

namespace storyfear {

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_alpha(char c) { return is_upper(c) || is_lower(c); }

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (is_upper(c)) c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

}  // namespace

std::vector<std::string> split_camel_case(std::string_view token) {
    std::vector<std::string> pieces;
    if (token.empty()) return pieces;
    std::size_t start = 0;
    for (std::size_t i = 1; i < token.size(); ++i) {
        const bool boundary =
            is_upper(token[i]) &&
            (is_lower(token[i - 1]) ||
             (i + 1 < token.size() && is_lower(token[i + 1])));
        if (boundary) {
            pieces.emplace_back(token.substr(start, i - start));
            start = i;
        }
    }
    pieces.emplace_back(token.substr(start));
    return pieces;
}

CleanResult clean_text(std::string_view raw, const StopwordSet& stopwords) {
    CleanResult out;

    // Pre-tokens are maximal alphabetic runs tagged with the sentence they
    // started in. Boundary characters are consumed before stripping, so the
    // sentence structure survives the alphabetic filter.
    std::size_t sentence = 0;
    std::string run;
    std::vector<std::size_t> token_sentence;

    auto flush_run = [&](std::size_t run_sentence) {
        if (run.empty()) return;
        for (const std::string& piece : split_camel_case(run)) {
            std::string word = to_lower(piece);
            if (!stopwords.contains(word)) {
                out.tokens.push_back(std::move(word));
                token_sentence.push_back(run_sentence);
            }
        }
        run.clear();
    };

    std::size_t run_sentence = 0;
    for (char c : raw) {
        if (is_alpha(c)) {
            if (run.empty()) run_sentence = sentence;
            run += c;
            continue;
        }
        flush_run(run_sentence);
        if (c == '.' || c == '!' || c == '?' || c == '\n') ++sentence;
    }
    flush_run(run_sentence);

    for (std::size_t i = 0; i < out.tokens.size();) {
        std::size_t j = i;
        while (j < out.tokens.size() && token_sentence[j] == token_sentence[i]) ++j;
        out.sentences.emplace_back(i, j);
        i = j;
    }
    return out;
}

StopwordSet parse_stopwords(const std::string& text) {
    StopwordSet set;
    for (const std::string& line : split_lines(text)) {
        if (line.empty() || line[0] == '#') continue;
        set.insert(line);
    }
    return set;
}

StopwordSet load_stopwords(const std::string& path) {
    return parse_stopwords(read_text_file(path));
}

const StopwordSet& default_stopwords() {
    static const StopwordSet set = parse_stopwords(
#include "stopwords_data.inc"
    );
    return set;
}

}  // namespace storyfear
