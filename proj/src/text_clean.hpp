#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace storyfear {

using StopwordSet = std::unordered_set<std::string>;

// One sentence as a half-open range [first, second) of token indices.
using SentenceRange = std::pair<std::size_t, std::size_t>;

struct CleanResult {
    std::vector<std::string> tokens;
    std::vector<SentenceRange> sentences;
};

// Splits before each uppercase letter that follows a lowercase letter or is
// itself followed by one ("EndThisTyranny" -> End/This/Tyranny,
// "HTTPServer" -> HTTP/Server). Casing is preserved; pieces concatenate back
// to the input.
std::vector<std::string> split_camel_case(std::string_view token);

// Cleaning pipeline, in order: sentence boundaries at . ! ? and newline;
// every character outside [A-Za-z ] becomes a space; whitespace split;
// camelCase split; lowercase; stopword removal. Sentence ranges are given in
// surviving-token indices and empty sentences are dropped.
CleanResult clean_text(std::string_view raw, const StopwordSet& stopwords);

// Stopword files: one lowercase word per line, '#' lines are comments.
StopwordSet parse_stopwords(const std::string& text);
StopwordSet load_stopwords(const std::string& path);

// The bundled 179-word English list.
const StopwordSet& default_stopwords();

}  // namespace storyfear
