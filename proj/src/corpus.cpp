#include "corpus.hpp"

#include <utility>

#include <json.hpp>

#include "civil.hpp"
#include "error.hpp"
#include "io_util.hpp"

namespace storyfear {

using nlohmann::json;

const char* genre_name(Genre g) {
    return g == Genre::Scary ? "scary" : "baseline";
}

Genre genre_from_name(const std::string& name) {
    if (name == "scary") return Genre::Scary;
    if (name == "baseline") return Genre::Baseline;
    throw ArgError("unknown genre: " + name);
}

namespace {

bool parse_raw_line(const std::string& line, Genre genre, RawStory& out) {
    json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) return false;
    if (!j.contains("id") || !j["id"].is_string()) return false;
    if (!j.contains("created_utc") || !j["created_utc"].is_number_integer()) return false;
    if (!j.contains("subreddit") || !j["subreddit"].is_string()) return false;
    if (!j.contains("title") || !j["title"].is_string()) return false;
    if (!j.contains("selftext") || !j["selftext"].is_string()) return false;
    out.id = j["id"].get<std::string>();
    out.created_utc = j["created_utc"].get<std::int64_t>();
    out.subreddit = j["subreddit"].get<std::string>();
    out.title = j["title"].get<std::string>();
    out.body = j["selftext"].get<std::string>();
    out.genre = genre;
    return !out.id.empty() && out.created_utc >= 0;
}

}  // namespace

LoadResult load_corpus(const std::string& path, Genre genre) {
    const std::string text = read_text_file(path);
    LoadResult result;
    std::size_t considered = 0;
    for (const std::string& line : split_lines(text)) {
        if (line.empty()) continue;
        ++considered;
        RawStory raw;
        if (parse_raw_line(line, genre, raw)) {
            result.stories.push_back(std::move(raw));
        } else {
            ++result.skipped;
        }
    }
    if (considered > 0 && result.skipped * 2 > considered) {
        throw FormatError(path + ": " + std::to_string(result.skipped) + " of " +
                          std::to_string(considered) +
                          " lines malformed; not a story corpus?");
    }
    return result;
}

Story clean_story(const RawStory& raw, const StopwordSet& stopwords) {
    Story s;
    s.id = raw.id;
    s.created_utc = raw.created_utc;
    s.subreddit = raw.subreddit;
    s.genre = raw.genre;
    CleanResult cleaned = clean_text(raw.title + " " + raw.body, stopwords);
    s.tokens = std::move(cleaned.tokens);
    s.sentences = std::move(cleaned.sentences);
    return s;
}

std::vector<Story> filter_min_length(std::vector<Story> stories,
                                     std::size_t min_tokens) {
    std::vector<Story> kept;
    kept.reserve(stories.size());
    for (auto& s : stories) {
        if (s.tokens.size() >= min_tokens) kept.push_back(std::move(s));
    }
    return kept;
}

CorpusStats compute_stats(const std::vector<Story>& stories) {
    CorpusStats stats;
    for (const Story& s : stories) {
        const CivilTime t = civil_from_utc(s.created_utc);
        ++stats.stories_per_year[t.year];
        ++stats.stories_per_hour_gmt[t.hour];
        ++stats.total_stories;
        stats.total_tokens += s.tokens.size();
    }
    return stats;
}

std::string story_to_json(const Story& s) {
    json j;
    j["id"] = s.id;
    j["created_utc"] = s.created_utc;
    j["subreddit"] = s.subreddit;
    j["genre"] = genre_name(s.genre);
    j["tokens"] = s.tokens;
    json sent = json::array();
    for (const auto& [lo, hi] : s.sentences) sent.push_back({lo, hi});
    j["sentences"] = sent;
    return j.dump();
}

Story story_from_json(const std::string& line) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        throw FormatError("bad story cache line");
    }
    Story s;
    s.id = j.at("id").get<std::string>();
    s.created_utc = j.at("created_utc").get<std::int64_t>();
    s.subreddit = j.at("subreddit").get<std::string>();
    s.genre = genre_from_name(j.at("genre").get<std::string>());
    s.tokens = j.at("tokens").get<std::vector<std::string>>();
    for (const auto& pair : j.at("sentences")) {
        s.sentences.emplace_back(pair.at(0).get<std::size_t>(),
                                 pair.at(1).get<std::size_t>());
    }
    return s;
}

void write_story_cache(const std::string& path,
                       const std::vector<Story>& stories) {
    std::string out;
    for (const Story& s : stories) {
        out += story_to_json(s);
        out += '\n';
    }
    write_text_file(path, out);
}

std::vector<Story> read_story_cache(const std::string& path) {
    std::vector<Story> stories;
    for (const std::string& line : split_lines(read_text_file(path))) {
        if (line.empty()) continue;
        stories.push_back(story_from_json(line));
    }
    return stories;
}

}  // namespace storyfear
