#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "text_clean.hpp"

namespace storyfear {

enum class Genre { Scary, Baseline };

const char* genre_name(Genre g);
Genre genre_from_name(const std::string& name);

struct RawStory {
    std::string id;
    std::int64_t created_utc = 0;
    std::string subreddit;
    Genre genre = Genre::Scary;
    std::string title;
    std::string body;
};

struct Story {
    std::string id;
    std::int64_t created_utc = 0;
    std::string subreddit;
    Genre genre = Genre::Scary;
    std::vector<std::string> tokens;      // lowercase [a-z]+, stopwords removed
    std::vector<SentenceRange> sentences; // disjoint, ordered token ranges
};

struct CorpusStats {
    std::map<int, std::size_t> stories_per_year;
    std::map<unsigned, std::size_t> stories_per_hour_gmt;
    std::size_t total_stories = 0;
    std::size_t total_tokens = 0;
};

struct LoadResult {
    std::vector<RawStory> stories;
    std::size_t skipped = 0;  // malformed lines
};

// Reads a JSON Lines corpus; each line needs string `id`, integer
// `created_utc` >= 0, string `subreddit`, `title` and `selftext`. Malformed
// lines are counted and skipped; more than half malformed is a format error.
LoadResult load_corpus(const std::string& path, Genre genre);

// Title and body are concatenated (title, space, body) before cleaning.
Story clean_story(const RawStory& raw, const StopwordSet& stopwords);

std::vector<Story> filter_min_length(std::vector<Story> stories,
                                     std::size_t min_tokens = 500);

CorpusStats compute_stats(const std::vector<Story>& stories);

// Story cache: JSON Lines, one cleaned story per line.
std::string story_to_json(const Story& s);
Story story_from_json(const std::string& line);
void write_story_cache(const std::string& path, const std::vector<Story>& stories);
std::vector<Story> read_story_cache(const std::string& path);

}  // namespace storyfear
