#include <doctest.h>

#include "corpus.hpp"
#include "error.hpp"
#include "io_util.hpp"
#include "rng.hpp"
#include "testutil.hpp"

using namespace storyfear;

TEST_CASE("load_corpus maps JSONL fields") {
    testutil::TempDir dir("sf_corpus");
    const std::string path = dir.file("c.jsonl");
    write_text_file(path,
                    R"({"id":"a1","created_utc":0,"subreddit":"NoSleep","title":"t","selftext":"b"})"
                    "\n");
    const LoadResult r = load_corpus(path, Genre::Scary);
    REQUIRE(r.stories.size() == 1);
    CHECK(r.skipped == 0);
    CHECK(r.stories[0].id == "a1");
    CHECK(r.stories[0].created_utc == 0);
    CHECK(r.stories[0].subreddit == "NoSleep");
    CHECK(r.stories[0].genre == Genre::Scary);
    CHECK(r.stories[0].title == "t");
    CHECK(r.stories[0].body == "b");
}

TEST_CASE("load_corpus on an empty file") {
    testutil::TempDir dir("sf_corpus");
    const std::string path = dir.file("empty.jsonl");
    write_text_file(path, "");
    const LoadResult r = load_corpus(path, Genre::Baseline);
    CHECK(r.stories.empty());
    CHECK(r.skipped == 0);
}

TEST_CASE("load_corpus skips malformed lines but keeps count") {
    testutil::TempDir dir("sf_corpus");
    const std::string path = dir.file("mixed.jsonl");
    write_text_file(path,
                    R"({"id":"a1","created_utc":5,"subreddit":"s","title":"t","selftext":"x"})"
                    "\n"
                    R"({"id":"a2","created_utc":)"
                    "\n");
    const LoadResult r = load_corpus(path, Genre::Scary);
    CHECK(r.stories.size() == 1);
    CHECK(r.skipped == 1);
}

TEST_CASE("load_corpus rejects mostly-malformed files") {
    testutil::TempDir dir("sf_corpus");
    const std::string path = dir.file("bad.jsonl");
    write_text_file(path,
                    "not json\nnot json either\n"
                    R"({"id":"a1","created_utc":5,"subreddit":"s","title":"t","selftext":"x"})"
                    "\n");
    CHECK_THROWS_AS(load_corpus(path, Genre::Scary), FormatError);
}

TEST_CASE("load_corpus enforces raw-story invariants per line") {
    testutil::TempDir dir("sf_corpus");
    const std::string path = dir.file("inv.jsonl");
    write_text_file(path,
                    R"({"id":"","created_utc":5,"subreddit":"s","title":"t","selftext":"x"})"
                    "\n"
                    R"({"id":"ok1","created_utc":-3,"subreddit":"s","title":"t","selftext":"x"})"
                    "\n"
                    R"({"id":"ok2","created_utc":3,"subreddit":"s","title":"t","selftext":"x"})"
                    "\n"
                    R"({"id":"ok3","created_utc":4,"subreddit":"s","title":"t","selftext":"x"})"
                    "\n");
    const LoadResult r = load_corpus(path, Genre::Scary);
    CHECK(r.stories.size() == 2);  // empty id and negative created_utc skipped
    CHECK(r.skipped == 2);
}

TEST_CASE("load_corpus propagates I/O failures") {
    CHECK_THROWS_AS(load_corpus("/nonexistent/sf.jsonl", Genre::Scary), IoError);
}

TEST_CASE("clean_story concatenates title and body") {
    RawStory raw;
    raw.id = "x";
    raw.title = "Dark Night";
    raw.body = "The ghost screamed.";
    const Story s = clean_story(raw, default_stopwords());
    CHECK(s.tokens == std::vector<std::string>{"dark", "night", "ghost", "screamed"});
}

TEST_CASE("filter_min_length boundary behavior") {
    Story short_story, exact_story;
    short_story.tokens.assign(499, "w");
    exact_story.tokens.assign(500, "w");
    auto kept = filter_min_length({short_story, exact_story}, 500);
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].tokens.size() == 500);
    CHECK(filter_min_length({}, 500).empty());
}

TEST_CASE("filter_min_length is monotone in the threshold") {
    Rng rng(11);
    std::vector<Story> stories(40);
    for (Story& s : stories) s.tokens.assign(rng.next_below(1000), "w");
    std::size_t prev = stories.size();
    for (std::size_t min_tokens : {0u, 100u, 400u, 700u, 1200u}) {
        const std::size_t n = filter_min_length(stories, min_tokens).size();
        CHECK(n <= prev);
        prev = n;
    }
}

TEST_CASE("compute_stats extracts UTC year and hour") {
    auto story_at = [](std::int64_t utc) {
        Story s;
        s.created_utc = utc;
        s.tokens = {"a", "b"};
        return s;
    };
    SUBCASE("epoch") {
        const CorpusStats stats = compute_stats({story_at(0)});
        CHECK(stats.stories_per_year.at(1970) == 1);
        CHECK(stats.stories_per_hour_gmt.at(0) == 1);
        CHECK(stats.total_tokens == 2);
    }
    SUBCASE("adjacent hours") {
        const CorpusStats stats = compute_stats({story_at(0), story_at(3600)});
        CHECK(stats.stories_per_hour_gmt.at(0) == 1);
        CHECK(stats.stories_per_hour_gmt.at(1) == 1);
    }
    SUBCASE("day boundary") {
        const CorpusStats stats = compute_stats({story_at(86399), story_at(86400)});
        CHECK(stats.stories_per_hour_gmt.at(23) == 1);
        CHECK(stats.stories_per_hour_gmt.at(0) == 1);
    }
    SUBCASE("known date") {
        // 2020-06-15 13:00:00 UTC
        const CorpusStats stats = compute_stats({story_at(1592226000)});
        CHECK(stats.stories_per_year.at(2020) == 1);
        CHECK(stats.stories_per_hour_gmt.at(13) == 1);
    }
}

TEST_CASE("corpus stats marginals sum to the story count") {
    Rng rng(17);
    std::vector<Story> stories(200);
    for (Story& s : stories) {
        s.created_utc = static_cast<std::int64_t>(rng.next_below(2000000000ull));
    }
    const CorpusStats stats = compute_stats(stories);
    std::size_t year_sum = 0, hour_sum = 0;
    for (const auto& [year, n] : stats.stories_per_year) year_sum += n;
    for (const auto& [hour, n] : stats.stories_per_hour_gmt) hour_sum += n;
    CHECK(year_sum == stats.total_stories);
    CHECK(hour_sum == stats.total_stories);
    CHECK(stats.total_stories == stories.size());
}

TEST_CASE("story cache round-trips") {
    Story s;
    s.id = "abc";
    s.created_utc = 123456;
    s.subreddit = "NoSleep";
    s.genre = Genre::Scary;
    s.tokens = {"dark", "night", "ghost"};
    s.sentences = {{0, 2}, {2, 3}};

    const Story back = story_from_json(story_to_json(s));
    CHECK(back.id == s.id);
    CHECK(back.created_utc == s.created_utc);
    CHECK(back.subreddit == s.subreddit);
    CHECK(back.genre == s.genre);
    CHECK(back.tokens == s.tokens);
    CHECK(back.sentences == s.sentences);

    testutil::TempDir dir("sf_cache");
    const std::string path = dir.file("cache.jsonl");
    write_story_cache(path, {s, s});
    CHECK(read_story_cache(path).size() == 2);
}

TEST_CASE("synthetic corpus generator feeds the real loader") {
    testutil::TempDir dir("sf_gen");
    testutil::CorpusSpec spec;
    spec.n_stories = 5;
    spec.seed = 3;
    const std::string path = dir.file("gen.jsonl");
    write_text_file(path, testutil::make_raw_corpus_jsonl(spec));
    const LoadResult r = load_corpus(path, Genre::Scary);
    CHECK(r.stories.size() == 5);
    CHECK(r.skipped == 0);
    const Story cleaned = clean_story(r.stories[0], default_stopwords());
    CHECK(cleaned.tokens.size() >= 500);
    CHECK(cleaned.sentences.size() > 10);
}
