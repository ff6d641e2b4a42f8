// Regenerates the committed fixtures under tests/fixtures/. Run manually:
//   cmake --build build --target storyfear_genfixtures
//   ./build/tests/storyfear_genfixtures tests/fixtures
// The outputs are deterministic; reruns must be byte-identical.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "embedding.hpp"
#include "format.hpp"
#include "io_util.hpp"
#include "oracles.hpp"
#include "rng.hpp"
#include "testutil.hpp"
#include "text_clean.hpp"

using namespace storyfear;

namespace {

std::vector<Story> clean_all(const std::string& jsonl, Genre genre) {
    testutil::TempDir dir("sf_genfix");
    const std::string path = dir.file("raw.jsonl");
    write_text_file(path, jsonl);
    const LoadResult loaded = load_corpus(path, genre);
    std::vector<Story> cleaned;
    for (const RawStory& raw : loaded.stories) {
        cleaned.push_back(clean_story(raw, default_stopwords()));
    }
    return filter_min_length(std::move(cleaned), 500);
}

std::string make_embeddings(Rng& rng) {
    std::vector<std::string> words;
    for (const auto& w : testutil::scary_pool()) words.push_back(w);
    for (const auto& w : testutil::baseline_pool()) words.push_back(w);
    for (const char* w : {"human", "mortal", "person", "soul", "homo", "sapien",
                          "earthling", "higher", "animal", "living", "end",
                          "tyranny", "dark", "saw", "felt", "heard"}) {
        words.emplace_back(w);
    }
    const std::size_t dim = 8;
    std::string out = std::to_string(words.size()) + " " + std::to_string(dim) + "\n";
    const auto& scary = testutil::scary_pool();
    for (const std::string& word : words) {
        out += word;
        const bool is_scary =
            std::find(scary.begin(), scary.end(), word) != scary.end();
        for (std::size_t d = 0; d < dim; ++d) {
            double v = 2.0 * rng.next_double() - 1.0;
            // scary-pool words get an offset so the fear fixture is learnable
            if (d == 0 && is_scary) v += 0.8;
            out += ' ';
            out += fmt_g17(v);
        }
        out += '\n';
    }
    return out;
}

std::string make_pos_lexicon() {
    std::string out = "# word<TAB>TAG[,TAG...]\n";
    for (const auto& w : testutil::scary_pool()) out += w + "\tNN\n";
    // a mix of noun and non-noun tags on the baseline side
    std::size_t i = 0;
    for (const auto& w : testutil::baseline_pool()) {
        switch (i++ % 4) {
            case 0: out += w + "\tNN\n"; break;
            case 1: out += w + "\tNNS\n"; break;
            case 2: out += w + "\tVB\n"; break;
            default: out += w + "\tJJ,RB\n"; break;
        }
    }
    out += "human\tNN\nperson\tNN\n";
    return out;
}

std::string make_labeled(Rng& rng) {
    const auto& scary = testutil::scary_pool();
    const auto& baseline = testutil::baseline_pool();
    std::string out = "text,label,source\n";
    for (int i = 0; i < 400; ++i) {
        const bool fear = i % 4 == 0;  // 25% positive
        const auto& pool = fear ? scary : baseline;
        std::string text = fear ? "i felt the " : "we went to the ";
        for (int w = 0; w < 6; ++w) {
            text += pool[rng.next_below(pool.size())];
            text += ' ';
        }
        text += fear ? "near me, waiting" : "after lunch";
        const char* label = fear ? "fear" : (i % 3 == 0 ? "joy" : "anger");
        const char* source = i % 2 == 0 ? "isear" : "crowdflower";
        out += "\"" + text + "\"," + label + "," + source + "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <fixtures-dir>\n", argv[0]);
        return 2;
    }
    const std::string dir = argv[1];
    std::filesystem::create_directories(dir);

    testutil::CorpusSpec scary_spec;
    scary_spec.genre = Genre::Scary;
    scary_spec.seed = 101;
    scary_spec.utc_start = 1325376000;  // 2012-01-01
    testutil::CorpusSpec baseline_spec;
    baseline_spec.genre = Genre::Baseline;
    baseline_spec.seed = 202;
    baseline_spec.utc_start = 1338508800;  // 2012-06-01

    const std::string scary_jsonl = testutil::make_raw_corpus_jsonl(scary_spec);
    const std::string baseline_jsonl = testutil::make_raw_corpus_jsonl(baseline_spec);

    // Fixture invariants: every story survives the 500-token filter, and the
    // default min_occurrence yields a usable lexicon whose genre swap inverts
    // bit-exactly.
    const auto scary = clean_all(scary_jsonl, Genre::Scary);
    const auto baseline = clean_all(baseline_jsonl, Genre::Baseline);
    if (scary.size() != scary_spec.n_stories ||
        baseline.size() != baseline_spec.n_stories) {
        std::fprintf(stderr, "fixture corpus lost stories to the length filter "
                             "(%zu/%zu kept); adjust the generator\n",
                     scary.size(), baseline.size());
        return 1;
    }
    const auto rows = oracle::sstop_recount(scary, baseline, 100);
    if (rows.size() < 30) {
        std::fprintf(stderr, "golden lexicon too small: %zu words\n", rows.size());
        return 1;
    }
    const auto swapped = oracle::sstop_recount(baseline, scary, 100);
    if (swapped.size() != rows.size()) {
        std::fprintf(stderr, "genre swap changed the word set\n");
        return 1;
    }
    for (const auto& row : rows) {
        for (const auto& other : swapped) {
            if (other.word != row.word) continue;
            const double lo = std::min(row.score, other.score);
            const double hi = std::max(row.score, other.score);
            if (lo != 1.0 / hi) {
                std::fprintf(stderr, "swap inversion not exact for `%s`\n",
                             row.word.c_str());
                return 1;
            }
        }
    }

    write_text_file(dir + "/toy_scary.jsonl", scary_jsonl);
    write_text_file(dir + "/toy_baseline.jsonl", baseline_jsonl);
    write_text_file(dir + "/golden_lexicon.csv", oracle::sstop_csv(rows));

    Rng rng(777);
    write_text_file(dir + "/tiny_embeddings.txt", make_embeddings(rng));
    write_text_file(dir + "/pos_lexicon.tsv", make_pos_lexicon());
    write_text_file(dir + "/labeled_fear.csv", make_labeled(rng));

    std::printf("fixtures written to %s (%zu lexicon words)\n", dir.c_str(),
                rows.size());
    return 0;
}
