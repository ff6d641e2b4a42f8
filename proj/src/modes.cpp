#include "modes.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "error.hpp"
#include "format.hpp"
#include "svd.hpp"

namespace storyfear {

namespace {

// Sentence containing token index `idx`, falling forward when uncovered.
std::size_t sentence_at(const Story& story, std::size_t idx) {
    const auto& sentences = story.sentences;
    for (std::size_t s = 0; s < sentences.size(); ++s) {
        if (idx < sentences[s].second) {
            return s;  // covering sentence, or the nearest following one
        }
    }
    return sentences.size() - 1;
}

}  // namespace

StoryProfile sample_fear_profile(const Story& story, const FearScorer& scorer) {
    if (story.sentences.empty()) {
        throw ArgError("sample_fear_profile: story `" + story.id + "` has no sentences");
    }
    if (story.tokens.size() < 500) {
        throw ArgError("sample_fear_profile: story `" + story.id + "` has fewer than 500 tokens");
    }
    StoryProfile profile;
    profile.story_id = story.id;
    profile.kind = ProfileKind::Fear;
    const std::size_t t = story.tokens.size();
    for (std::size_t d = 0; d < kProfilePoints; ++d) {
        const std::size_t idx = d * t / 10;  // floor(p * T)
        profile.values[d] = scorer.score(story, sentence_at(story, idx));
    }
    return profile;
}

StoryProfile sample_sstop_profile(const Story& story, const SstopLexicon& lexicon,
                                  std::size_t width) {
    if (story.tokens.size() < 500) {
        throw ArgError("sample_sstop_profile: story `" + story.id +
                       "` has fewer than 500 tokens");
    }
    StoryProfile profile;
    profile.story_id = story.id;
    profile.kind = ProfileKind::Sstop;
    const std::size_t t = story.tokens.size();
    for (std::size_t d = 0; d < kProfilePoints; ++d) {
        profile.values[d] = score_window(story.tokens, d * t / 10, width, lexicon);
    }
    return profile;
}

Matrix profiles_to_matrix(const std::vector<StoryProfile>& profiles) {
    Matrix m(profiles.size(), kProfilePoints);
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        for (std::size_t j = 0; j < kProfilePoints; ++j) {
            m.at(i, j) = profiles[i].values[j];
        }
    }
    return m;
}

ModeDecomposition svd_decompose(const Matrix& m, std::vector<std::string> story_ids) {
    if (m.cols != kProfilePoints) {
        throw ArgError("svd_decompose: matrix must have 10 columns");
    }
    if (m.rows < kProfilePoints) {
        throw ArgError("svd_decompose: need at least 10 stories");
    }
    if (!story_ids.empty() && story_ids.size() != m.rows) {
        throw ArgError("svd_decompose: story id count does not match rows");
    }
    ThinSvd svd = jacobi_svd(m);  // validates finiteness
    ModeDecomposition d;
    d.modes = std::move(svd.modes);
    d.coefficients = std::move(svd.coefficients);
    d.singular_values = std::move(svd.singular_values);
    d.story_ids = std::move(story_ids);
    return d;
}

std::size_t dominant_mode(std::span<const double> w_row) {
    std::size_t arg = 0;
    for (std::size_t i = 1; i < w_row.size(); ++i) {
        if (std::fabs(w_row[i]) > std::fabs(w_row[arg])) arg = i;
    }
    return arg;
}

Matrix normalize_rows(const Matrix& w) {
    Matrix out = w;
    for (std::size_t r = 0; r < w.rows; ++r) {
        double max_mag = 0.0;
        for (std::size_t c = 0; c < w.cols; ++c) {
            max_mag = std::max(max_mag, std::fabs(w.at(r, c)));
        }
        if (max_mag == 0.0) continue;
        for (std::size_t c = 0; c < w.cols; ++c) out.at(r, c) /= max_mag;
    }
    return out;
}

std::vector<ModeAssignment> assign_modes(const ModeDecomposition& d) {
    const Matrix normalized = normalize_rows(d.coefficients);
    std::vector<ModeAssignment> assignments;
    assignments.reserve(d.coefficients.rows);
    for (std::size_t r = 0; r < d.coefficients.rows; ++r) {
        ModeAssignment a;
        a.story_id = r < d.story_ids.size() ? d.story_ids[r] : std::to_string(r);
        const std::span<const double> row{d.coefficients.data.data() + r * d.coefficients.cols,
                                          d.coefficients.cols};
        bool all_zero = true;
        for (double v : row) {
            if (v != 0.0) {
                all_zero = false;
                break;
            }
        }
        a.degenerate = all_zero;
        a.dominant = all_zero ? 0 : dominant_mode(row);
        for (std::size_t c = 0; c < kProfilePoints; ++c) {
            a.normalized_coeffs[c] = normalized.at(r, c);
        }
        assignments.push_back(std::move(a));
    }
    return assignments;
}

std::array<std::size_t, kProfilePoints> mode_histogram(
    const std::vector<ModeAssignment>& assignments) {
    std::array<std::size_t, kProfilePoints> hist{};
    for (const ModeAssignment& a : assignments) ++hist[a.dominant];
    return hist;
}

std::string profiles_to_csv(const std::vector<StoryProfile>& profiles) {
    std::string out = "story_id,kind";
    for (std::size_t i = 0; i < kProfilePoints; ++i) {
        out += ",v" + std::to_string(i);
    }
    out += '\n';
    for (const StoryProfile& p : profiles) {
        out += p.story_id;
        out += p.kind == ProfileKind::Fear ? ",fear" : ",sstop";
        for (double v : p.values) {
            out += ',';
            out += fmt_g17(v);
        }
        out += '\n';
    }
    return out;
}

std::string modes_to_csv(const ModeDecomposition& d) {
    std::string out = "mode,sigma";
    for (std::size_t i = 0; i < kProfilePoints; ++i) {
        out += ",u" + std::to_string(i);
    }
    out += '\n';
    for (std::size_t r = 0; r < d.modes.rows; ++r) {
        out += std::to_string(r) + "," + fmt_g17(d.singular_values[r]);
        for (std::size_t c = 0; c < d.modes.cols; ++c) {
            out += ',';
            out += fmt_g17(d.modes.at(r, c));
        }
        out += '\n';
    }
    return out;
}

std::string assignments_to_csv(const std::vector<ModeAssignment>& assignments) {
    std::string out = "story_id,dominant_mode";
    for (std::size_t i = 0; i < kProfilePoints; ++i) {
        out += ",c" + std::to_string(i);
    }
    out += '\n';
    for (const ModeAssignment& a : assignments) {
        out += a.story_id + "," + std::to_string(a.dominant);
        for (double v : a.normalized_coeffs) {
            out += ',';
            out += fmt_g17(v);
        }
        out += '\n';
    }
    return out;
}

ModesSummary summarize_modes(const std::vector<ModeAssignment>& fear,
                             const std::vector<ModeAssignment>& sstop) {
    if (fear.size() != sstop.size()) {
        throw ArgError("summarize_modes: metric assignment counts differ");
    }
    ModesSummary s;
    s.n = fear.size();
    s.fear_histogram = mode_histogram(fear);
    s.sstop_histogram = mode_histogram(sstop);

    std::vector<double> fear_dominant, sstop_dominant;
    std::vector<double> fear_coeffs, sstop_coeffs;
    for (std::size_t i = 0; i < fear.size(); ++i) {
        fear_dominant.push_back(static_cast<double>(fear[i].dominant));
        sstop_dominant.push_back(static_cast<double>(sstop[i].dominant));
        for (std::size_t c = 0; c < kProfilePoints; ++c) {
            fear_coeffs.push_back(std::fabs(fear[i].normalized_coeffs[c]));
            sstop_coeffs.push_back(std::fabs(sstop[i].normalized_coeffs[c]));
        }
    }
    try {
        s.dominant_spearman = spearman(fear_dominant, sstop_dominant);
        s.dominant_defined = true;
    } catch (const ArgError&) {
        s.dominant_defined = false;
    }
    try {
        s.coefficient_spearman = spearman(fear_coeffs, sstop_coeffs);
        s.coefficient_defined = true;
    } catch (const ArgError&) {
        s.coefficient_defined = false;
    }
    return s;
}

std::string summary_to_json(const ModesSummary& s) {
    nlohmann::json j;
    j["n"] = s.n;
    j["fear_histogram"] = s.fear_histogram;
    j["sstop_histogram"] = s.sstop_histogram;
    if (s.dominant_defined) {
        j["spearman"]["dominant_mode"] = {{"rho", s.dominant_spearman.rho},
                                          {"p_value", s.dominant_spearman.p_value},
                                          {"n", s.dominant_spearman.n}};
    } else {
        j["spearman"]["dominant_mode"] = nullptr;
    }
    if (s.coefficient_defined) {
        j["spearman"]["coefficients"] = {{"rho", s.coefficient_spearman.rho},
                                         {"p_value", s.coefficient_spearman.p_value},
                                         {"n", s.coefficient_spearman.n}};
    } else {
        j["spearman"]["coefficients"] = nullptr;
    }
    return j.dump(2) + "\n";
}

}  // namespace storyfear
