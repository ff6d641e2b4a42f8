#pragma once

#include <array>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "lexicon.hpp"
#include "matrix.hpp"
#include "metrics.hpp"
#include "scorer.hpp"

namespace storyfear {

inline constexpr std::size_t kProfilePoints = 10;  // deciles 0%..90%

enum class ProfileKind { Fear, Sstop };

struct StoryProfile {
    std::string story_id;
    ProfileKind kind = ProfileKind::Fear;
    std::array<double, kProfilePoints> values{};
};

// Scores, at each decile p, the sentence containing token floor(p*T). An
// index that no sentence covers falls forward to the next sentence (or the
// last one when none follows).
StoryProfile sample_fear_profile(const Story& story, const FearScorer& scorer);

// Mean SSToP over the `width` tokens after each decile point.
StoryProfile sample_sstop_profile(const Story& story, const SstopLexicon& lexicon,
                                  std::size_t width = 50);

struct ModeDecomposition {
    Matrix modes;                         // U: 10x10, rows orthonormal
    Matrix coefficients;                  // W: N x 10
    std::vector<double> singular_values;  // non-increasing
    std::vector<std::string> story_ids;   // length N
};

// Thin SVD M = W U of the stacked profile matrix; no mean-centering. Requires
// N >= 10 and finite entries.
ModeDecomposition svd_decompose(const Matrix& m, std::vector<std::string> story_ids);

Matrix profiles_to_matrix(const std::vector<StoryProfile>& profiles);

// Index of the largest-magnitude coefficient; ties go to the lower index.
std::size_t dominant_mode(std::span<const double> w_row);

// Each row divided by its largest-magnitude element (sign preserved); zero
// rows pass through unchanged.
Matrix normalize_rows(const Matrix& w);

struct ModeAssignment {
    std::string story_id;
    std::size_t dominant = 0;
    std::array<double, kProfilePoints> normalized_coeffs{};
    bool degenerate = false;  // all-zero coefficient row, assigned mode 0
};

std::vector<ModeAssignment> assign_modes(const ModeDecomposition& d);

std::array<std::size_t, kProfilePoints> mode_histogram(
    const std::vector<ModeAssignment>& assignments);

// CSV/ JSON exports used by the pipeline.
std::string profiles_to_csv(const std::vector<StoryProfile>& profiles);
std::string modes_to_csv(const ModeDecomposition& d);
std::string assignments_to_csv(const std::vector<ModeAssignment>& assignments);

struct ModesSummary {
    std::size_t n = 0;
    std::array<std::size_t, kProfilePoints> fear_histogram{};
    std::array<std::size_t, kProfilePoints> sstop_histogram{};
    // Correlation between per-story dominant-mode indices of the two metrics,
    // plus the variant over flattened normalized coefficient magnitudes.
    SpearmanResult dominant_spearman;
    SpearmanResult coefficient_spearman;
    bool dominant_defined = false;
    bool coefficient_defined = false;
};

ModesSummary summarize_modes(const std::vector<ModeAssignment>& fear,
                             const std::vector<ModeAssignment>& sstop);

std::string summary_to_json(const ModesSummary& s);

}  // namespace storyfear
