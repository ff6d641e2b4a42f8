#pragma once

#include <cstdint>
#include <vector>

namespace storyfear {

// Average (fractional) ranks, 1-based; tied values share the mean of their
// rank positions.
std::vector<double> fractional_ranks(const std::vector<double>& values);

// Probability that a random positive outscores a random negative, ties
// counted half (Mann-Whitney rank-sum form). Requires both classes present.
double roc_auc(const std::vector<double>& scores, const std::vector<int>& labels);

struct SpearmanResult {
    double rho = 0.0;
    double p_value = 1.0;  // two-sided, t approximation with n-2 df
    std::size_t n = 0;
};

// Pearson correlation of fractionally-ranked data. Inputs need equal length
// >= 2 and nonzero rank variance on both sides.
SpearmanResult spearman(const std::vector<double>& x, const std::vector<double>& y);

// Two-sided p for a t statistic with df degrees of freedom.
double student_t_two_sided_p(double t, double df);

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double incomplete_beta(double a, double b, double x);

}  // namespace storyfear
