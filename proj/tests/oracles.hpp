#pragma once

// Independent reference implementations used only by tests. These stay
// deliberately naive (different data structures and algebra than the library)
// so agreement is meaningful.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "matrix.hpp"

namespace oracle {

// Brute-force SSToP recount: std::map tallies over every token, then the
// relative-frequency ratio, word by word.
struct LexiconRow {
    std::string word;
    std::uint64_t count_scary = 0;
    std::uint64_t count_baseline = 0;
    double score = 0.0;
};

std::vector<LexiconRow> sstop_recount(const std::vector<storyfear::Story>& scary,
                                      const std::vector<storyfear::Story>& baseline,
                                      std::uint64_t min_occurrence);

// CSV with the same layout the library exports, built with separate code.
std::string sstop_csv(const std::vector<LexiconRow>& rows);

// O(n^2) pairwise concordance AUC, ties worth one half.
double pairwise_auc(const std::vector<double>& scores, const std::vector<int>& labels);

// Tie-corrected rank-difference formula:
//   rho = (C - Tx - Ty - sum d^2) / sqrt((C - 2 Tx)(C - 2 Ty)),  C = (n^3-n)/6
double spearman_rank_formula(const std::vector<double>& x, const std::vector<double>& y);

// Classic two-sided Jacobi eigendecomposition of a symmetric matrix; returns
// eigenvalues (descending) and matching eigenvectors as rows.
struct SymEigen {
    std::vector<double> values;
    storyfear::Matrix vectors;  // row i is the eigenvector of values[i]
};
SymEigen jacobi_sym_eigen(const storyfear::Matrix& sym);

// Singular values via eigenvalues of M^T M.
std::vector<double> singular_values_via_gram(const storyfear::Matrix& m);

// Largest principal angle (radians) between the row spans of two p x n
// orthonormal-row matrices.
double largest_principal_angle(const storyfear::Matrix& p, const storyfear::Matrix& q);

}  // namespace oracle
