#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace oracle {

using storyfear::Matrix;
using storyfear::Story;

std::vector<LexiconRow> sstop_recount(const std::vector<Story>& scary,
                                      const std::vector<Story>& baseline,
                                      std::uint64_t min_occurrence) {
    std::map<std::string, std::uint64_t> scary_counts, baseline_counts;
    std::uint64_t scary_total = 0, baseline_total = 0;
    for (const Story& s : scary) {
        for (const std::string& tok : s.tokens) {
            ++scary_counts[tok];
            ++scary_total;
        }
    }
    for (const Story& s : baseline) {
        for (const std::string& tok : s.tokens) {
            ++baseline_counts[tok];
            ++baseline_total;
        }
    }

    std::vector<LexiconRow> rows;
    for (const auto& [word, cs] : scary_counts) {
        const auto it = baseline_counts.find(word);
        if (it == baseline_counts.end()) continue;
        const std::uint64_t cb = it->second;
        if (cs + cb < min_occurrence) continue;
        LexiconRow row;
        row.word = word;
        row.count_scary = cs;
        row.count_baseline = cb;
        // f_scary/f_baseline evaluated as the library defines it: one division
        // of exact cross-products, canonicalized toward the >= 1 direction.
        const double p = static_cast<double>(cs) * static_cast<double>(baseline_total);
        const double q = static_cast<double>(cb) * static_cast<double>(scary_total);
        row.score = p == q ? 1.0 : (p > q ? p / q : 1.0 / (q / p));
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const LexiconRow& a, const LexiconRow& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.word < b.word;
    });
    return rows;
}

std::string sstop_csv(const std::vector<LexiconRow>& rows) {
    std::string out = "word,count_scary,count_baseline,score\n";
    char buf[64];
    for (const LexiconRow& row : rows) {
        std::snprintf(buf, sizeof buf, "%llu,%llu,%.17g",
                      static_cast<unsigned long long>(row.count_scary),
                      static_cast<unsigned long long>(row.count_baseline), row.score);
        out += row.word;
        out += ',';
        out += buf;
        out += '\n';
    }
    return out;
}

double pairwise_auc(const std::vector<double>& scores, const std::vector<int>& labels) {
    double wins = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (labels[i] == 0) continue;
        for (std::size_t j = 0; j < scores.size(); ++j) {
            if (labels[j] != 0) continue;
            ++pairs;
            if (scores[i] > scores[j]) wins += 1.0;
            else if (scores[i] == scores[j]) wins += 0.5;
        }
    }
    return wins / static_cast<double>(pairs);
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        for (std::size_t t = i; t <= j; ++t) {
            ranks[order[t]] = 1.0 + (static_cast<double>(i) + static_cast<double>(j)) / 2.0;
        }
        i = j + 1;
    }
    return ranks;
}

double tie_term(const std::vector<double>& v) {
    std::vector<double> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    double total = 0.0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        total += (t * t * t - t) / 12.0;
        i = j + 1;
    }
    return total;
}

}  // namespace

double spearman_rank_formula(const std::vector<double>& x,
                             const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    const std::vector<double> rx = average_ranks(x);
    const std::vector<double> ry = average_ranks(y);
    double d2 = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        const double d = rx[i] - ry[i];
        d2 += d * d;
    }
    const double c = (n * n * n - n) / 6.0;
    const double tx = tie_term(x);
    const double ty = tie_term(y);
    return (c - tx - ty - d2) / std::sqrt((c - 2.0 * tx) * (c - 2.0 * ty));
}

SymEigen jacobi_sym_eigen(const Matrix& sym) {
    const std::size_t n = sym.rows;
    Matrix a = sym;
    Matrix v = Matrix::identity(n);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) off += a.at(p, q) * a.at(p, q);
        }
        if (off < 1e-30) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a.at(p, q) == 0.0) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * a.at(p, q));
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a.at(i, p);
                    const double aiq = a.at(i, q);
                    a.at(i, p) = c * aip - s * aiq;
                    a.at(i, q) = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = a.at(p, i);
                    const double aqi = a.at(q, i);
                    a.at(p, i) = c * api - s * aqi;
                    a.at(q, i) = s * api + c * aqi;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = v.at(i, p);
                    const double viq = v.at(i, q);
                    v.at(i, p) = c * vip - s * viq;
                    v.at(i, q) = s * vip + c * viq;
                }
            }
        }
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a.at(x, x) > a.at(y, y); });
    SymEigen out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = a.at(order[i], order[i]);
        for (std::size_t r = 0; r < n; ++r) out.vectors.at(i, r) = v.at(r, order[i]);
    }
    return out;
}

std::vector<double> singular_values_via_gram(const Matrix& m) {
    Matrix gram(m.cols, m.cols);
    for (std::size_t i = 0; i < m.cols; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            double s = 0.0;
            for (std::size_t r = 0; r < m.rows; ++r) s += m.at(r, i) * m.at(r, j);
            gram.at(i, j) = s;
        }
    }
    const SymEigen eig = jacobi_sym_eigen(gram);
    std::vector<double> sigma(eig.values.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        sigma[i] = std::sqrt(std::max(0.0, eig.values[i]));
    }
    return sigma;
}

double largest_principal_angle(const Matrix& p, const Matrix& q) {
    // cos of the principal angles = singular values of P Q^T
    Matrix overlap(p.rows, q.rows);
    for (std::size_t i = 0; i < p.rows; ++i) {
        for (std::size_t j = 0; j < q.rows; ++j) {
            double s = 0.0;
            for (std::size_t c = 0; c < p.cols; ++c) s += p.at(i, c) * q.at(j, c);
            overlap.at(i, j) = s;
        }
    }
    const std::vector<double> sigma = singular_values_via_gram(overlap);
    double min_cos = 1.0;
    for (double s : sigma) min_cos = std::min(min_cos, std::min(1.0, s));
    return std::acos(min_cos);
}

}  // namespace oracle
