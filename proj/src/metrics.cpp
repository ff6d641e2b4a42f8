#include "metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "error.hpp"

namespace storyfear {

std::vector<double> fractional_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return values[a] < values[b];
    });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        // positions i..j (0-based) share rank mean: (i+1 + j+1) / 2
        const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
        i = j + 1;
    }
    return ranks;
}

double roc_auc(const std::vector<double>& scores, const std::vector<int>& labels) {
    if (scores.size() != labels.size()) {
        throw ArgError("roc_auc: scores/labels length mismatch");
    }
    std::size_t n_pos = 0, n_neg = 0;
    for (int y : labels) (y != 0 ? n_pos : n_neg)++;
    if (n_pos == 0 || n_neg == 0) {
        throw ArgError("roc_auc: both classes must be present");
    }
    const std::vector<double> ranks = fractional_ranks(scores);
    double rank_sum_pos = 0.0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != 0) rank_sum_pos += ranks[i];
    }
    const double np = static_cast<double>(n_pos);
    const double nn = static_cast<double>(n_neg);
    return (rank_sum_pos - np * (np + 1.0) / 2.0) / (np * nn);
}

SpearmanResult spearman(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw ArgError("spearman: length mismatch");
    const std::size_t n = x.size();
    if (n < 2) throw ArgError("spearman: need at least 2 observations");

    const std::vector<double> rx = fractional_ranks(x);
    const std::vector<double> ry = fractional_ranks(y);

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = rx[i] - mx;
        const double dy = ry[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw ArgError("spearman: constant input, correlation undefined");
    }

    SpearmanResult result;
    result.n = n;
    result.rho = sxy / std::sqrt(sxx * syy);
    if (n <= 2 || result.rho >= 1.0 || result.rho <= -1.0) {
        result.p_value = (result.rho >= 1.0 || result.rho <= -1.0) ? 0.0 : 1.0;
        return result;
    }
    const double df = static_cast<double>(n - 2);
    const double t = result.rho * std::sqrt(df / (1.0 - result.rho * result.rho));
    result.p_value = student_t_two_sided_p(t, df);
    return result;
}

namespace {

// ln Gamma, Lanczos approximation.
double ln_gamma(double z) {
    static const double g[6] = {76.18009172947146,  -86.50532032941677,
                                24.01409824083091,  -1.231739572450155,
                                0.1208650973866179e-2, -0.5395239384953e-5};
    double x = z, y = z;
    double tmp = x + 5.5;
    tmp -= (x + 0.5) * std::log(tmp);
    double ser = 1.000000000190015;
    for (double c : g) ser += c / ++y;
    return -tmp + std::log(2.5066282746310005 * ser / x);
}

// Continued fraction for the incomplete beta (modified Lentz).
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-16;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) +
                            a * std::log(x) + b * std::log(1.0 - x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * betacf(a, b, x) / a;
    }
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double df) {
    if (!std::isfinite(t)) return 0.0;
    const double x = df / (df + t * t);
    double p = incomplete_beta(df / 2.0, 0.5, x);
    if (p < 0.0) p = 0.0;
    if (p > 1.0) p = 1.0;
    return p;
}

}  // namespace storyfear
