#include <algorithm>
#include <cmath>

#include "hyperred/numerics.hpp"

namespace hyperred {

namespace {

int order_for(double rho, const SeriesConfig& cfg) {
    if (rho <= 0) return 4;
    int m = static_cast<int>(std::ceil(std::log(1e-18) / std::log(rho)));
    return std::clamp(m, 8, std::max(cfg.max_order * 40, 4000));
}

// nested sum truncated at outer index M; backward dynamic program over
// suffix sums T_i(m) = sum_{j>m} x_i^j / j^{k_i} * T_{i+1}(j)
double mpl_truncated(const std::vector<int>& k, const std::vector<double>& x, int M) {
    const size_t n = k.size();
    std::vector<double> next(static_cast<size_t>(M) + 2, 1.0);
    std::vector<double> curr(static_cast<size_t>(M) + 2, 0.0);
    for (size_t i = n; i-- > 0;) {
        curr.assign(static_cast<size_t>(M) + 2, 0.0);
        double xp = 1;
        std::vector<double> term(static_cast<size_t>(M) + 1, 0.0);
        for (int j = 1; j <= M; ++j) {
            xp *= x[i];
            term[static_cast<size_t>(j)] =
                xp / std::pow(static_cast<double>(j), k[i]) * next[static_cast<size_t>(j)];
        }
        for (int m = M - 1; m >= 0; --m)
            curr[static_cast<size_t>(m)] =
                curr[static_cast<size_t>(m) + 1] + term[static_cast<size_t>(m) + 1];
        std::swap(next, curr);
    }
    return next[0];
}

} // namespace

NumericValue mpl(const std::vector<int>& weights, const std::vector<double>& args,
                 const SeriesConfig& cfg) {
    const size_t n = weights.size();
    if (n == 0 || args.size() != n)
        fail(ErrorCode::DegenerateInput, "weights and arguments must have equal length");
    // convergence is governed by the tail products prod_{j>=i} |x_j|
    double prod = 1;
    double rho = 0;
    for (size_t i = n; i-- > 0;) {
        prod *= std::fabs(args[i]);
        double limit = (i + 1 == n && weights[i] == 1) ? cfg.radius_guard : 1.0;
        if (!(prod < limit))
            fail(ErrorCode::ConvergenceGuard, "tail product of arguments too large");
        rho = std::max(rho, prod);
    }
    int M = order_for(rho, cfg);
    double v = mpl_truncated(weights, args, M);
    double half = mpl_truncated(weights, args, std::max(M / 2, 1));
    return {v, 3 * std::fabs(v - half) + 1e-15 * std::fabs(v)};
}

double li2(double z) { return mpl({2}, {z}).value; }
double li3(double z) { return mpl({3}, {z}).value; }

// sum_{n>=2} z^n H_{n-1} / n^2 with H the harmonic numbers
NumericValue nielsen_s12(double z, const SeriesConfig& cfg) {
    if (!(std::fabs(z) < 1))
        fail(ErrorCode::ConvergenceGuard, "argument must lie inside the unit disk");
    int M = order_for(std::fabs(z), cfg);
    auto partial = [&](int lim) {
        double s = 0, h = 1, zp = z;
        for (int n = 2; n <= lim; ++n) {
            zp *= z;
            s += zp * h / (static_cast<double>(n) * n);
            h += 1.0 / n;
        }
        return s;
    };
    double v = partial(M);
    return {v, 3 * std::fabs(v - partial(std::max(M / 2, 2))) + 1e-15 * std::fabs(v)};
}

// closed form of the all-unit-parameter case: a rational combination of the
// logarithms log(1 - z_i)
NumericValue fd_one_one_two(const std::vector<double>& z) {
    const size_t r = z.size();
    if (r == 0) fail(ErrorCode::DegenerateInput, "need at least one argument");
    for (size_t i = 0; i < r; ++i) {
        if (!(z[i] < 1) || z[i] == 0)
            fail(ErrorCode::DegenerateInput, "arguments must be nonzero and below 1");
        for (size_t j = i + 1; j < r; ++j)
            if (z[i] == z[j])
                fail(ErrorCode::CoincidentArguments, "arguments must be pairwise distinct");
    }
    double s = 0;
    for (size_t i = 0; i < r; ++i) {
        double coef = std::pow(z[i], static_cast<double>(r) - 2);
        for (size_t j = 0; j < r; ++j)
            if (j != i) coef /= z[i] - z[j];
        s -= coef * std::log1p(-z[i]);
    }
    return {s, 1e-14 * std::fabs(s)};
}

} // namespace hyperred
