#include <cmath>
#include <functional>

#include "hyperred/numerics.hpp"

namespace hyperred {

namespace {

double poch(double a, int n) {
    double p = 1;
    for (int k = 0; k < n; ++k) p *= a + k;
    return p;
}

void guard_args(const std::vector<double>& z, double guard) {
    for (double zi : z)
        if (std::fabs(zi) > guard)
            fail(ErrorCode::RadiusExceeded, "argument outside the series radius guard");
}

NumericValue finish(double total, double total_abs, double last_abs, double rho) {
    double est = 0;
    if (rho > 0 && rho < 1) est = 3.0 * last_abs * rho / (1.0 - rho);
    return {total, est + 16 * 2.220446049250313e-16 * total_abs};
}

// common driver: sum over multi-indices r_1..r_k with |r| <= N of
// prod_i ratio_i(S_i) * z_i^{r_i}, where S_i is the suffix sum r_i+...+r_k
NumericValue suffix_ratio_series(const std::vector<double>& z,
                                 const std::function<double(int, int)>& ratio,
                                 const SeriesConfig& cfg) {
    const int k = static_cast<int>(z.size());
    const int N = cfg.max_order;
    std::vector<double> order_abs(static_cast<size_t>(N) + 1, 0.0);
    double total = 0, total_abs = 0;
    // recurse from the last index inward so the suffix sum is available
    std::function<void(int, int, double)> rec = [&](int i, int suffix, double prod) {
        if (i == 0) {
            total += prod;
            total_abs += std::fabs(prod);
            order_abs[static_cast<size_t>(suffix)] += std::fabs(prod);
            return;
        }
        double zp = 1;
        for (int ri = 0; suffix + ri <= N; ++ri) {
            if (ri > 0) zp *= z[static_cast<size_t>(i - 1)];
            rec(i - 1, suffix + ri, prod * ratio(i, suffix + ri) * zp);
        }
    };
    rec(k, 0, 1.0);
    double rho = 0;
    for (double zi : z) rho = std::max(rho, std::fabs(zi));
    return finish(total, total_abs, order_abs[static_cast<size_t>(N)], rho);
}

} // namespace

NumericValue feynman_h_series(int n_legs, double d, const std::vector<double>& z,
                              const SeriesConfig& cfg) {
    if (n_legs < 2 || static_cast<int>(z.size()) != n_legs - 1)
        fail(ErrorCode::DegenerateInput, "need n_legs - 1 arguments");
    guard_args(z, cfg.radius_guard);
    auto ratio = [d](int i, int s) { return poch((d - i) / 2, s) / poch((d - i + 1) / 2, s); };
    return suffix_ratio_series(z, ratio, cfg);
}

NumericValue offshell_series(int n_legs, double d, const std::vector<double>& z,
                             const SeriesConfig& cfg) {
    if (n_legs < 3 || static_cast<int>(z.size()) != n_legs - 2)
        fail(ErrorCode::DegenerateInput, "need n_legs - 2 arguments");
    guard_args(z, cfg.radius_guard);
    auto ratio = [d](int i, int s) {
        return poch((d - 1 - i) / 2, s) / poch((d - i) / 2, s);
    };
    return suffix_ratio_series(z, ratio, cfg);
}

NumericValue hyperb_series(int n_legs, double d, const std::vector<double>& x,
                           const SeriesConfig& cfg) {
    if (n_legs < 2 || static_cast<int>(x.size()) != n_legs - 1)
        fail(ErrorCode::DegenerateInput, "need n_legs - 1 arguments");
    guard_args(x, cfg.radius_guard);
    const int k = n_legs - 1;
    const int N = cfg.max_order;
    std::vector<double> order_abs(static_cast<size_t>(N) + 1, 0.0);
    double total = 0, total_abs = 0;
    // prefix sums this time: factor i is (i/2 + r_1 + ... + r_{i-1})_{r_i}
    std::function<void(int, int, double)> rec = [&](int i, int prefix, double prod) {
        if (i > k) {
            double t = prod / poch(d / 2, prefix);
            total += t;
            total_abs += std::fabs(t);
            order_abs[static_cast<size_t>(prefix)] += std::fabs(t);
            return;
        }
        double xp = 1;
        for (int ri = 0; prefix + ri <= N; ++ri) {
            if (ri > 0) xp *= x[static_cast<size_t>(i - 1)];
            rec(i + 1, prefix + ri, prod * poch(i / 2.0 + prefix, ri) * xp);
        }
    };
    rec(1, 0, 1.0);
    double rho = 0;
    for (double xi : x) rho = std::max(rho, std::fabs(xi));
    return finish(total, total_abs, order_abs[static_cast<size_t>(N)], rho);
}

} // namespace hyperred
