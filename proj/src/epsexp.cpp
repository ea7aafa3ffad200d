#include <cmath>

#include "hyperred/numerics.hpp"

namespace hyperred {

namespace {

struct Acc {
    double v = 0, e = 0;
    void add(double coef, const NumericValue& t) {
        v += coef * t.value;
        e += std::fabs(coef) * t.est_error;
    }
    void add(double x) { v += x; }
    NumericValue done() const { return {v, e}; }
};

NumericValue L(std::vector<int> k, std::vector<double> x) { return mpl(k, x); }

// eps^4 coefficient of theta_1 applied to the expansion, two variables,
// divided out prefactor a*b1 is NOT divided here: full coefficient returned
double omega1_4_two(double a, double b1, double b2, double c, double x, double y,
                    double& err) {
    double d1 = a - c + b1, d2 = a - c + b2;
    Acc s;
    s.add(d1 * d1, L({1, 1, 1}, {1, 1, x}));
    s.add(a * b1 - c * d1, L({2, 1}, {1, x}));
    s.add(-c * d1, L({1, 2}, {1, x}));
    s.add(c * c, L({3}, {x}));
    s.add(b2 * d1, L({1, 1, 1}, {y / x, 1, x}));
    s.add(b2 * d2, L({1, 1, 1}, {1, y / x, x}));
    s.add(b1 * b2, L({1, 1, 1}, {x / y, y / x, x}));
    s.add(-c * b2, L({1, 2}, {y / x, x}));
    s.add((a - c) * b2, L({2, 1}, {y / x, x}));
    err += s.e;
    return a * b1 * s.v;
}

// increment when a trailing variable z_r is appended; divided-out prefactor
// a*b1*br is applied by the caller
double omega1_4_step(double a, double c, const std::vector<double>& b,
                     const std::vector<double>& z, size_t r, double& err) {
    double z1 = z[0], zr = z[r - 1];
    Acc s;
    double li1 = -std::log1p(-zr / z1);
    s.add((a - c) * li1, L({1, 1}, {1, z1}));
    s.add(-(a - c), L({1, 1, 1}, {1, z1, zr / z1}));
    s.add(-(a - c), L({1, 2}, {1, zr}));
    s.add(b[r - 1], L({1, 1, 1}, {1, zr / z1, z1}));
    s.add(-c, L({1, 2}, {zr / z1, z1}));
    s.add(b[0], L({1, 1, 1}, {z1 / zr, zr / z1, z1}));
    s.add(b[0], L({1, 1, 1}, {zr / z1, 1, z1}));
    for (size_t j = 1; j + 1 < r; ++j) {
        s.add(b[j], L({1, 1, 1}, {z[j] / zr, zr / z1, z1}));
        s.add(b[j], L({1, 1, 1}, {zr / z[j], z[j] / z1, z1}));
    }
    err += s.e;
    return s.v;
}

} // namespace

NumericValue eps_coeffs_fd(int order, EpsSlot slot, int theta_j, const FdNumeric& p,
                           const std::vector<double>& z) {
    const int r = p.r();
    if (r < 1 || static_cast<int>(z.size()) != r)
        fail(ErrorCode::DegenerateInput, "argument arity does not match parameters");
    const double a = p.a, c = p.c;
    const auto& b = p.b;

    if (order == 2 && slot == EpsSlot::Value) {
        Acc s;
        for (int j = 0; j < r; ++j)
            s.add(a * b[static_cast<size_t>(j)], mpl({2}, {z[static_cast<size_t>(j)]}));
        return s.done();
    }
    if (order == 2 && slot == EpsSlot::Theta) {
        double v = -a * b[static_cast<size_t>(theta_j - 1)] *
                   std::log1p(-z[static_cast<size_t>(theta_j - 1)]);
        return {v, 1e-14 * std::fabs(v)};
    }
    if (order == 3 && slot == EpsSlot::Value) {
        Acc s;
        for (int j = 0; j < r; ++j) {
            double bj = b[static_cast<size_t>(j)], zj = z[static_cast<size_t>(j)];
            s.add(a * (a - c + bj) * bj, nielsen_s12(zj));
            s.add(-a * c * bj, mpl({3}, {zj}));
        }
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
                double w = a * b[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
                double zi = z[static_cast<size_t>(i)], zj = z[static_cast<size_t>(j)];
                s.add(w, mpl({1, 2}, {zi / zj, zj}));
                s.add(w, mpl({1, 2}, {zj / zi, zi}));
            }
        return s.done();
    }
    if (order == 3 && slot == EpsSlot::Theta) {
        size_t j = static_cast<size_t>(theta_j - 1);
        double lj = std::log1p(-z[j]);
        Acc s;
        s.add(a * b[j] * 0.5 * (a + b[j] - c) * lj * lj);
        s.add(-a * b[j] * c, mpl({2}, {z[j]}));
        for (size_t k = 0; k < static_cast<size_t>(r); ++k) {
            if (k == j) continue;
            s.add(a * b[j] * b[k], mpl({1, 1}, {z[k] / z[j], z[j]}));
        }
        return s.done();
    }
    if (order == 4 && slot == EpsSlot::Theta && theta_j == 1 && r >= 2) {
        // requires strictly decreasing z so every argument ratio used in the
        // nested sums stays inside the convergence region
        for (int i = 1; i < r; ++i)
            if (!(z[static_cast<size_t>(i)] < z[static_cast<size_t>(i - 1)]))
                fail(ErrorCode::ConvergenceGuard,
                     "arguments must be strictly decreasing for this coefficient");
        double err = 0;
        double v = omega1_4_two(a, b[0], b[1], c, z[0], z[1], err);
        for (size_t k = 3; k <= static_cast<size_t>(r); ++k)
            v += a * b[0] * b[k - 1] * omega1_4_step(a, c, b, z, k, err);
        return {v, err};
    }
    fail(ErrorCode::UnsupportedOrderSlot, "no closed form for this order and slot");
}

NumericValue f3_series(const std::array<double, 2>& a, const std::array<double, 2>& b,
                       double c, const std::array<double, 2>& z, const SeriesConfig& cfg) {
    const int N = cfg.max_order;
    for (double zi : z)
        if (std::fabs(zi) > cfg.radius_guard)
            fail(ErrorCode::RadiusExceeded, "argument outside the series radius guard");
    for (int k = 0; k < N; ++k)
        if (std::fabs(c + k) < 1e-12)
            fail(ErrorCode::PoleInPochhammer,
                 "lower parameter hits a pole within the truncation order");
    std::vector<double> invc(static_cast<size_t>(N) + 1);
    invc[0] = 1;
    for (int n = 1; n <= N; ++n) invc[n] = invc[n - 1] / (c + (n - 1));
    std::vector<double> order_abs(static_cast<size_t>(N) + 1, 0.0);
    double total = 0, total_abs = 0;
    double f1 = 1;
    for (int m = 0; m <= N; ++m) {
        if (m > 0) f1 *= (a[0] + (m - 1)) * (b[0] + (m - 1)) * z[0] / m;
        double f2 = 1;
        for (int n = 0; m + n <= N; ++n) {
            if (n > 0) f2 *= (a[1] + (n - 1)) * (b[1] + (n - 1)) * z[1] / n;
            double t = f1 * f2 * invc[m + n];
            total += t;
            total_abs += std::fabs(t);
            order_abs[static_cast<size_t>(m + n)] += std::fabs(t);
        }
    }
    double rho = std::max(std::fabs(z[0]), std::fabs(z[1]));
    double est = 0;
    if (rho > 0 && rho < 1)
        est = 3.0 * order_abs[static_cast<size_t>(N)] * rho / (1.0 - rho);
    return {total, est + 16 * 2.220446049250313e-16 * total_abs};
}

std::pair<NumericValue, NumericValue> eps_coeffs_f3(const std::array<double, 2>& a,
                                                    const std::array<double, 2>& b, double c,
                                                    const std::array<double, 2>& z) {
    Acc s2, s3;
    for (int j = 0; j < 2; ++j) {
        size_t sj = static_cast<size_t>(j);
        s2.add(a[sj] * b[sj], mpl({2}, {z[sj]}));
        s3.add(a[sj] * b[sj] * (a[sj] + b[sj] - c), nielsen_s12(z[sj]));
        s3.add(-a[sj] * b[sj] * c, mpl({3}, {z[sj]}));
    }
    return {s2.done(), s3.done()};
}

} // namespace hyperred
