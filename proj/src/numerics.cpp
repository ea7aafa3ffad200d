#include "hyperred/numerics.hpp"

#include <cmath>
#include <functional>

#include "hyperred/xreal.hpp"

namespace hyperred {

namespace {

double to_dbl(double x) { return x; }
double to_dbl(const XReal& x) { return x.to_double(); }

void check_radius(const std::vector<double>& z, double guard) {
    for (double zi : z)
        if (std::fabs(zi) > guard)
            fail(ErrorCode::RadiusExceeded, "argument outside the series radius guard");
}

void check_lower_pole(double c, int max_order) {
    for (int k = 0; k < max_order; ++k)
        if (std::fabs(c + k) < 1e-12)
            fail(ErrorCode::PoleInPochhammer,
                 "lower parameter hits a pole within the truncation order");
}

// truncation estimate for a power series summed through order N: the last
// order decays roughly geometrically with ratio rho
double tail_estimate(double last_abs, double total_abs, double rho) {
    double est = 0;
    if (rho > 0 && rho < 1) est = 3.0 * last_abs * rho / (1.0 - rho);
    return est + 16 * 2.220446049250313e-16 * total_abs;
}

template <class R>
NumericValue fd_sum(const FdNumeric& p, const std::vector<double>& z, const ThetaMono* w,
                    const SeriesConfig& cfg) {
    const int r = p.r();
    const int N = cfg.max_order;
    std::vector<R> ac(static_cast<size_t>(N) + 1);
    ac[0] = R(1);
    for (int n = 1; n <= N; ++n)
        ac[n] = ac[n - 1] * R(p.a + (n - 1)) / R(p.c + (n - 1));

    std::vector<R> order_sum(static_cast<size_t>(N) + 1, R(0));
    std::vector<double> order_abs(static_cast<size_t>(N) + 1, 0.0);
    std::function<void(int, int, const R&)> rec = [&](int j, int msum, const R& pp) {
        if (j == r) {
            R t = ac[msum] * pp;
            order_sum[msum] += t;
            order_abs[msum] += std::fabs(to_dbl(t));
            return;
        }
        R f(1);
        for (int m = 0; msum + m <= N; ++m) {
            if (m > 0) f = f * R(p.b[static_cast<size_t>(j)] + (m - 1)) *
                           R(z[static_cast<size_t>(j)]) / R(m);
            if (w && (*w)[static_cast<size_t>(j)] > 0) {
                if (m == 0) continue;
                double wm = 1;
                for (unsigned q = 0; q < (*w)[static_cast<size_t>(j)]; ++q) wm *= m;
                rec(j + 1, msum + m, pp * f * R(wm));
            } else {
                rec(j + 1, msum + m, pp * f);
            }
        }
    };
    rec(0, 0, R(1));

    R total(0);
    double total_abs = 0;
    for (int n = 0; n <= N; ++n) {
        total += order_sum[n];
        total_abs += order_abs[n];
    }
    double rho = 0;
    for (double zi : z) rho = std::max(rho, std::fabs(zi));
    return {to_dbl(total), tail_estimate(order_abs[static_cast<size_t>(N)], total_abs, rho)};
}

template <class R>
NumericValue fs_sum(const FsNumeric& p, const std::array<double, 3>& z, const ThetaMono* w,
                    const SeriesConfig& cfg) {
    const int N = cfg.max_order;
    std::vector<R> invc(static_cast<size_t>(N) + 1);
    invc[0] = R(1);
    for (int n = 1; n <= N; ++n) invc[n] = invc[n - 1] / R(p.c + (n - 1));

    auto weight = [&](int slot, int m) -> double {
        if (!w || (*w)[static_cast<size_t>(slot)] == 0) return 1;
        double wm = 1;
        for (unsigned q = 0; q < (*w)[static_cast<size_t>(slot)]; ++q) wm *= m;
        return wm;
    };

    std::vector<R> order_sum(static_cast<size_t>(N) + 1, R(0));
    std::vector<double> order_abs(static_cast<size_t>(N) + 1, 0.0);
    R f1(1); // (a1)_{m1} (b1)_{m1} z1^{m1} / m1!
    for (int m1 = 0; m1 <= N; ++m1) {
        if (m1 > 0)
            f1 = f1 * R(p.a1 + (m1 - 1)) * R(p.b[0] + (m1 - 1)) * R(z[0]) / R(m1);
        double w1 = weight(0, m1);
        if (w1 == 0) continue;
        R f2(1);       // (b2)_{m2} z2^{m2} / m2!
        R pa2_m2(1);   // (a2)_{m2}
        for (int m2 = 0; m1 + m2 <= N; ++m2) {
            if (m2 > 0) {
                f2 = f2 * R(p.b[1] + (m2 - 1)) * R(z[1]) / R(m2);
                pa2_m2 = pa2_m2 * R(p.a2 + (m2 - 1));
            }
            double w2 = weight(1, m2);
            if (w2 == 0) continue;
            R f3(1);        // (b3)_{m3} z3^{m3} / m3!
            R pa2 = pa2_m2; // (a2)_{m2+m3}
            for (int m3 = 0; m1 + m2 + m3 <= N; ++m3) {
                if (m3 > 0) {
                    f3 = f3 * R(p.b[2] + (m3 - 1)) * R(z[2]) / R(m3);
                    pa2 = pa2 * R(p.a2 + (m2 + m3 - 1));
                }
                double w3 = weight(2, m3);
                if (w3 == 0) continue;
                R t = f1 * f2 * f3 * pa2 * invc[m1 + m2 + m3] * R(w1 * w2 * w3);
                order_sum[m1 + m2 + m3] += t;
                order_abs[m1 + m2 + m3] += std::fabs(to_dbl(t));
            }
        }
    }

    R total(0);
    double total_abs = 0;
    for (int n = 0; n <= N; ++n) {
        total += order_sum[n];
        total_abs += order_abs[n];
    }
    double rho = std::max({std::fabs(z[0]), std::fabs(z[1]), std::fabs(z[2])});
    return {to_dbl(total), tail_estimate(order_abs[static_cast<size_t>(N)], total_abs, rho)};
}

} // namespace

NumericValue fd_series(const FdNumeric& p, const std::vector<double>& z,
                       const SeriesConfig& cfg) {
    if (p.r() < 1 || static_cast<int>(z.size()) != p.r())
        fail(ErrorCode::DegenerateInput, "argument arity does not match parameters");
    check_radius(z, cfg.radius_guard);
    check_lower_pole(p.c, cfg.max_order);
    if (cfg.mode == SeriesConfig::Mode::Extended) return fd_sum<XReal>(p, z, nullptr, cfg);
    return fd_sum<double>(p, z, nullptr, cfg);
}

NumericValue fd_diff_series(const ThetaMono& which, const FdNumeric& p,
                            const std::vector<double>& z, const SeriesConfig& cfg) {
    if (p.r() < 1 || static_cast<int>(z.size()) != p.r() ||
        static_cast<int>(which.size()) != p.r())
        fail(ErrorCode::DegenerateInput, "argument arity does not match parameters");
    check_radius(z, cfg.radius_guard);
    check_lower_pole(p.c, cfg.max_order);
    if (cfg.mode == SeriesConfig::Mode::Extended) return fd_sum<XReal>(p, z, &which, cfg);
    return fd_sum<double>(p, z, &which, cfg);
}

NumericValue fs_series(const FsNumeric& p, const std::array<double, 3>& z,
                       const SeriesConfig& cfg) {
    check_radius({z[0], z[1], z[2]}, cfg.radius_guard);
    check_lower_pole(p.c, cfg.max_order);
    if (cfg.mode == SeriesConfig::Mode::Extended) return fs_sum<XReal>(p, z, nullptr, cfg);
    return fs_sum<double>(p, z, nullptr, cfg);
}

NumericValue fs_diff_series(const ThetaMono& which, const FsNumeric& p,
                            const std::array<double, 3>& z, const SeriesConfig& cfg) {
    if (which.size() != 3)
        fail(ErrorCode::DegenerateInput, "differentiation multi-index must have 3 entries");
    check_radius({z[0], z[1], z[2]}, cfg.radius_guard);
    check_lower_pole(p.c, cfg.max_order);
    if (cfg.mode == SeriesConfig::Mode::Extended) return fs_sum<XReal>(p, z, &which, cfg);
    return fs_sum<double>(p, z, &which, cfg);
}

// --- quadrature -------------------------------------------------------------

namespace {

// 7-point Gauss / 15-point Kronrod pair on [-1, 1]
const double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                        0.741531185599394, 0.586087235467691, 0.405845151377397,
                        0.207784955007898, 0.0};
const double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                        0.140653259715525, 0.169004726639267, 0.190350578064785,
                        0.204432940075298, 0.209482141084728};
const double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                       0.417959183673469};

double gk15(const std::function<double(double)>& f, double a, double b, double& err) {
    const double h = 0.5 * (b - a), mid = 0.5 * (a + b);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(mid - h * kXgk[i]);
        fv[14 - i] = f(mid + h * kXgk[i]);
    }
    fv[7] = f(mid);
    double resk = kWgk[7] * fv[7], resg = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) resk += kWgk[i] * (fv[i] + fv[14 - i]);
    for (int i = 0; i < 3; ++i) resg += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    err = std::fabs(resk - resg) * h;
    return resk * h;
}

double adapt(const std::function<double(double)>& f, double a, double b, double tol,
             int depth, double& err_out) {
    double err;
    double v = gk15(f, a, b, err);
    if (err <= tol || depth <= 0) {
        err_out += err;
        return v;
    }
    double mid = 0.5 * (a + b);
    return adapt(f, a, mid, tol / 2, depth - 1, err_out) +
           adapt(f, mid, b, tol / 2, depth - 1, err_out);
}

// integral over [0,1] of f behaving like u^p near 0 and (1-u)^q near 1.
// f receives (u, 1-u) so the endpoint distance never cancels; negative
// exponents are absorbed by the power substitution so that the transformed
// integrand is bounded
using UnitIntegrand = std::function<double(double, double)>;

double integrate_unit(const UnitIntegrand& f, double p, double q, const QuadConfig& cfg,
                      double& err) {
    double total = 0;
    if (p < 0) {
        double e = p + 1;
        double hi = std::pow(0.5, e);
        auto g = [&](double t) {
            double u = std::pow(t, 1.0 / e);
            return f(u, 1.0 - u) * std::pow(t, 1.0 / e - 1.0) / e;
        };
        total += adapt(g, 0.0, hi, cfg.tol / 2, cfg.max_depth, err);
    } else {
        total += adapt([&](double u) { return f(u, 1.0 - u); }, 0.0, 0.5, cfg.tol / 2,
                       cfg.max_depth, err);
    }
    if (q < 0) {
        double e = q + 1;
        double hi = std::pow(0.5, e);
        auto g = [&](double t) {
            double s = std::pow(t, 1.0 / e); // distance to the right endpoint
            return f(1.0 - s, s) * std::pow(t, 1.0 / e - 1.0) / e;
        };
        total += adapt(g, 0.0, hi, cfg.tol / 2, cfg.max_depth, err);
    } else {
        total += adapt([&](double u) { return f(u, 1.0 - u); }, 0.5, 1.0, cfg.tol / 2,
                       cfg.max_depth, err);
    }
    return total;
}

} // namespace

NumericValue fd_euler_integral(const FdNumeric& p, const std::vector<double>& z,
                               const QuadConfig& cfg) {
    if (p.r() < 1 || static_cast<int>(z.size()) != p.r())
        fail(ErrorCode::DegenerateInput, "argument arity does not match parameters");
    if (!(p.a > 0) || !(p.c - p.a > 0))
        fail(ErrorCode::ConvergenceRegionViolated,
             "integral representation needs a > 0 and c - a > 0");
    for (double zi : z)
        if (!(zi < 1))
            fail(ErrorCode::ConvergenceRegionViolated, "integral representation needs z < 1");
    auto f = [&](double u, double omu) {
        double v = std::pow(u, p.a - 1) * std::pow(omu, p.c - p.a - 1);
        for (int i = 0; i < p.r(); ++i)
            v *= std::pow(1 - u * z[static_cast<size_t>(i)], -p.b[static_cast<size_t>(i)]);
        return v;
    };
    double norm = std::tgamma(p.c) / (std::tgamma(p.a) * std::tgamma(p.c - p.a));
    if (!std::isfinite(norm)) fail(ErrorCode::GammaPole, "gamma prefactor is singular");
    double err = 0;
    double v = integrate_unit(f, p.a - 1, p.c - p.a - 1, cfg, err);
    return {norm * v, std::fabs(norm) * err};
}

NumericValue fs_euler_integral(const FsNumeric& p, const std::array<double, 3>& z,
                               const QuadConfig& cfg) {
    double cab = p.c - p.a1 - p.a2;
    if (!(p.a1 > 0) || !(p.a2 > 0) || !(cab > 0))
        fail(ErrorCode::ConvergenceRegionViolated,
             "integral representation needs a1, a2, c - a1 - a2 > 0");
    for (double zi : z)
        if (!(zi < 1))
            fail(ErrorCode::ConvergenceRegionViolated, "integral representation needs z < 1");
    // simplex mapped to the unit square via v = (1-u) w, Jacobian (1-u)
    QuadConfig inner_cfg{cfg.tol / 10, cfg.max_depth};
    double inner_err_total = 0;
    auto outer = [&](double u, double omu) {
        auto inner = [&](double w, double omw) {
            double v = omu * w;
            return std::pow(w, p.a2 - 1) * std::pow(omw, cab - 1) *
                   std::pow(1 - v * z[1], -p.b[1]) * std::pow(1 - v * z[2], -p.b[2]);
        };
        double ierr = 0;
        double iv = integrate_unit(inner, p.a2 - 1, cab - 1, inner_cfg, ierr);
        inner_err_total = std::max(inner_err_total, ierr);
        return std::pow(u, p.a1 - 1) * std::pow(omu, p.c - p.a1 - 1) *
               std::pow(1 - u * z[0], -p.b[0]) * iv;
    };
    double norm = std::tgamma(p.c) /
                  (std::tgamma(p.a1) * std::tgamma(p.a2) * std::tgamma(cab));
    if (!std::isfinite(norm)) fail(ErrorCode::GammaPole, "gamma prefactor is singular");
    double err = 0;
    double v = integrate_unit(outer, p.a1 - 1, p.c - p.a1 - 1, cfg, err);
    return {norm * v, std::fabs(norm) * (err + inner_err_total)};
}

// --- reduction verification -------------------------------------------------

double eval_param(const ParamExpr& e, const std::vector<double>& point) {
    double v = to_double(e.offset());
    for (const auto& [idx, coef] : e.atoms())
        v += to_double(coef) * point[static_cast<size_t>(idx)];
    return v;
}

double fd_reduction_residual(const FdParams& base, const FdReduction& red,
                             const std::vector<double>& point, const SeriesConfig& cfg) {
    const ContextPtr& ctx = base.context();
    if (static_cast<int>(point.size()) != ctx->size())
        fail(ErrorCode::DegenerateInput, "sample point arity does not match context");
    const int r = base.r();
    std::vector<double> z(point.end() - r, point.end());
    auto numeric = [&](const FdParams& p) {
        FdNumeric n;
        n.a = eval_param(p.a, point);
        for (const auto& bi : p.b) n.b.push_back(eval_param(bi, point));
        n.c = eval_param(p.c, point);
        return n;
    };
    double lhs = fd_series(numeric(base), z, cfg).value;
    FdNumeric tgt = numeric(red.target);
    double rhs = eval_ratfun<double>(red.coeffs[0], point) * fd_series(tgt, z, cfg).value;
    for (int i = 1; i <= r; ++i) {
        ThetaMono m(static_cast<size_t>(r), 0);
        m[static_cast<size_t>(i - 1)] = 1;
        rhs += eval_ratfun<double>(red.coeffs[static_cast<size_t>(i)], point) *
               fd_diff_series(m, tgt, z, cfg).value;
    }
    return std::fabs(lhs - rhs) / std::max(std::fabs(lhs), 1e-300);
}

double fs_reduction_residual(const FsParams& base, const FsReduction& red,
                             const std::vector<double>& point, const SeriesConfig& cfg) {
    const ContextPtr& ctx = base.context();
    if (static_cast<int>(point.size()) != ctx->size())
        fail(ErrorCode::DegenerateInput, "sample point arity does not match context");
    std::array<double, 3> z{point[point.size() - 3], point[point.size() - 2],
                            point[point.size() - 1]};
    auto numeric = [&](const FsParams& p) {
        return FsNumeric{eval_param(p.a1, point), eval_param(p.a2, point),
                         {eval_param(p.b[0], point), eval_param(p.b[1], point),
                          eval_param(p.b[2], point)},
                         eval_param(p.c, point)};
    };
    double lhs = fs_series(numeric(base), z, cfg).value;
    FsNumeric tgt = numeric(red.target);
    const ThetaMono basis[6] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0},
                                {0, 0, 1}, {1, 1, 0}, {1, 0, 1}};
    double rhs = 0;
    for (size_t k = 0; k < 6; ++k) {
        if (red.coeffs[k].is_zero()) continue;
        double fk = k == 0 ? fs_series(tgt, z, cfg).value
                           : fs_diff_series(basis[k], tgt, z, cfg).value;
        rhs += eval_ratfun<double>(red.coeffs[k], point) * fk;
    }
    return std::fabs(lhs - rhs) / std::max(std::fabs(lhs), 1e-300);
}

} // namespace hyperred
