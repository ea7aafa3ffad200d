#pragma once

#include <array>
#include <utility>

#include "hyperred/fd.hpp"
#include "hyperred/fs.hpp"

namespace hyperred {

struct SeriesConfig {
    int max_order = 60;
    double radius_guard = 0.9;
    enum class Mode { Float64, Extended } mode = Mode::Float64;
};

// value plus a truncation bound derived from the last summed order
struct NumericValue {
    double value = 0.0;
    double est_error = 0.0;
};

struct FdNumeric {
    double a = 0;
    std::vector<double> b;
    double c = 1;
    int r() const { return static_cast<int>(b.size()); }
};

struct FsNumeric {
    double a1 = 0, a2 = 0;
    std::array<double, 3> b{};
    double c = 1;
};

NumericValue fd_series(const FdNumeric& p, const std::vector<double>& z,
                       const SeriesConfig& cfg = {});
// term-wise theta-differentiated series: each term scaled by prod m_i^which_i
NumericValue fd_diff_series(const ThetaMono& which, const FdNumeric& p,
                            const std::vector<double>& z, const SeriesConfig& cfg = {});
NumericValue fs_series(const FsNumeric& p, const std::array<double, 3>& z,
                       const SeriesConfig& cfg = {});
NumericValue fs_diff_series(const ThetaMono& which, const FsNumeric& p,
                            const std::array<double, 3>& z, const SeriesConfig& cfg = {});

struct QuadConfig {
    double tol = 1e-11;
    int max_depth = 14;
};

NumericValue fd_euler_integral(const FdNumeric& p, const std::vector<double>& z,
                               const QuadConfig& cfg = {});
NumericValue fs_euler_integral(const FsNumeric& p, const std::array<double, 3>& z,
                               const QuadConfig& cfg = {});

// nested sum over 0 < m_1 < ... < m_n of prod x_i^{m_i} / m_i^{k_i}
NumericValue mpl(const std::vector<int>& weights, const std::vector<double>& args,
                 const SeriesConfig& cfg = {});
NumericValue nielsen_s12(double z, const SeriesConfig& cfg = {});
double li2(double z);
double li3(double z);

// small-parameter expansion of F(a*eps; {b_j*eps}; 1+c*eps): the coefficient
// of eps^order in the value or in theta_j applied to the function
enum class EpsSlot { Value, Theta };
NumericValue eps_coeffs_fd(int order, EpsSlot slot, int theta_j, const FdNumeric& p,
                           const std::vector<double>& z);
// (eps^2, eps^3) coefficients for the two-variable double series with all
// upper and lower indices proportional to eps and c -> 1 + c*eps
std::pair<NumericValue, NumericValue> eps_coeffs_f3(const std::array<double, 2>& a,
                                                    const std::array<double, 2>& b, double c,
                                                    const std::array<double, 2>& z);
NumericValue f3_series(const std::array<double, 2>& a, const std::array<double, 2>& b,
                       double c, const std::array<double, 2>& z, const SeriesConfig& cfg = {});

// closed form of the unit-parameter function (1;{1};2;z), logarithmic in each z_i
NumericValue fd_one_one_two(const std::vector<double>& z);

// nested Pochhammer-ratio series attached to one-loop N-point kinematics
NumericValue feynman_h_series(int n_legs, double d, const std::vector<double>& z,
                              const SeriesConfig& cfg = {});
NumericValue hyperb_series(int n_legs, double d, const std::vector<double>& x,
                           const SeriesConfig& cfg = {});
NumericValue offshell_series(int n_legs, double d, const std::vector<double>& z,
                             const SeriesConfig& cfg = {});

// numeric evaluation of an affine parameter expression; point holds one value
// per context symbol (parameters first, then the z_i)
double eval_param(const ParamExpr& e, const std::vector<double>& point);

// relative residual |F(base) - sum coeff_k theta^k F(target)| / |F(base)| of a
// symbolic reduction at a sample point
double fd_reduction_residual(const FdParams& base, const FdReduction& red,
                             const std::vector<double>& point, const SeriesConfig& cfg = {});
double fs_reduction_residual(const FsParams& base, const FsReduction& red,
                             const std::vector<double>& point, const SeriesConfig& cfg = {});

} // namespace hyperred
