// Python bindings for the reduction engines and the numeric layer.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperred/numerics.hpp"

namespace py = pybind11;
using namespace hyperred;

namespace {

py::dict reduction_dict(const std::vector<RatFun>& coeffs, const std::string& target) {
    py::list cs;
    for (const auto& c : coeffs) cs.append(c.str());
    py::dict d;
    d["coeffs"] = cs;
    d["target"] = target;
    return d;
}

py::dict fd_reduce(long m_a, const std::vector<long>& m_b, long m_c,
                   const std::vector<std::string>& params) {
    int r = static_cast<int>(m_b.size());
    auto ctx = fd_context(r);
    FdParams p;
    if (params.empty()) {
        p = fd_symbolic_params(ctx);
    } else {
        if (static_cast<int>(params.size()) != r + 2)
            fail(ErrorCode::DegenerateInput, "need a, b_1..b_r, c");
        p.a = parse_param_expr(ctx, params.front());
        for (int i = 1; i <= r; ++i)
            p.b.push_back(parse_param_expr(ctx, params[static_cast<size_t>(i)]));
        p.c = parse_param_expr(ctx, params.back());
    }
    auto red = fd_index_change({m_a, m_b, m_c}, p);
    return reduction_dict(red.coeffs, red.target.str());
}

py::dict fs_reduce(long m_a1, long m_a2, const std::vector<long>& m_b, long m_c,
                   const std::vector<std::string>& params) {
    auto ctx = fs_context();
    FsParams p;
    if (params.empty()) {
        p = fs_symbolic_params(ctx);
    } else {
        if (params.size() != 6) fail(ErrorCode::DegenerateInput, "need a1, a2, b1..b3, c");
        p.a1 = parse_param_expr(ctx, params[0]);
        p.a2 = parse_param_expr(ctx, params[1]);
        for (int i = 2; i < 5; ++i)
            p.b.push_back(parse_param_expr(ctx, params[static_cast<size_t>(i)]));
        p.c = parse_param_expr(ctx, params[5]);
    }
    auto red = fs_index_change({m_a1, m_a2, m_b, m_c}, p);
    return reduction_dict(red.coeffs, red.target.str());
}

py::tuple nv(const NumericValue& v) { return py::make_tuple(v.value, v.est_error); }

SeriesConfig cfg_of(int order, bool extended) {
    SeriesConfig cfg;
    cfg.max_order = order;
    if (extended) cfg.mode = SeriesConfig::Mode::Extended;
    return cfg;
}

} // namespace

PYBIND11_MODULE(_hyperred, m) {
    m.doc() = "differential reduction and evaluation of Lauricella-type functions";

    py::register_exception<Error>(m, "EngineError");

    m.def("fd_reduce", &fd_reduce, py::arg("m_a"), py::arg("m_b"), py::arg("m_c"),
          py::arg("params") = std::vector<std::string>{},
          "shift (m_a, m_b, m_c) applied to a; b_1..b_r; c, exact coefficients");
    m.def("fs_reduce", &fs_reduce, py::arg("m_a1"), py::arg("m_a2"), py::arg("m_b"),
          py::arg("m_c"), py::arg("params") = std::vector<std::string>{});

    m.def(
        "fd_series",
        [](double a, const std::vector<double>& b, double c, const std::vector<double>& z,
           int order, bool extended) {
            return nv(fd_series({a, b, c}, z, cfg_of(order, extended)));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"), py::arg("order") = 60,
        py::arg("extended") = false);
    m.def(
        "fd_diff_series",
        [](const std::vector<unsigned>& which, double a, const std::vector<double>& b,
           double c, const std::vector<double>& z, int order, bool extended) {
            return nv(fd_diff_series(which, {a, b, c}, z, cfg_of(order, extended)));
        },
        py::arg("which"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"),
        py::arg("order") = 60, py::arg("extended") = false);
    m.def(
        "fs_series",
        [](double a1, double a2, const std::array<double, 3>& b, double c,
           const std::array<double, 3>& z, int order, bool extended) {
            return nv(fs_series({a1, a2, b, c}, z, cfg_of(order, extended)));
        },
        py::arg("a1"), py::arg("a2"), py::arg("b"), py::arg("c"), py::arg("z"),
        py::arg("order") = 60, py::arg("extended") = false);

    m.def(
        "fd_euler_integral",
        [](double a, const std::vector<double>& b, double c, const std::vector<double>& z) {
            return nv(fd_euler_integral({a, b, c}, z));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));

    m.def(
        "mpl",
        [](const std::vector<int>& weights, const std::vector<double>& args) {
            return nv(mpl(weights, args));
        },
        py::arg("weights"), py::arg("args"),
        "nested sum over 0 < m_1 < ... < m_n of prod x_i^m_i / m_i^k_i");
    m.def("li2", &li2);
    m.def("li3", &li3);
    m.def("nielsen_s12", [](double z) { return nv(nielsen_s12(z)); });
    m.def("fd_one_one_two",
          [](const std::vector<double>& z) { return nv(fd_one_one_two(z)); });

    m.def(
        "eps_coeffs_fd",
        [](int order, const std::string& slot, int theta_j, double a,
           const std::vector<double>& b, double c, const std::vector<double>& z) {
            return nv(eps_coeffs_fd(order,
                                    slot == "theta" ? EpsSlot::Theta : EpsSlot::Value,
                                    theta_j, {a, b, c}, z));
        },
        py::arg("order"), py::arg("slot"), py::arg("theta_j"), py::arg("a"), py::arg("b"),
        py::arg("c"), py::arg("z"));

    m.def("feynman_h_series", [](int n, double d, const std::vector<double>& z) {
        return nv(feynman_h_series(n, d, z));
    });
    m.def("hyperb_series", [](int n, double d, const std::vector<double>& x) {
        return nv(hyperb_series(n, d, x));
    });
    m.def("offshell_series", [](int n, double d, const std::vector<double>& z) {
        return nv(offshell_series(n, d, z));
    });
}
