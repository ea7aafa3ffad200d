// Batch command-line front end: symbolic reductions, series/quadrature
// evaluation, exceptional-parameter checks, small-parameter coefficients.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "hyperred/numerics.hpp"

using nlohmann::json;
using namespace hyperred;

namespace {

int exit_code_for(ErrorCode c) {
    switch (c) {
    case ErrorCode::ExceptionalStep:
        return 3;
    case ErrorCode::RadiusExceeded:
    case ErrorCode::PoleInPochhammer:
    case ErrorCode::GammaPole:
    case ErrorCode::ConvergenceGuard:
    case ErrorCode::ConvergenceRegionViolated:
    case ErrorCode::CoincidentArguments:
    case ErrorCode::DenominatorVanishes:
        return 4;
    default:
        return 2;
    }
}

// "[x,[y1,..,yk],z]" -> {"x", "y1", .., "yk", "z"}; one nesting level
std::vector<std::string> split_bracket_list(const std::string& text) {
    std::string s = text;
    auto first = s.find('[');
    auto last = s.rfind(']');
    if (first == std::string::npos || last == std::string::npos || last < first)
        fail(ErrorCode::ParseError, "expected a bracketed list: " + text);
    s = s.substr(first + 1, last - first - 1);
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    out.push_back(cur);
    // flatten the single nested group, remembering where it started
    std::vector<std::string> flat;
    for (auto& tok : out) {
        if (!tok.empty() && tok.front() == '[') {
            for (auto& inner : split_bracket_list(tok)) flat.push_back(inner);
        } else {
            flat.push_back(tok);
        }
    }
    return flat;
}

double parse_number(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos)
            return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) fail(ErrorCode::ParseError, "bad number: " + s);
        return v;
    } catch (const std::invalid_argument&) {
        fail(ErrorCode::ParseError, "bad number: " + s);
    }
}

long parse_int(const std::string& s) {
    try {
        size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) fail(ErrorCode::ParseError, "bad integer: " + s);
        return v;
    } catch (const std::invalid_argument&) {
        fail(ErrorCode::ParseError, "bad integer: " + s);
    }
}

std::vector<double> parse_numbers(const std::string& text) {
    std::vector<double> v;
    for (auto& t : split_bracket_list(text)) v.push_back(parse_number(t));
    return v;
}

int series_order(const json& payload) {
    if (payload.contains("order")) return payload["order"].get<int>();
    if (const char* env = std::getenv("HYPERRED_MAX_ORDER")) return std::atoi(env);
    return 60;
}

std::string get_str(const json& payload, const std::string& key) {
    if (!payload.contains(key))
        fail(ErrorCode::ParseError, "missing field: " + key);
    return payload[key].get<std::string>();
}

FdParams fd_params_from(const ContextPtr& ctx, const std::vector<std::string>& toks) {
    FdParams p;
    p.a = parse_param_expr(ctx, toks.front());
    for (size_t i = 1; i + 1 < toks.size(); ++i)
        p.b.push_back(parse_param_expr(ctx, toks[i]));
    p.c = parse_param_expr(ctx, toks.back());
    return p;
}

FdNumeric fd_numeric_from(const std::vector<std::string>& toks) {
    FdNumeric p;
    p.a = parse_number(toks.front());
    for (size_t i = 1; i + 1 < toks.size(); ++i) p.b.push_back(parse_number(toks[i]));
    p.c = parse_number(toks.back());
    return p;
}

FsNumeric fs_numeric_from(const std::vector<std::string>& toks) {
    if (toks.size() != 6) fail(ErrorCode::ParseError, "expected [a1,a2,[b1,b2,b3],c]");
    return {parse_number(toks[0]), parse_number(toks[1]),
            {parse_number(toks[2]), parse_number(toks[3]), parse_number(toks[4])},
            parse_number(toks[5])};
}

json numeric_json(const NumericValue& v) {
    return {{"value", v.value}, {"est_error", v.est_error}};
}

SeriesConfig cfg_from(const json& payload) {
    SeriesConfig cfg;
    cfg.max_order = series_order(payload);
    if (payload.value("extended", false)) cfg.mode = SeriesConfig::Mode::Extended;
    return cfg;
}

// deterministic guarded sample point for --verify: parameters spread over
// [1/2, 3/2], arguments pairwise distinct inside [0.05, 0.35]
std::vector<double> verify_point(const ContextPtr& ctx) {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> par(0.5, 1.5), arg(0.05, 0.35);
    std::vector<double> pt(static_cast<size_t>(ctx->size()));
    for (int i = 0; i < ctx->num_params(); ++i) pt[static_cast<size_t>(i)] = par(rng);
    for (int i = 0; i < ctx->num_vars(); ++i) {
        double zi;
        bool clash;
        do {
            zi = arg(rng);
            clash = false;
            for (int j = 0; j < i; ++j)
                clash |= std::fabs(zi - pt[static_cast<size_t>(ctx->num_params() + j)]) < 0.02;
        } while (clash);
        pt[static_cast<size_t>(ctx->num_params() + i)] = zi;
    }
    return pt;
}

std::string reduction_text(const ContextPtr& ctx, const std::string& base,
                           const std::vector<RatFun>& coeffs, const std::string& target,
                           int r, bool fs) {
    ThetaExpr e(ctx);
    if (!fs) {
        e.add_term(ThetaMono(static_cast<size_t>(r), 0), coeffs[0]);
        for (int i = 1; i <= r; ++i) {
            ThetaMono m(static_cast<size_t>(r), 0);
            m[static_cast<size_t>(i - 1)] = 1;
            e.add_term(m, coeffs[static_cast<size_t>(i)]);
        }
    } else {
        const ThetaMono basis[6] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0},
                                    {0, 0, 1}, {1, 1, 0}, {1, 0, 1}};
        for (size_t k = 0; k < 6; ++k) e.add_term(basis[k], coeffs[k]);
    }
    std::ostringstream os;
    os << "F" << base << " = [ " << e.str() << " ] F" << target << "\n";
    return os.str();
}

json handle(const std::string& command, const json& payload) {
    json result, diagnostics;

    if (command == "fd-reduce") {
        auto ptoks = split_bracket_list(get_str(payload, "params"));
        auto stoks = split_bracket_list(get_str(payload, "shift"));
        if (ptoks.size() != stoks.size() || ptoks.size() < 3)
            fail(ErrorCode::ParseError, "shift and params must have matching arity");
        int r = static_cast<int>(ptoks.size()) - 2;
        if (payload.contains("vars") && payload["vars"].get<int>() != r)
            fail(ErrorCode::ParseError, "vars does not match params arity");
        auto ctx = fd_context(r);
        FdParams p = fd_params_from(ctx, ptoks);
        FdShift shift;
        shift.m_a = parse_int(stoks.front());
        for (size_t i = 1; i + 1 < stoks.size(); ++i)
            shift.m_b.push_back(parse_int(stoks[i]));
        shift.m_c = parse_int(stoks.back());
        auto red = fd_index_change(shift, p);
        json coeffs = json::array();
        for (const auto& c : red.coeffs) coeffs.push_back(c.str());
        result["coeffs"] = coeffs;
        result["target"] = red.target.str();
        result["text"] = reduction_text(ctx, p.str(), red.coeffs, red.target.str(), r, false);
        diagnostics["steps"] =
            std::abs(shift.m_a) + std::abs(shift.m_c) +
            std::accumulate(shift.m_b.begin(), shift.m_b.end(), 0L,
                            [](long s, long m) { return s + std::abs(m); });
        if (payload.value("verify", false)) {
            double res = fd_reduction_residual(p, red, verify_point(ctx), cfg_from(payload));
            diagnostics["residual"] = res;
            if (res > 1e-8)
                fail(ErrorCode::ConvergenceGuard, "verification residual above 1e-8");
        }
    } else if (command == "fs-reduce") {
        auto ptoks = split_bracket_list(get_str(payload, "params"));
        auto stoks = split_bracket_list(get_str(payload, "shift"));
        if (ptoks.size() != 6 || stoks.size() != 6)
            fail(ErrorCode::ParseError, "expected [a1,a2,[b1,b2,b3],c]");
        auto ctx = fs_context();
        FsParams p;
        p.a1 = parse_param_expr(ctx, ptoks[0]);
        p.a2 = parse_param_expr(ctx, ptoks[1]);
        for (int i = 2; i < 5; ++i) p.b.push_back(parse_param_expr(ctx, ptoks[static_cast<size_t>(i)]));
        p.c = parse_param_expr(ctx, ptoks[5]);
        FsShift shift;
        shift.m_a1 = parse_int(stoks[0]);
        shift.m_a2 = parse_int(stoks[1]);
        for (int i = 2; i < 5; ++i) shift.m_b.push_back(parse_int(stoks[static_cast<size_t>(i)]));
        shift.m_c = parse_int(stoks[5]);
        auto red = fs_index_change(shift, p);
        json coeffs = json::array();
        for (const auto& c : red.coeffs) coeffs.push_back(c.str());
        result["coeffs"] = coeffs;
        result["target"] = red.target.str();
        result["text"] = reduction_text(ctx, p.str(), red.coeffs, red.target.str(), 3, true);
        if (payload.value("verify", false)) {
            double res = fs_reduction_residual(p, red, verify_point(ctx), cfg_from(payload));
            diagnostics["residual"] = res;
            if (res > 1e-8)
                fail(ErrorCode::ConvergenceGuard, "verification residual above 1e-8");
        }
    } else if (command == "fd-eval" || command == "fd-diff-eval") {
        auto p = fd_numeric_from(split_bracket_list(get_str(payload, "params")));
        auto z = parse_numbers(get_str(payload, "z"));
        if (command == "fd-eval") {
            result = numeric_json(fd_series(p, z, cfg_from(payload)));
        } else {
            ThetaMono w;
            for (double x : parse_numbers(get_str(payload, "which")))
                w.push_back(static_cast<unsigned>(x));
            result = numeric_json(fd_diff_series(w, p, z, cfg_from(payload)));
        }
    } else if (command == "fs-eval" || command == "fs-diff-eval") {
        auto p = fs_numeric_from(split_bracket_list(get_str(payload, "params")));
        auto zv = parse_numbers(get_str(payload, "z"));
        if (zv.size() != 3) fail(ErrorCode::ParseError, "expected three arguments");
        std::array<double, 3> z{zv[0], zv[1], zv[2]};
        if (command == "fs-eval") {
            result = numeric_json(fs_series(p, z, cfg_from(payload)));
        } else {
            ThetaMono w;
            for (double x : parse_numbers(get_str(payload, "which")))
                w.push_back(static_cast<unsigned>(x));
            result = numeric_json(fs_diff_series(w, p, z, cfg_from(payload)));
        }
    } else if (command == "eps-fd") {
        auto p = fd_numeric_from(split_bracket_list(get_str(payload, "params")));
        auto z = parse_numbers(get_str(payload, "z"));
        int order = payload.value("eps_order", 2);
        std::string slot = payload.value("slot", "value");
        int tj = payload.value("theta_j", 1);
        result = numeric_json(eps_coeffs_fd(
            order, slot == "theta" ? EpsSlot::Theta : EpsSlot::Value, tj, p, z));
    } else if (command == "eps-f3") {
        auto av = parse_numbers(get_str(payload, "a"));
        auto bv = parse_numbers(get_str(payload, "b"));
        auto zv = parse_numbers(get_str(payload, "z"));
        if (av.size() != 2 || bv.size() != 2 || zv.size() != 2)
            fail(ErrorCode::ParseError, "expected two entries in a, b, z");
        double c = parse_number(get_str(payload, "c"));
        auto [c2, c3] = eps_coeffs_f3({av[0], av[1]}, {bv[0], bv[1]}, c, {zv[0], zv[1]});
        result["eps2"] = numeric_json(c2);
        result["eps3"] = numeric_json(c3);
    } else if (command == "check-exceptional") {
        std::string engine = payload.value("engine", "fd");
        auto ptoks = split_bracket_list(get_str(payload, "params"));
        json hits = json::array();
        if (engine == "fd") {
            auto ctx = fd_context(static_cast<int>(ptoks.size()) - 2);
            for (const auto& h : fd_exceptional(fd_params_from(ctx, ptoks)))
                hits.push_back({{"which", h.which}, {"value", to_string(h.value)}});
        } else if (engine == "fs") {
            if (ptoks.size() != 6) fail(ErrorCode::ParseError, "expected six parameters");
            auto ctx = fs_context();
            FsParams p;
            p.a1 = parse_param_expr(ctx, ptoks[0]);
            p.a2 = parse_param_expr(ctx, ptoks[1]);
            for (int i = 2; i < 5; ++i)
                p.b.push_back(parse_param_expr(ctx, ptoks[static_cast<size_t>(i)]));
            p.c = parse_param_expr(ctx, ptoks[5]);
            for (const auto& h : fs_exceptional(p))
                hits.push_back({{"which", h.which}, {"value", to_string(h.value)}});
        } else {
            fail(ErrorCode::ParseError, "engine must be fd or fs");
        }
        result["hits"] = hits;
    } else if (command == "feynman-eval") {
        std::string family = payload.value("family", "h");
        int legs = payload.value("legs", 0);
        double d = parse_number(get_str(payload, "dim"));
        auto z = parse_numbers(get_str(payload, "z"));
        auto cfg = cfg_from(payload);
        if (family == "h")
            result = numeric_json(feynman_h_series(legs, d, z, cfg));
        else if (family == "hyperb")
            result = numeric_json(hyperb_series(legs, d, z, cfg));
        else if (family == "offshell")
            result = numeric_json(offshell_series(legs, d, z, cfg));
        else
            fail(ErrorCode::ParseError, "family must be h, hyperb or offshell");
    } else {
        fail(ErrorCode::ParseError, "unknown command: " + command);
    }

    json resp = {{"status", "ok"}, {"result", result}};
    if (!diagnostics.is_null()) resp["diagnostics"] = diagnostics;
    return resp;
}

int emit(const json& payload, const std::string& command, const std::string& format) {
    try {
        json resp = handle(command, payload);
        if (format == "text" && resp["result"].contains("text"))
            std::cout << resp["result"]["text"].get<std::string>();
        else
            std::cout << resp.dump() << "\n";
        return 0;
    } catch (const Error& e) {
        json resp = {{"status", "error"},
                     {"code", error_code_name(e.code())},
                     {"message", e.what()}};
        std::cout << resp.dump() << "\n";
        return exit_code_for(e.code());
    } catch (const json::exception& e) {
        json resp = {{"status", "error"}, {"code", "ParseError"}, {"message", e.what()}};
        std::cout << resp.dump() << "\n";
        return 2;
    }
}

int run_batch() {
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        try {
            json req = json::parse(line);
            std::cout << handle(req.at("command").get<std::string>(),
                                req.value("payload", json::object()))
                             .dump()
                      << "\n";
        } catch (const Error& e) {
            std::cout << json{{"status", "error"},
                              {"code", error_code_name(e.code())},
                              {"message", e.what()}}
                             .dump()
                      << "\n";
        } catch (const std::exception& e) {
            std::cout << json{{"status", "error"},
                              {"code", "ParseError"},
                              {"message", e.what()}}
                             .dump()
                      << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"differential reduction and evaluation of Lauricella-type functions"};
    app.require_subcommand(0, 1);

    std::string format = "json";
    json payload = json::object();
    std::string sel;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option_function<std::string>(
            "--format", [&](const std::string& v) { format = v; },
            "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option_function<int>(
            "--order", [&](int v) { payload["order"] = v; }, "series truncation order");
        sub->add_flag_function(
            "--extended", [&](int64_t) { payload["extended"] = true; },
            "extended-precision series mode");
        sub->callback([&, sub] { sel = sub->get_name(); });
    };
    auto opt = [&](CLI::App* sub, const std::string& name, const char* help) {
        sub->add_option_function<std::string>(
            name, [&, key = name.substr(2)](const std::string& v) { payload[key] = v; },
            help);
    };

    for (const char* name : {"fd-reduce", "fs-reduce"}) {
        auto* sub = app.add_subcommand(name, "symbolic index shift");
        add_common(sub);
        opt(sub, "--shift", "integer shifts, e.g. \"[-1,[1,0],1]\"");
        opt(sub, "--params", "symbolic parameters, e.g. \"[a,[b1,b2],c]\"");
        sub->add_option_function<int>(
            "--vars", [&](int v) { payload["vars"] = v; }, "number of arguments");
        sub->add_flag_function(
            "--verify", [&](int64_t) { payload["verify"] = true; },
            "check the reduction numerically at a sample point");
    }
    for (const char* name : {"fd-eval", "fd-diff-eval", "fs-eval", "fs-diff-eval"}) {
        auto* sub = app.add_subcommand(name, "numeric series evaluation");
        add_common(sub);
        opt(sub, "--params", "numeric parameters, e.g. \"[0.5,[1/3,0.25],1.5]\"");
        opt(sub, "--z", "arguments, e.g. \"[0.2,0.1]\"");
        opt(sub, "--which", "derivative multi-index, e.g. \"[1,0]\"");
    }
    {
        auto* sub = app.add_subcommand("eps-fd", "small-parameter expansion coefficient");
        add_common(sub);
        opt(sub, "--params", "coefficients of eps in a, b_i, c");
        opt(sub, "--z", "arguments");
        sub->add_option_function<int>(
            "--eps-order", [&](int v) { payload["eps_order"] = v; }, "expansion order 2..4");
        sub->add_option_function<std::string>(
            "--slot", [&](const std::string& v) { payload["slot"] = v; },
            "value or theta")->check(CLI::IsMember({"value", "theta"}));
        sub->add_option_function<int>(
            "--theta-j", [&](int v) { payload["theta_j"] = v; }, "derivative slot (1-based)");
    }
    {
        auto* sub = app.add_subcommand("eps-f3", "double-series expansion coefficients");
        add_common(sub);
        opt(sub, "--a", "two upper coefficients");
        opt(sub, "--b", "two more upper coefficients");
        opt(sub, "--c", "lower coefficient");
        opt(sub, "--z", "two arguments");
    }
    {
        auto* sub = app.add_subcommand("check-exceptional", "list integer-pinned parameters");
        add_common(sub);
        sub->add_option_function<std::string>(
            "--engine", [&](const std::string& v) { payload["engine"] = v; },
            "fd or fs")->check(CLI::IsMember({"fd", "fs"}));
        opt(sub, "--params", "symbolic parameters");
    }
    {
        auto* sub = app.add_subcommand("feynman-eval", "nested Pochhammer-ratio series");
        add_common(sub);
        sub->add_option_function<std::string>(
            "--family", [&](const std::string& v) { payload["family"] = v; },
            "h, hyperb or offshell")->check(CLI::IsMember({"h", "hyperb", "offshell"}));
        sub->add_option_function<int>(
            "--legs", [&](int v) { payload["legs"] = v; }, "number of legs");
        opt(sub, "--dim", "spacetime dimension");
        opt(sub, "--z", "arguments");
    }
    auto* batch = app.add_subcommand("batch", "read one JSON request per stdin line");
    batch->callback([&] { sel = "batch"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (sel.empty()) {
        std::cerr << app.help();
        return 2;
    }
    if (sel == "batch") return run_batch();
    return emit(payload, sel, format);
}
