#include "hyperred/rational.hpp"

#include "hyperred/errors.hpp"

namespace hyperred {

Rational pow_rat(const Rational& base, long e) {
    if (e == 0) return 1;
    Rational b = e > 0 ? base : Rational(1) / base;
    long n = e > 0 ? e : -e;
    Rational acc = 1;
    for (long i = 0; i < n; ++i) acc *= b;
    return acc;
}

Rational parse_rational(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        fail(ErrorCode::ParseError, "not a rational literal: '" + s + "'");
    }
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
        case ErrorCode::NonTermination: return "NonTermination";
        case ErrorCode::ExceptionalStep: return "ExceptionalStep";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::RadiusExceeded: return "RadiusExceeded";
        case ErrorCode::PoleInPochhammer: return "PoleInPochhammer";
        case ErrorCode::GammaPole: return "GammaPole";
        case ErrorCode::ConvergenceGuard: return "ConvergenceGuard";
        case ErrorCode::ConvergenceRegionViolated: return "ConvergenceRegionViolated";
        case ErrorCode::CoincidentArguments: return "CoincidentArguments";
        case ErrorCode::UnsupportedOrderSlot: return "UnsupportedOrderSlot";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace hyperred
