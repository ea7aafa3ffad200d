#pragma once

#include <stdexcept>
#include <string>

namespace hyperred {

// Machine-readable error codes, mirrored by the CLI exit codes.
enum class ErrorCode {
    ContextMismatch,
    DenominatorVanishes,
    NonTermination,
    ExceptionalStep,
    DegenerateInput,
    RadiusExceeded,
    PoleInPochhammer,
    GammaPole,
    ConvergenceGuard,
    ConvergenceRegionViolated,
    CoincidentArguments,
    UnsupportedOrderSlot,
    ParseError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace hyperred
