#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dickson {

enum class ErrorCode {
    NotPrime,
    ReducibleModulus,
    FieldTooLarge,
    DivisionByZero,
    MixedFields,
    ZeroElement,
    NotASquare,
    InvalidDegree,
    ZeroConstantTerm,
    NotMonic,
    NotSelfReciprocal,
    OddDegree,
    ZeroParameter,
    NotIrreducible,
    Unsupported,
    RadConditionViolated,
    InternalInconsistency,
    VerificationFailed,
    ParseError,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (tests, the CLI) can dispatch on the kind rather than the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace dickson
