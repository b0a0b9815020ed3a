#include "dickson/error.hpp"

namespace dickson {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::MixedFields: return "MixedFields";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::NotASquare: return "NotASquare";
        case ErrorCode::InvalidDegree: return "InvalidDegree";
        case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::NotSelfReciprocal: return "NotSelfReciprocal";
        case ErrorCode::OddDegree: return "OddDegree";
        case ErrorCode::ZeroParameter: return "ZeroParameter";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::RadConditionViolated: return "RadConditionViolated";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace dickson
