#pragma once

#include <stdexcept>
#include <string>

namespace dgdual {

// Stable error codes; the CLI maps every failure onto one of these.
enum class ErrorCode {
    ShapeMismatch,
    CompositionNonzero,
    WindowOverflow,
    CertificateMissing,
    CertificateRejected,
    CharacteristicUnsupported,
    CapExceeded,
    LayerMismatch,
    FreeCalcMismatch,
    ModelNotExact,
    ParseError,
    ValidationError,
    Internal,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::CompositionNonzero: return "CompositionNonzero";
    case ErrorCode::WindowOverflow: return "WindowOverflow";
    case ErrorCode::CertificateMissing: return "CertificateMissing";
    case ErrorCode::CertificateRejected: return "CertificateRejected";
    case ErrorCode::CharacteristicUnsupported: return "CharacteristicUnsupported";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::LayerMismatch: return "LayerMismatch";
    case ErrorCode::FreeCalcMismatch: return "FreeCalcMismatch";
    case ErrorCode::ModelNotExact: return "ModelNotExact";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace dgdual
