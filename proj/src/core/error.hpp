#ifndef ENTBREAK_CORE_ERROR_HPP
#define ENTBREAK_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace entbreak {

enum class ErrorCode {
    InvalidArgument,
    DimensionMismatch,
    NotHermitian,
    NotUnitary,
    NotUnitaryBasis,
    ParameterOutOfRange,
    NotConverged,
    NoSignChange,
    CertificateFailure,
    UnknownStateRef,
    UnsupportedDimension,
    ParseError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::NotUnitaryBasis: return "NotUnitaryBasis";
        case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorCode::NotConverged: return "NotConverged";
        case ErrorCode::NoSignChange: return "NoSignChange";
        case ErrorCode::CertificateFailure: return "CertificateFailure";
        case ErrorCode::UnknownStateRef: return "UnknownStateRef";
        case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

// Shared numeric tolerances. Every validation in the library references
// these; do not introduce ad-hoc slack elsewhere.
namespace tol {
inline constexpr double herm = 1e-12;   // Hermiticity / trace deviation
inline constexpr double psd = 1e-10;    // eigenvalue slack for PSD checks
inline constexpr double eig = 1e-10;    // eigendecomposition reconstruction
}

}  // namespace entbreak

#endif
