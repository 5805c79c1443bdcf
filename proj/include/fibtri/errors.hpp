#pragma once

#include <stdexcept>
#include <string>

namespace fibtri {

// Base class for every certification failure in the library.
struct CertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisorStraddlesZero : CertificationError {
    DivisorStraddlesZero() : CertificationError("divisor enclosure contains zero") {}
};

struct DomainError : CertificationError {
    using CertificationError::CertificationError;
};

struct NoSignChange : CertificationError {
    using CertificationError::CertificationError;
};

struct MultipleRootsSuspected : CertificationError {
    using CertificationError::CertificationError;
};

// Enclosure too wide for the requested operation; caller raises precision.
struct TooWide : CertificationError {
    using CertificationError::CertificationError;
};

struct HypothesisViolated : CertificationError {
    using CertificationError::CertificationError;
};

struct CoefficientExceedsPaper : CertificationError {
    using CertificationError::CertificationError;
};

struct BisectionFailed : CertificationError {
    using CertificationError::CertificationError;
};

struct IndexOutOfRange : CertificationError {
    using CertificationError::CertificationError;
};

struct ConfigError : CertificationError {
    using CertificationError::CertificationError;
};

} // namespace fibtri
