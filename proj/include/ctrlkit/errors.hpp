#pragma once

#include <stdexcept>
#include <string>

namespace ctrlkit {

// Domain errors map to CLI exit code 1, config errors to exit code 2.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : DomainError {
    using DomainError::DomainError;
};

struct MisalignedTime : DomainError {
    using DomainError::DomainError;
};

struct OffGridTime : DomainError {
    using DomainError::DomainError;
};

struct DegeneratePair : DomainError {
    using DomainError::DomainError;
};

struct DegenerateSet : DomainError {
    using DomainError::DomainError;
};

struct ZeroScale : DomainError {
    using DomainError::DomainError;
};

struct InnerNonConvergent : DomainError {
    using DomainError::DomainError;
};

struct ImplicitStageNonConvergent : DomainError {
    using DomainError::DomainError;
};

struct KinkProximity : DomainError {
    using DomainError::DomainError;
};

struct NotControllable : DomainError {
    using DomainError::DomainError;
};

struct NonConvergent : DomainError {
    using DomainError::DomainError;
};

} // namespace ctrlkit
