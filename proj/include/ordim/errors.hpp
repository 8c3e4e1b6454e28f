#pragma once

#include <stdexcept>
#include <string>

namespace ordim {

// Stable machine-readable error codes; the CLI serializes these verbatim.
enum class ErrorCode {
    DuplicateLabel,
    UnknownLabel,
    CycleDetected,
    GroundSetMismatch,
    EmptyList,
    EmptySequence,
    NotUpperDense,
    BadFirstWitness,
    NotIncreasing,
    InsufficientSeparation,
    IllegalSimplification,
    NotMonotone,
    NotMultiUtility,
    TupleCollision,
    NotAntichain,
    NotTotalOnA,
    DecompositionOverlap,
    DimensionMismatch,
    BadRadix,
    NotRealizer,
    NotInjectiveMultiUtility,
    BadParams,
    ConstructionFailed,
    CapExceeded,
    BadInput,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
          code_(code), detail_(std::move(detail)) {}

    ErrorCode code() const { return code_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

} // namespace ordim
