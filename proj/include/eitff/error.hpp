#pragma once

#include <stdexcept>
#include <string>

namespace eitff {

enum class ErrorKind {
    NonPositivePart,
    NotNonincreasing,
    EmptyPartition,
    BoxOutsideDiagram,
    EntryOutOfRange,
    IndexOutOfRange,
    NotInDownSet,
    NotInUpSet,
    ShapeMismatch,
    SizeMismatch,
    InvalidTableau,
    InvalidPermutation,
    OddPermutation,
    NotSymmetric,
    TooSmall,
    OddDistinctParts,
    DegenerateShape,
    SymmetricLambda,
    NotTransposeClosed,
    EmptySelection,
    InvalidLayerSelection,
    NotIsometry,
    NotUnitary,
    NotTight,
    FullDimension,
    TrivialSubspace,
    DegenerateParameters,
    ConstraintViolation,
    DivisibilityViolated,
    StepConstraintViolated,
    InvalidEnsemble,
    ParseError,
    IoError,
    ResourceLimit,
    CertificationMismatch,
    NumericalFailure
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace eitff
