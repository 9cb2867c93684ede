#include "eitff/exact.hpp"
#include "eitff/error.hpp"

namespace eitff {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NonPositivePart: return "NonPositivePart";
    case ErrorKind::NotNonincreasing: return "NotNonincreasing";
    case ErrorKind::EmptyPartition: return "EmptyPartition";
    case ErrorKind::BoxOutsideDiagram: return "BoxOutsideDiagram";
    case ErrorKind::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotInDownSet: return "NotInDownSet";
    case ErrorKind::NotInUpSet: return "NotInUpSet";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::InvalidTableau: return "InvalidTableau";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::OddPermutation: return "OddPermutation";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::OddDistinctParts: return "OddDistinctParts";
    case ErrorKind::DegenerateShape: return "DegenerateShape";
    case ErrorKind::SymmetricLambda: return "SymmetricLambda";
    case ErrorKind::NotTransposeClosed: return "NotTransposeClosed";
    case ErrorKind::EmptySelection: return "EmptySelection";
    case ErrorKind::InvalidLayerSelection: return "InvalidLayerSelection";
    case ErrorKind::NotIsometry: return "NotIsometry";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NotTight: return "NotTight";
    case ErrorKind::FullDimension: return "FullDimension";
    case ErrorKind::TrivialSubspace: return "TrivialSubspace";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::DivisibilityViolated: return "DivisibilityViolated";
    case ErrorKind::StepConstraintViolated: return "StepConstraintViolated";
    case ErrorKind::InvalidEnsemble: return "InvalidEnsemble";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::CertificationMismatch: return "CertificationMismatch";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    }
    return "Unknown";
}

std::string to_fraction_string(const Rational& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_fraction(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(BigInt(text.c_str()));
        BigInt num(text.substr(0, slash).c_str());
        BigInt den(text.substr(slash + 1).c_str());
        if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        fail(ErrorKind::ParseError, "not a fraction: '" + text + "'");
    }
}

} // namespace eitff
