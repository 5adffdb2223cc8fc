#include "purebetti/error.hpp"

namespace purebetti {

std::string_view name(Errc code) noexcept {
  switch (code) {
    case Errc::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case Errc::EmptyDegreeSequence: return "EmptyDegreeSequence";
    case Errc::NonPositiveScalar: return "NonPositiveScalar";
    case Errc::NonPositiveEntry: return "NonPositiveEntry";
    case Errc::NonPositiveParameter: return "NonPositiveParameter";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NegativeDimension: return "NegativeDimension";
    case Errc::NotPure: return "NotPure";
    case Errc::NoTermination: return "NoTermination";
    case Errc::NotPureTable: return "NotPureTable";
    case Errc::NonzeroFirstDegree: return "NonzeroFirstDegree";
    case Errc::NotDecomposable: return "NotDecomposable";
    case Errc::NotMonomial: return "NotMonomial";
    case Errc::TooManyGenerators: return "TooManyGenerators";
    case Errc::DegreeBoundTooSmall: return "DegreeBoundTooSmall";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::VariableCountMismatch: return "VariableCountMismatch";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::InhomogeneousPolynomial: return "InhomogeneousPolynomial";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::InvalidRational: return "InvalidRational";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::InvalidJson: return "InvalidJson";
    case Errc::InconsistentTable: return "InconsistentTable";
    case Errc::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

}  // namespace purebetti
