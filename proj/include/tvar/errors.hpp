#pragma once

#include <stdexcept>
#include <string>

namespace tvar {

// Thrown when a weight column has non-coprime entries: the torus action is
// not faithful and no integral section of F exists.
struct NoSectionError : std::domain_error {
    explicit NoSectionError(const std::string& what) : std::domain_error(what) {}
};

// A weight column does not fit the sign pattern of the requested case.
struct CaseMismatchError : std::domain_error {
    explicit CaseMismatchError(const std::string& what) : std::domain_error(what) {}
};

// A user-supplied section s does not satisfy s*F = 1.
struct SectionMismatchError : std::domain_error {
    explicit SectionMismatchError(const std::string& what) : std::domain_error(what) {}
};

// Evaluation direction lies outside the dual of the tail cone while some
// coefficient is unbounded in that direction.
struct EvaluationDomainError : std::domain_error {
    explicit EvaluationDomainError(const std::string& what) : std::domain_error(what) {}
};

// The divisor fails the semi-ample/big test required of a p-divisor.
struct NotPDivisorError : std::domain_error {
    explicit NotPDivisorError(const std::string& what) : std::domain_error(what) {}
};

// A divisor on a blow-up base is a total transform, violating the
// minimality hypothesis of the smoothness criterion.
struct MinimalityError : std::domain_error {
    explicit MinimalityError(const std::string& what) : std::domain_error(what) {}
};

// Incidence data (strata, origin multiplicities) required for an operation
// was not declared.
struct IncompleteIncidenceError : std::runtime_error {
    explicit IncompleteIncidenceError(const std::string& what) : std::runtime_error(what) {}
};

// Jacobian checks require the point to lie on the variety.
struct PointNotOnVarietyError : std::domain_error {
    explicit PointNotOnVarietyError(const std::string& what) : std::domain_error(what) {}
};

// Structured-text document could not be parsed.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tvar
