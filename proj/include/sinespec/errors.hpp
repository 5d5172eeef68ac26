#pragma once

#include <stdexcept>
#include <string>

namespace sinespec {

/// Precondition or argument violation (bad sizes, non-finite inputs, ...).
struct InvalidInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A computational-space coordinate hit an interval endpoint that maps to infinity.
struct DomainEndpointError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A user-supplied function returned a non-finite value at a quadrature node.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, double node)
        : std::runtime_error(what), node_(node) {}

    /// Computational-space location of the offending evaluation.
    double node() const { return node_; }

private:
    double node_;
};

/// Direct solve failed because the system matrix is numerically singular.
class SingularSystemError : public std::runtime_error {
public:
    SingularSystemError(const std::string& what, double rcond_estimate)
        : std::runtime_error(what), rcond_(rcond_estimate) {}

    /// Reciprocal condition number estimate from the factorization.
    double rcond_estimate() const { return rcond_; }

private:
    double rcond_;
};

/// Report destination could not be opened or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sinespec
