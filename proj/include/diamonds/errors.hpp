#pragma once

#include <stdexcept>
#include <string>

namespace diamonds {

// Base class for every failure raised by the library. The CLI maps these to
// exit status 1 and prints what() as a one-line diagnostic.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact division had a nonzero remainder or a non-integral quotient.
class DivisionError : public Error {
public:
    using Error::Error;
};

// Logarithm of a series whose constant term is not positive.
class DomainError : public Error {
public:
    using Error::Error;
};

// An input violates a documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A mathematical identity that must hold exactly failed to hold.
class IdentityViolation : public Error {
public:
    using Error::Error;
};

// Iterative numerics (root finding, quadrature) did not converge.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Dilogarithm evaluated on [1, inf).
class BranchCutError : public Error {
public:
    using Error::Error;
};

// Malformed polynomial text or product-spec file.
class ParseError : public Error {
public:
    using Error::Error;
};

// A substituted product factor does not start with constant term 1.
class DivergentFactor : public Error {
public:
    using Error::Error;
};

// The asymptotic theorem's hypotheses (gamma > 0, positivity) fail.
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

} // namespace diamonds
