#ifndef EULERCC_ERRORS_HPP
#define EULERCC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eulercc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (dimension mismatch, unknown simplex, bad JSON).
class InputError : public Error
{
public:
    using Error::Error;
};

/// A covector, Hessian or critical locus is degenerate where nondegeneracy is required.
class DegeneracyError : public Error
{
public:
    using Error::Error;
};

/// A slicing level coincides with a vertex value of a face on which the function is not constant.
class UnstableLevelError : public Error
{
public:
    using Error::Error;
};

/// A theorem's hypothesis does not hold for the given input.
class HypothesisError : public Error
{
public:
    HypothesisError(const std::string& what, std::string witness = {})
        : Error(what), witness_(std::move(witness))
    {
    }

    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

/// The cutting hyperplane passes through a vertex of the complex.
class TransversalityError : public HypothesisError
{
public:
    using HypothesisError::HypothesisError;
};

/// Perturbed Morse counts did not stabilize within the schedule.
class ConvergenceError : public Error
{
public:
    using Error::Error;
};

/// A contributing critical point landed on the frontier of the tube.
class BoundaryCollisionError : public Error
{
public:
    using Error::Error;
};

} // namespace eulercc

#endif // EULERCC_ERRORS_HPP
