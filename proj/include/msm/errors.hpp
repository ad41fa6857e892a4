#pragma once

#include <stdexcept>
#include <string>

namespace msm {

// Base of every error raised by the library. The CLI maps subclasses to
// exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument sits on a pole of the gamma function.
class PoleError : public Error {
public:
    using Error::Error;
};

// A precondition on the parameters does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

// A series is outside its region of convergence.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Power prefactor is singular for the requested branch.
class BranchError : public Error {
public:
    using Error::Error;
};

// A quadrature node needs the Appell kernel outside its bi-disk.
class KernelDivergence : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Result magnitude exceeds double range; log_magnitude is ln|result|.
class OverflowError : public Error {
public:
    OverflowError(const std::string& what, double log_magnitude)
        : Error(what), log_magnitude_(log_magnitude) {}
    double log_magnitude() const noexcept { return log_magnitude_; }

private:
    double log_magnitude_;
};

} // namespace msm
