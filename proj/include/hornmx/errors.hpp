#pragma once

#include <stdexcept>
#include <string>

namespace hornmx {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix function requested on a spectrum point where the scalar function is undefined.
struct DomainError : Error {
    using Error::Error;
};

struct DefectiveMatrix : Error {
    double condition;
    DefectiveMatrix(const std::string& what, double cond) : Error(what), condition(cond) {}
};

// jI - A (or A + jI) is numerically singular; shift holds j.
struct SingularShift : Error {
    long shift;
    SingularShift(const std::string& what, long j) : Error(what), shift(j) {}
};

struct UnknownFunction : Error {
    using Error::Error;
};

struct RegionError : Error {
    using Error::Error;
};

struct OrderMismatch : Error {
    using Error::Error;
};

struct HypothesisViolation : Error {
    using Error::Error;
};

struct QuadratureFailure : Error {
    double error_estimate;
    QuadratureFailure(const std::string& what, double est) : Error(what), error_estimate(est) {}
};

}  // namespace hornmx
