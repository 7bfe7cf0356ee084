#ifndef ORDSTAT_ERRORS_HPP
#define ORDSTAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ordstat {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed spec string (distribution or cost grammar) or invalid parameters.
class ParseError : public Error {
public:
    using Error::Error;
};

// Argument outside an operation's domain (e.g. hazard where the survival
// probability is zero, quantile outside (0,1), reserve outside the support).
class DomainError : public Error {
public:
    using Error::Error;
};

// The requested expectation does not exist for the given family and indices.
class NoMomentError : public Error {
public:
    using Error::Error;
};

// Adaptive quadrature exhausted its panel budget before reaching tolerance.
// `achieved` carries the error estimate at the point of giving up.
class NumericalError : public Error {
public:
    NumericalError(const std::string& what, double achieved_error)
        : Error(what), achieved(achieved_error) {}
    double achieved;
};

// The optimizer's objective was still improving at the end of the scan range,
// so the reported maximizer would be an artifact of the cutoff.
class BoundaryMaximizerError : public Error {
public:
    using Error::Error;
};

}  // namespace ordstat

#endif
