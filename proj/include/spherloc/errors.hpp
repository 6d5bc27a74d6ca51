#pragma once

#include <stdexcept>
#include <string>

namespace spherloc {

// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Adaptive quadrature ran out of subdivisions before reaching tolerance.
class SubdivisionLimit : public Error {
public:
    using Error::Error;
};

// Power-weight integral against an unbounded body.
class NonIntegrable : public Error {
public:
    using Error::Error;
};

// Needle density integrates to zero on its support.
class DegenerateNeedle : public Error {
public:
    using Error::Error;
};

// Support function requested in a direction where the body is unbounded.
class Unbounded : public Error {
public:
    using Error::Error;
};

// Polar dual of a body whose interior misses the origin.
class OriginNotInterior : public Error {
public:
    using Error::Error;
};

// Angular density cos(t+phase)^m changes sign inside the requested interval.
class PhaseDomain : public Error {
public:
    using Error::Error;
};

// A ratio check whose denominator factor vanished.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

// Interval too short for the alpha ratio to be well defined.
class DegenerateInterval : public Error {
public:
    using Error::Error;
};

// Body fails the unit-ball / outer-ball containment required by the alpha pipeline.
class SandwichViolation : public Error {
public:
    using Error::Error;
};

// No phase in [0,pi] keeps the density nonnegative on the cone.
class EmptyAdmissibleSet : public Error {
public:
    using Error::Error;
};

// Malformed body-definition input.
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace spherloc
