#pragma once

#include <stdexcept>
#include <string>

namespace hk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact division requested but the divisor does not divide the dividend.
class NotDivisible : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public NotDivisible {
public:
    DivisionByZero() : NotDivisible("division by zero") {}
};

/// An operation needs a numeric value but got a polynomial (or an integer
/// but got a proper rational).
class KindMismatch : public Error {
public:
    using Error::Error;
};

class ZeroConstantTerm : public Error {
public:
    ZeroConstantTerm() : Error("series has zero constant term") {}
};

class NonUnitConstantTerm : public Error {
public:
    NonUnitConstantTerm() : Error("square root needs constant term 1") {}
};

/// A closed-form determinant was asked for outside the (m, k, size) cells it covers.
class OutOfDomain : public Error {
public:
    using Error::Error;
};

/// d0(n) vanished while extracting recurrence coefficients.
class SingularHankel : public Error {
public:
    explicit SingularHankel(int order)
        : Error("Hankel determinant d0(" + std::to_string(order) + ") vanishes"), order_(order) {}
    int order() const noexcept { return order_; }

private:
    int order_;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class ResourceCap : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace hk
