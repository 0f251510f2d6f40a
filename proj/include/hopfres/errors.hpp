#pragma once

#include <stdexcept>
#include <string>

namespace hopfres {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("zero polynomial not allowed here") {}
};
struct BothZero : Error {
    BothZero() : Error("gcd of two zero polynomials") {}
};
struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
};
struct DimensionMismatch : Error {
    using Error::Error;
    DimensionMismatch() : Error("matrix dimensions do not match") {}
};
struct LengthMismatch : Error {
    using Error::Error;
    LengthMismatch() : Error("vector length does not match") {}
};
struct NotACharacter : Error {
    using Error::Error;
};
struct NotAComplex : Error {
    using Error::Error;
};
struct AlphabetMismatch : Error {
    using Error::Error;
    AlphabetMismatch() : Error("polynomial uses letters outside the alphabet") {}
};
struct DegreeExceedsBound : Error {
    using Error::Error;
    DegreeExceedsBound() : Error("polynomial degree exceeds the requested bound") {}
};
struct UnsupportedPresentation : Error {
    UnsupportedPresentation() : Error("operation requires a built-in presentation") {}
};
struct VerificationFailed : Error {
    using Error::Error;
};

} // namespace hopfres
