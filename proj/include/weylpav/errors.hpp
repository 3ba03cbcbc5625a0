#pragma once

#include <stdexcept>
#include <string>

namespace weylpav {

/// Base class of every recoverable error raised by the toolkit.
///
/// Shape mismatches and other caller contract violations are reported with
/// std::invalid_argument instead; these types name conditions that depend on
/// the values of well-formed inputs.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular") {}
};

class NotSymmetric : public Error {
public:
    NotSymmetric() : Error("matrix is not symmetric") {}
};

class NonUnimodular : public Error {
public:
    explicit NonUnimodular(const std::string& what = "matrix is not unimodular") : Error(what) {}
};

class NotSymplectic : public Error {
public:
    NotSymplectic() : Error("matrix does not preserve the standard alternating form") {}
};

class SingularDenominator : public Error {
public:
    SingularDenominator() : Error("C*Z + D is singular") {}
};

class UnsupportedGenerator : public Error {
public:
    UnsupportedGenerator() : Error("generator has a non-zero lower-left block") {}
};

class DeterminantNotOne : public Error {
public:
    DeterminantNotOne() : Error("ad - bc must equal 1") {}
};

class LevelViolation : public Error {
public:
    explicit LevelViolation(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace weylpav
