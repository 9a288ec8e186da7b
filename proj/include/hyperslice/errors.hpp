#pragma once

#include <stdexcept>
#include <string>

namespace hyperslice {

enum class ErrorKind {
    UnsupportedKind,
    DimensionTooLarge,
    AlgebraMismatch,
    NotInQuadraticCone,
    NotInvertible,
    NotImaginaryUnit,
    SplittingFailed,
    IndexOutOfRange,
    OutsideDomain,
    SphereMismatch,
    OnRealLocus,
    BlackBoxUnsupported,
    OutsideConvergenceBall,
    OnSingularSphere,
    NonAssociativeAlgebra,
    PointOutsideE,
    QuadratureSingularity,
    ConstantPolynomial,
    RefinementFailed,
    EvaluationFailure,
    InvalidArgument,
    SyntaxError,
    UnknownBasisName,
};

const char* error_kind_name(ErrorKind k);

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }
    const char* kind_name() const noexcept { return error_kind_name(kind_); }

    /// Parse errors map to CLI exit code 3, everything else to 2.
    bool is_parse_error() const noexcept {
        return kind_ == ErrorKind::SyntaxError || kind_ == ErrorKind::UnknownBasisName;
    }

private:
    ErrorKind kind_;
};

class SyntaxError : public Error {
public:
    SyntaxError(int line, int col, std::string expected)
        : Error(ErrorKind::SyntaxError,
                "syntax error at " + std::to_string(line) + ":" + std::to_string(col) +
                    ": expected " + expected),
          line_(line), col_(col), expected_(std::move(expected)) {}
    int line() const noexcept { return line_; }
    int col() const noexcept { return col_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    int line_;
    int col_;
    std::string expected_;
};

}  // namespace hyperslice
