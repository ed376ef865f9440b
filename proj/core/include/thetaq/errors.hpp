#pragma once

#include <stdexcept>
#include <string>

namespace thetaq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Attempted addition (or equality test) of scalars whose N-exponents
/// differ by a half-odd integer.  Deciding such identities would require
/// knowing whether sqrt(N) lies in the cyclotomic field, which the exact
/// layer refuses to do.
struct IncommensurableNExp : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct NotIsotropic : Error {
    using Error::Error;
};

struct NotPrimitive : Error {
    using Error::Error;
};

struct NotSymplectic : Error {
    using Error::Error;
};

struct SingularFourier : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct NonSymmetric : Error {
    using Error::Error;
};

struct NotPositiveDefinite : Error {
    using Error::Error;
};

struct BadN : Error {
    using Error::Error;
};

/// Diagram text could not be tokenized or has malformed fields.
struct SyntaxError : Error {
    SyntaxError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

/// Diagram ends with strands still open.
struct OpenStrands : Error {
    using Error::Error;
};

/// Cap joins strands of different colors or incompatible directions.
struct ColorMismatch : Error {
    using Error::Error;
};

/// Event addresses a strand position outside the current strand count.
struct BadPosition : Error {
    using Error::Error;
};

struct JsonError : Error {
    using Error::Error;
};

}  // namespace thetaq
