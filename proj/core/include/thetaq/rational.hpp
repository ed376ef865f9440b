#pragma once

#include <gmpxx.h>

#include <string>

namespace thetaq {

/// Arbitrary-precision rational.  All exact-path coefficients are of this
/// type; no floating point enters until an explicit complex evaluation.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& text) {
    Rational r(text);
    r.canonicalize();
    return r;
}

inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

}  // namespace thetaq
