#pragma once

#include <string>

#include "thetaq/cyclo.hpp"
#include "thetaq/heisenberg.hpp"
#include "thetaq/matrix.hpp"
#include "thetaq/tangle.hpp"
#include "thetaq/theta.hpp"

namespace thetaq {

/// JSON forms of the exact types.  Scalars are
///   { "nExp": "e", "coeffs": ["p/q", ...] }
/// with e a (half-)integer fraction; group elements are
///   { "p": [...], "q": [...], "k": n };
/// theta vectors are
///   { "N": n, "g": g, "coeffs": { "[i,j]": <scalar>, ... } };
/// operators are dense row-major entry arrays; diagrams mirror the .slc
/// grammar with events { "kind": "cup", "color": 1, "at": 0 }.

std::string scalar_to_json(const CycloScalar& s);
CycloScalar scalar_from_json(const std::string& text);

std::string heis_to_json(const HeisElement& x);
HeisElement heis_from_json(const std::string& text);

std::string theta_vector_to_json(const ThetaVector& v);
ThetaVector theta_vector_from_json(const std::string& text);

std::string operator_to_json(const CycloMatrix& m, long N);
CycloMatrix operator_from_json(const std::string& text);

std::string diagram_to_json(const SliceDiagram& d);
SliceDiagram diagram_from_json(const std::string& text);

}  // namespace thetaq
