#pragma once

#include <string>

#include "prolong/lie_algebra.hpp"

namespace prolong {

/// Canonical algebra JSON:
/// {"basis": [{"name": str, "degree": int}...],
///  "brackets": [{"left": str, "right": str,
///                "value": [{"name": str, "coeff": "p/q"}...]}...]}
/// Brackets are emitted for i < j in basis order, nonzero entries only, so
/// export -> import -> export is byte-identical.
std::string algebra_to_json(const GradedAlgebra& a);
GradedAlgebra algebra_from_json(const std::string& text);

}  // namespace prolong
