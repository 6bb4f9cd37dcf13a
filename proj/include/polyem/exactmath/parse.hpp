#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polyem/exactmath/scalar.hpp"
#include "polyem/exactmath/spoly.hpp"

namespace polyem::exact {

/// Parses an arithmetic expression over integers and the named parameters
/// (+ - * / ^ and parentheses), e.g. "3/4", "-d1", "(a*c - b^2)/2".
/// Unknown identifiers raise ParseError.
Scalar parse_scalar(std::string_view text, const std::vector<std::string>& names = {});

/// Parses a polynomial with rational coefficients in the given variables,
/// e.g. "x1^2 + x2/3".
SPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

/// Reinterprets a parameter-valued polynomial as an SPoly in the same
/// variables; the denominator must be constant.
SPoly scalar_to_poly(const Scalar& s);

}  // namespace polyem::exact
