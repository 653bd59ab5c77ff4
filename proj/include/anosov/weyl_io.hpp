#pragma once

// JSON form: {"gamma": g, "terms": [{"nu": [n1, n2], "re": x, "im": y}, ...]}.
// Doubles are written in shortest round-trip form, so parse(dump(x)) is bit-exact.

#include <string>
#include <string_view>

#include "anosov/weyl.hpp"

namespace anosov {

std::string to_json(const WeylPolynomial& a);
std::string to_json(const StateFunctional& f);

/// Throw std::invalid_argument on malformed input or violated invariants.
WeylPolynomial polynomial_from_json(std::string_view text);
StateFunctional state_from_json(std::string_view text);

}  // namespace anosov
