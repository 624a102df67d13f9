#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sympcliff/scalars.hpp"

namespace sympcliff {

/// Formats sum(c_k * name_k) in DSL syntax, e.g. "q^2/2 - 3*q*p + 1".
/// Zero coefficients are skipped; an empty name denotes the constant term.
std::string format_combination(const std::vector<std::pair<Rational, std::string>>& terms);

}  // namespace sympcliff
