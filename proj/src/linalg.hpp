#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace genera {

/// Solves the square system A x = b exactly over the rationals by
/// Gaussian elimination with nonzero pivot search. Returns nothing when
/// the matrix is singular.
std::optional<std::vector<Rational>> solve_linear_system(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b);

}  // namespace genera
