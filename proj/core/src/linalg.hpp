#pragma once

// Internal exact linear algebra helpers shared by the polytope code.

#include "lipnorm/rational.hpp"

#include <optional>
#include <vector>

namespace lipnorm::detail {

using IntegerRow = std::vector<mpz_class>;

/// Row scaled by the lcm of its denominators, so every entry is an integer.
IntegerRow to_integer_row(const Vector& row);

/// Bareiss fraction-free elimination; destroys its argument.
std::size_t bareiss_rank(std::vector<IntegerRow> rows, std::size_t cols);

/// Unique solution of a square system, or nullopt when singular.
std::optional<Vector> solve_square(std::vector<Vector> a, Vector b);

}  // namespace lipnorm::detail
