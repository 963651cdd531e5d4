// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "decmin/rational.hpp"

namespace decmin::linalg {

using Matrix = std::vector<RatVec>;

/// Row rank via fraction-exact Gaussian elimination.
int rank(Matrix m);

/// Solve the square system Ax = b; nullopt when A is singular.
std::optional<RatVec> solve_square(Matrix a, RatVec b);

/// Basis of {x : Mx = 0}, one vector per free column.
std::vector<RatVec> nullspace(Matrix m, int cols);

/// Scale a rational vector to a primitive integer vector (clears
/// denominators, divides by the gcd, keeps orientation). Zero stays zero.
RatVec primitive(const RatVec& v);

}  // namespace decmin::linalg
