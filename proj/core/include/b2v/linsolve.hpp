#pragma once

#include <vector>

#include "b2v/rational.hpp"

namespace b2v {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A X = B exactly for an m x n matrix A with m >= n and an m x r
/// right-hand side B, returning the n x r solution.
///
/// Rows are scaled to integers and reduced with fraction-free (Bareiss)
/// elimination. Throws SingularSystem when rank(A) < n or when the
/// overdetermined system is inconsistent.
RationalMatrix solve_exact(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace b2v
