#pragma once

#include "coxcanon/int_matrix.hpp"

#include <optional>

namespace coxcanon {

struct HermiteForm {
  IntMatrix h;  ///< row-style Hermite normal form of the input
  IntMatrix u;  ///< unimodular, u * a == h
};

/// Row-style Hermite normal form: echelon shape, positive pivots,
/// entries above each pivot reduced into [0, pivot).
HermiteForm hnf(const IntMatrix& a);

struct SmithDecomposition {
  IntMatrix u;  ///< left unimodular
  IntMatrix s;  ///< diagonal, d_1 | d_2 | ... , all >= 0
  IntMatrix v;  ///< right unimodular
  /// Number of nonzero diagonal entries of s.
  std::size_t rank() const;
  /// Diagonal entries (length min(rows, cols)).
  IntVec diagonal() const;
};

/// Smith normal form with u * a * v == s. Pivot selection: smallest nonzero
/// absolute value, ties broken by lowest row index, then lowest column index,
/// so the decomposition is deterministic.
SmithDecomposition snf(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Basis of the integer kernel {x : a*x = 0}, returned as matrix columns
/// (cols() == 0 when the kernel is trivial).
IntMatrix kernel_basis(const IntMatrix& a);

/// One integral solution of a*x = b, or nullopt when none exists.
std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b);

/// Rank by fraction-free (Bareiss) elimination; cheaper than snf on matrices
/// with large entries and used for exact rational rank after row scaling.
std::size_t fraction_free_rank(const IntMatrix& a);

}  // namespace coxcanon
