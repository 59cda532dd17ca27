#pragma once

#include "coxcanon/numeric.hpp"

#include <vector>

namespace coxcanon {

/// h^i(P^n, O(d)) in closed form: nonzero only at i = 0 (d >= 0) and i = n
/// (d <= -n-1), by Serre duality C(-d-1, n) in the top degree.
Integer bott_dimension(long n, long d, long i);

/// Line-bundle cohomology on a product of projective spaces.
struct CohomologyQuery {
  std::vector<long> factor_dims;  ///< (n_1, ..., n_k)
  std::vector<long> twists;       ///< (d_1, ..., d_k)
  long index = 0;                 ///< cohomological degree i
};

/// h^i of O(d_1, ..., d_k) on P^{n_1} x ... x P^{n_k}:
/// sum over i_1 + ... + i_k = i of the product of factor dimensions.
Integer kunneth_dimension(const CohomologyQuery& q);

}  // namespace coxcanon
