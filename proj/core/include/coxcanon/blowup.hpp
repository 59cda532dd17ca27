#pragma once

#include "coxcanon/abelian_group.hpp"

#include <stdexcept>
#include <vector>

namespace coxcanon {

struct InvalidPointConfig : std::runtime_error {
  explicit InvalidPointConfig(const std::string& what) : std::runtime_error(what) {}
};

/// r distinct rational closed points of P^n, by homogeneous coordinates.
/// Requires n >= 2 (blow-ups of a curve at points degenerate: the class group
/// is no longer free of rank r+1).
struct PointConfig {
  std::size_t n = 0;
  std::vector<RatVec> points;
  std::size_t count() const { return points.size(); }
};

/// Throws InvalidPointConfig on coordinate-length, zero-point or
/// proportional-point violations.
void validate_point_config(const PointConfig& config);

/// dA - sum_i c_i E_i on the blow-up of P^n at the configured points.
struct BlowupDivisor {
  Integer d;
  IntVec c;
  bool operator==(const BlowupDivisor&) const = default;
};

/// h^0(X, O_X(dA - sum c_i E_i)) = dim of degree-d forms vanishing to order
/// >= max(c_i, 0) at each point; c_i <= 0 imposes nothing. Computed as
/// C(d+n, n) minus the exact rank of the Taylor-condition matrix.
Integer section_dimension_blowup(const PointConfig& config, const BlowupDivisor& divisor);

/// Cl(X) = Z^{r+1}, freely generated in basis order (E_1, ..., E_r, A).
FGAbelianGroup class_group_blowup(const PointConfig& config);

/// K_X = (n-1)(E_1 + ... + E_r) - (n+1)A, i.e. d = -(n+1), c_i = -(n-1).
BlowupDivisor canonical_divisor_blowup(const PointConfig& config);

/// Coefficient vector of dA - sum c_i E_i in the basis (E_1, ..., E_r, A):
/// (-c_1, ..., -c_r, d).
IntVec blowup_basis_coefficients(const BlowupDivisor& divisor);

/// Inverse of blowup_basis_coefficients.
BlowupDivisor blowup_divisor_from_basis(const IntVec& coefficients);

}  // namespace coxcanon
