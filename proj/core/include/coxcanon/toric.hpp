#pragma once

#include "coxcanon/abelian_group.hpp"
#include "coxcanon/polyhedron.hpp"

#include <string>
#include <vector>

namespace coxcanon {

/// Complete rational fan: primitive ray generators plus maximal cones given
/// as ray index sets. Only simplicial full-dimensional maximal cones are
/// accepted; validate_fan reports anything else.
struct Fan {
  std::size_t rank = 0;
  std::vector<IntVec> rays;
  std::vector<std::vector<std::size_t>> max_cones;
};

struct FanDiagnostics {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Checks primitivity, strong convexity and completeness (facet pairing with
/// an opposite-side test across every shared ridge). Returns diagnostics
/// naming the violated invariant instead of throwing.
FanDiagnostics validate_fan(const Fan& fan);

/// Weil Q-divisor: one exact rational coefficient per ray.
struct ToricDivisor {
  RatVec coefficients;
  bool is_integral() const;
  bool operator==(const ToricDivisor&) const = default;
};

/// K_X: coefficient -1 on every ray.
ToricDivisor canonical_divisor(const Fan& fan);

/// div(chi^u): coefficient <u, v_rho> on each ray.
ToricDivisor principal_divisor(const Fan& fan, const IntVec& character);

/// Cl(X) as the cokernel of the character lattice mapping into Z^{rays};
/// the projection takes a divisor's coefficient vector to its class.
FGAbelianGroup class_group(const Fan& fan);

/// {u : <u, v_rho> >= -a_rho for all rays} in the character lattice.
RationalPolyhedron section_polyhedron(const Fan& fan, const ToricDivisor& d);

/// h^0(X, O_X(D)) = number of lattice points of the section polyhedron;
/// rational coefficients count the same points as their coefficientwise floor.
Integer section_dimension(const Fan& fan, const ToricDivisor& d);

/// Cartier: an integral linear functional m_sigma with <m_sigma, v_rho> =
/// -a_rho exists on every maximal cone. Integral divisors only.
bool is_cartier(const Fan& fan, const ToricDivisor& d);

/// Ample: Cartier and the support function is strictly convex across every
/// shared ridge (checked in both directions).
bool is_ample(const Fan& fan, const ToricDivisor& d);

Fan projective_space_fan(std::size_t n);
Fan product_of_p1_fan(std::size_t factors);
Fan del_pezzo6_fan();
Fan hirzebruch_fan(long a);

}  // namespace coxcanon
