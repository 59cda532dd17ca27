#pragma once

#include "coxcanon/numeric.hpp"

#include <utility>
#include <vector>

namespace coxcanon {

/// One linear condition <normal, u> >= bound with integer normal and exact
/// rational bound.
struct Constraint {
  IntVec normal;
  Rational bound;
  bool operator==(const Constraint&) const = default;
};

/// Intersection of rational half-spaces in Z^n coordinates. Constraints are
/// gcd-normalized and deduplicated on construction (the tighter bound wins);
/// a contradictory constant constraint is kept so emptiness stays detectable.
class RationalPolyhedron {
 public:
  RationalPolyhedron(std::size_t dim, std::vector<Constraint> constraints);

  std::size_t dim() const { return dim_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  bool contains(const IntVec& point) const;
  bool contains(const RatVec& point) const;

  /// Shift every bound by <normal, t>; the result is P translated by t.
  RationalPolyhedron translated(const IntVec& t) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Constraint> constraints_;
};

enum class BoxKind { Bounded, Empty, Unbounded };

struct BoxResult {
  BoxKind kind = BoxKind::Empty;
  /// Per-coordinate inclusive integer bounds; only meaningful when Bounded.
  /// The integer box may still contain no lattice point.
  std::vector<std::pair<Integer, Integer>> box;
};

/// Exact boundedness/emptiness via Fourier-Motzkin elimination. When bounded
/// and nonempty, the box contains every lattice point of P (rational bounds
/// rounded inward).
BoxResult is_bounded_with_box(const RationalPolyhedron& p);

/// All integer points of a bounded P, in lexicographic order.
/// Throws UnboundedPolyhedron otherwise; an empty P yields an empty list.
std::vector<IntVec> enumerate_lattice_points(const RationalPolyhedron& p);

/// Exact projection onto the listed coordinates (in the listed order),
/// computed by eliminating all other variables.
RationalPolyhedron fourier_motzkin_project(const RationalPolyhedron& p,
                                           const std::vector<std::size_t>& keep);

}  // namespace coxcanon
