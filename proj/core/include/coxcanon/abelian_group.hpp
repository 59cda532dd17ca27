#pragma once

#include "coxcanon/normal_form.hpp"

#include <optional>
#include <vector>

namespace coxcanon {

/// Element of an FGAbelianGroup, in the group's own coordinates:
/// torsion coordinates first (each reduced into [0, t_i)), free coordinates after.
struct GroupElement {
  IntVec coords;
  bool operator==(const GroupElement&) const = default;
};

/// Finitely generated abelian group  Z/t_1 x ... x Z/t_k x Z^f  presented as a
/// cokernel, together with the projection from the ambient lattice it was
/// born from. Invariant factors satisfy t_i > 1 and t_i | t_{i+1}.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;

  static FGAbelianGroup free_group(std::size_t rank);

  std::size_t free_rank() const { return free_rank_; }
  const IntVec& torsion() const { return torsion_; }
  std::size_t coord_count() const { return torsion_.size() + free_rank_; }
  std::size_t ambient_rank() const { return projection_.cols(); }
  /// Rows: torsion coordinates first, then free coordinates.
  const IntMatrix& projection() const { return projection_; }
  bool is_trivial() const { return coord_count() == 0; }
  /// Group order when finite, nullopt otherwise.
  std::optional<Integer> order() const;

  GroupElement zero() const { return GroupElement{IntVec(coord_count(), Integer(0))}; }
  /// Reduce raw coordinates (torsion part taken mod its factor).
  GroupElement reduce(IntVec coords) const;
  GroupElement from_ambient(const IntVec& ambient) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(const Integer& k, const GroupElement& a) const;
  bool is_zero(const GroupElement& a) const;

  /// Integer coefficients x with target = sum x_i * gens_i in the group,
  /// or nullopt when target is outside the generated subgroup.
  std::optional<IntVec> subgroup_membership(const std::vector<GroupElement>& gens,
                                            const GroupElement& target) const;

  /// True when no nonzero integer vector n gives sum n_i * gens_i == 0.
  bool independent(const std::vector<GroupElement>& gens) const;

  /// Quotient by the subgroup generated by gens. The result's projection maps
  /// this group's coordinates to the quotient's coordinates.
  FGAbelianGroup quotient(const std::vector<GroupElement>& gens) const;

  bool operator==(const FGAbelianGroup&) const = default;

 private:
  friend FGAbelianGroup cokernel_presentation(const IntMatrix& relations);
  /// Columns of gens plus this group's torsion relations, as one matrix.
  IntMatrix relation_matrix(const std::vector<GroupElement>& gens) const;

  std::size_t free_rank_ = 0;
  IntVec torsion_;
  IntMatrix projection_;
};

/// Z^rows(A) modulo the column space of A, with the induced projection.
/// Free projection rows are HNF-normalized and torsion rows reduced mod their
/// factor, so equal inputs give byte-identical presentations.
FGAbelianGroup cokernel_presentation(const IntMatrix& relations);

/// Integer coefficients expressing target in the sublattice spanned by the
/// generators, or nullopt. Throws DimensionMismatch on ragged input.
std::optional<IntVec> sublattice_membership(const std::vector<IntVec>& generators,
                                            const IntVec& target);

}  // namespace coxcanon
