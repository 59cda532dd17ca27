#include "coxcanon/abelian_group.hpp"

#include <stdexcept>

namespace coxcanon {

namespace {

Integer mod_reduce(const Integer& a, const Integer& t) {
  Integer r = a % t;
  if (r < 0) r += t;
  return r;
}

}  // namespace

FGAbelianGroup FGAbelianGroup::free_group(std::size_t rank) {
  FGAbelianGroup g;
  g.free_rank_ = rank;
  g.projection_ = IntMatrix::identity(rank);
  return g;
}

std::optional<Integer> FGAbelianGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Integer n = 1;
  for (const Integer& t : torsion_) n *= t;
  return n;
}

GroupElement FGAbelianGroup::reduce(IntVec coords) const {
  if (coords.size() != coord_count()) throw DimensionMismatch("group coordinate length");
  for (std::size_t i = 0; i < torsion_.size(); ++i) coords[i] = mod_reduce(coords[i], torsion_[i]);
  return GroupElement{std::move(coords)};
}

GroupElement FGAbelianGroup::from_ambient(const IntVec& ambient) const {
  if (ambient.size() != ambient_rank()) throw DimensionMismatch("ambient coordinate length");
  return reduce(projection_ * ambient);
}

GroupElement FGAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  IntVec c(coord_count());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
  return reduce(std::move(c));
}

GroupElement FGAbelianGroup::negate(const GroupElement& a) const {
  IntVec c(coord_count());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coords[i];
  return reduce(std::move(c));
}

GroupElement FGAbelianGroup::scale(const Integer& k, const GroupElement& a) const {
  IntVec c(coord_count());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.coords[i];
  return reduce(std::move(c));
}

bool FGAbelianGroup::is_zero(const GroupElement& a) const {
  for (const Integer& c : a.coords)
    if (c != 0) return false;
  return true;
}

IntMatrix FGAbelianGroup::relation_matrix(const std::vector<GroupElement>& gens) const {
  const std::size_t c = coord_count();
  IntMatrix m(c, gens.size() + torsion_.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].coords.size() != c) throw DimensionMismatch("generator coordinate length");
    for (std::size_t i = 0; i < c; ++i) m.at(i, j) = gens[j].coords[i];
  }
  for (std::size_t i = 0; i < torsion_.size(); ++i) m.at(i, gens.size() + i) = torsion_[i];
  return m;
}

std::optional<IntVec> FGAbelianGroup::subgroup_membership(const std::vector<GroupElement>& gens,
                                                          const GroupElement& target) const {
  if (target.coords.size() != coord_count()) throw DimensionMismatch("target coordinate length");
  if (coord_count() == 0) return IntVec(gens.size(), Integer(0));
  if (gens.empty() && torsion_.empty()) {
    for (const Integer& c : target.coords)
      if (c != 0) return std::nullopt;
    return IntVec{};
  }
  auto sol = solve_integer(relation_matrix(gens), target.coords);
  if (!sol) return std::nullopt;
  IntVec coeffs(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(gens.size()));
  // Re-substitute; membership answers are always verified.
  GroupElement check = zero();
  for (std::size_t j = 0; j < gens.size(); ++j) check = add(check, scale(coeffs[j], gens[j]));
  if (!(check == target)) throw std::logic_error("subgroup membership re-substitution failed");
  return coeffs;
}

bool FGAbelianGroup::independent(const std::vector<GroupElement>& gens) const {
  if (gens.empty()) return true;
  if (coord_count() == 0) return false;  // every element is zero
  IntMatrix m = relation_matrix(gens);
  return rank(m) == m.cols();
}

FGAbelianGroup FGAbelianGroup::quotient(const std::vector<GroupElement>& gens) const {
  if (coord_count() == 0) return *this;
  if (gens.empty() && torsion_.empty()) return free_group(free_rank_);
  return cokernel_presentation(relation_matrix(gens));
}

FGAbelianGroup cokernel_presentation(const IntMatrix& relations) {
  if (relations.empty()) throw DimensionMismatch("cokernel of empty matrix");
  const std::size_t m = relations.rows();
  SmithDecomposition d = snf(relations);
  const std::size_t r = d.rank();

  FGAbelianGroup g;
  g.free_rank_ = m - r;
  std::vector<std::size_t> torsion_rows;
  for (std::size_t i = 0; i < r; ++i) {
    if (d.s.at(i, i) > 1) {
      g.torsion_.push_back(d.s.at(i, i));
      torsion_rows.push_back(i);
    }
  }

  g.projection_ = IntMatrix(g.torsion_.size() + g.free_rank_, m);
  for (std::size_t k = 0; k < torsion_rows.size(); ++k) {
    for (std::size_t c = 0; c < m; ++c)
      g.projection_.at(k, c) = mod_reduce(d.u.at(torsion_rows[k], c), g.torsion_[k]);
  }
  if (g.free_rank_ > 0) {
    IntMatrix free_rows(g.free_rank_, m);
    for (std::size_t i = 0; i < g.free_rank_; ++i)
      for (std::size_t c = 0; c < m; ++c) free_rows.at(i, c) = d.u.at(r + i, c);
    // Normalize the free basis so the presentation is canonical.
    IntMatrix h = hnf(free_rows).h;
    for (std::size_t i = 0; i < g.free_rank_; ++i)
      for (std::size_t c = 0; c < m; ++c)
        g.projection_.at(g.torsion_.size() + i, c) = h.at(i, c);
  }
  return g;
}

std::optional<IntVec> sublattice_membership(const std::vector<IntVec>& generators,
                                            const IntVec& target) {
  for (const IntVec& gen : generators)
    if (gen.size() != target.size()) throw DimensionMismatch("generator length != target length");
  if (generators.empty()) {
    for (const Integer& c : target)
      if (c != 0) return std::nullopt;
    return IntVec{};
  }
  if (target.empty()) return IntVec(generators.size(), Integer(0));
  auto sol = solve_integer(IntMatrix::from_columns(generators), target);
  if (!sol) return std::nullopt;
  // Re-substitute; a wrong witness here would mean a normal-form bug.
  IntVec check(target.size(), Integer(0));
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (std::size_t i = 0; i < target.size(); ++i) check[i] += (*sol)[j] * generators[j][i];
  if (check != target) throw std::logic_error("sublattice membership re-substitution failed");
  return sol;
}

}  // namespace coxcanon
