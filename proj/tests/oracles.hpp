#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include "coxcanon/abelian_group.hpp"
#include "coxcanon/int_matrix.hpp"
#include "coxcanon/polyhedron.hpp"

#include <optional>
#include <set>
#include <vector>

namespace coxcanon::oracle {

// gcd of all j x j minors of a (0 when every minor vanishes).
inline Integer determinantal_divisor(const IntMatrix& a, std::size_t j) {
  Integer g = 0;

  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (cur.size() == k) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  };
  row_sets = subsets(a.rows(), j);
  col_sets = subsets(a.cols(), j);
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      IntMatrix minor(j, j);
      for (std::size_t r = 0; r < j; ++r)
        for (std::size_t c = 0; c < j; ++c) minor.at(r, c) = a.at(rs[r], cs[c]);
      g = gcd_int(g, determinant(minor));
    }
  }
  return g;
}

// Brute-force coefficient search over [-bound, bound]^k.
inline std::optional<IntVec> membership_by_search(const std::vector<IntVec>& generators,
                                                  const IntVec& target, long bound) {
  const std::size_t k = generators.size();
  IntVec coeffs(k, Integer(-bound));
  if (k == 0) {
    for (const Integer& t : target)
      if (t != 0) return std::nullopt;
    return IntVec{};
  }
  for (;;) {
    IntVec sum(target.size(), Integer(0));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < target.size(); ++i) sum[i] += coeffs[j] * generators[j][i];
    if (sum == target) return coeffs;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (coeffs[i] < bound) {
        ++coeffs[i];
        for (std::size_t r = i + 1; r < k; ++r) coeffs[r] = -bound;
        break;
      }
      if (i == 0) return std::nullopt;
    }
  }
}

// Filter an a-priori box through the constraints directly; independent of the
// Fourier-Motzkin bounding-box path.
inline std::vector<IntVec> lattice_points_by_filter(
    const RationalPolyhedron& p, const std::vector<std::pair<long, long>>& box) {
  std::vector<IntVec> out;
  IntVec point(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) point[i] = box[i].first;
  for (;;) {
    if (p.contains(point)) out.push_back(point);
    std::size_t i = p.dim();
    bool done = true;
    while (i > 0) {
      --i;
      if (point[i] < box[i].second) {
        ++point[i];
        for (std::size_t j = i + 1; j < p.dim(); ++j) point[j] = box[j].first;
        done = false;
        break;
      }
      if (i == 0) break;
    }
    if (done) return out;
  }
}

// Distinct images of a coordinate box under the group projection; enumerates
// a finite quotient without trusting its invariant factors.
inline std::size_t quotient_size_by_enumeration(const FGAbelianGroup& g, long box) {
  std::set<IntVec> images;
  IntVec x(g.ambient_rank(), Integer(0));
  for (;;) {
    images.insert(g.from_ambient(x).coords);
    std::size_t i = g.ambient_rank();
    bool done = true;
    while (i > 0) {
      --i;
      if (x[i] < box) {
        ++x[i];
        for (std::size_t j = i + 1; j < g.ambient_rank(); ++j) x[j] = 0;
        done = false;
        break;
      }
      if (i == 0) break;
    }
    if (done) return images.size();
  }
}

}  // namespace coxcanon::oracle
