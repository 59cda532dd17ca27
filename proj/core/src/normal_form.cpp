#include "coxcanon/normal_form.hpp"

#include <cstddef>

namespace coxcanon {

namespace {

// Smallest nonzero |entry| of m in the submatrix with row >= t0, col >= t1;
// ties broken by lowest row, then lowest column. Returns false if all zero.
bool find_min_pivot(const IntMatrix& m, std::size_t t0, std::size_t t1,
                    std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t i = t0; i < m.rows(); ++i) {
    for (std::size_t j = t1; j < m.cols(); ++j) {
      const Integer& e = m.at(i, j);
      if (e == 0) continue;
      Integer a = abs_int(e);
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
      }
    }
  }
  return found;
}

}  // namespace

HermiteForm hnf(const IntMatrix& a) {
  if (a.empty()) throw DimensionMismatch("hnf of empty matrix");
  HermiteForm out{a, IntMatrix::identity(a.rows())};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  const std::size_t m = h.rows(), n = h.cols();

  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Clear the column below row r by repeated Euclidean reduction,
    // keeping the smallest remainder at row r.
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h.at(i, c) == 0) continue;
        if (best == m || abs_int(h.at(i, c)) < abs_int(h.at(best, c))) best = i;
      }
      if (best == m) break;  // column is zero from row r down
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h.at(i, c) == 0) continue;
        Integer q = h.at(i, c) / h.at(r, c);  // truncated; remainder shrinks
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(r, c) == 0) continue;
    if (h.at(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h.at(i, c), h.at(r, c));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return out;
}

SmithDecomposition snf(const IntMatrix& a) {
  if (a.empty()) throw DimensionMismatch("snf of empty matrix");
  SmithDecomposition out{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
  IntMatrix& u = out.u;
  IntMatrix& s = out.s;
  IntMatrix& v = out.v;
  const std::size_t m = s.rows(), n = s.cols();
  const std::size_t k = m < n ? m : n;

  for (std::size_t t = 0; t < k; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_min_pivot(s, t, t, pr, pc)) break;
    s.swap_rows(t, pr);
    u.swap_rows(t, pr);
    s.swap_cols(t, pc);
    v.swap_cols(t, pc);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s.at(i, t) == 0) continue;
        Integer q = s.at(i, t) / s.at(t, t);
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s.at(t, j) == 0) continue;
        Integer q = s.at(t, j) / s.at(t, t);
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // Remainders are strictly smaller; re-pivot on the new minimum.
        if (!find_min_pivot(s, t, t, pr, pc)) break;
        s.swap_rows(t, pr);
        u.swap_rows(t, pr);
        s.swap_cols(t, pc);
        v.swap_cols(t, pc);
        continue;
      }
      // Row and column are clear; enforce that the pivot divides the
      // remaining submatrix before moving on.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i) {
        for (std::size_t j = t + 1; j < n && divisible; ++j) {
          if (s.at(i, j) % s.at(t, t) != 0) {
            s.add_row_multiple(t, i, Integer(1));
            u.add_row_multiple(t, i, Integer(1));
            divisible = false;
          }
        }
      }
      if (divisible) break;
    }
  }
  for (std::size_t t = 0; t < k; ++t) {
    if (s.at(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return out;
}

std::size_t SmithDecomposition::rank() const {
  const std::size_t k = s.rows() < s.cols() ? s.rows() : s.cols();
  std::size_t r = 0;
  while (r < k && s.at(r, r) != 0) ++r;
  return r;
}

IntVec SmithDecomposition::diagonal() const {
  const std::size_t k = s.rows() < s.cols() ? s.rows() : s.cols();
  IntVec d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = s.at(i, i);
  return d;
}

std::size_t rank(const IntMatrix& a) {
  if (a.empty()) return 0;
  return snf(a).rank();
}

IntMatrix kernel_basis(const IntMatrix& a) {
  if (a.empty()) {
    // A map from Z^cols with no constraints: kernel is everything.
    return IntMatrix::identity(a.cols());
  }
  SmithDecomposition d = snf(a);
  const std::size_t r = d.rank();
  const std::size_t n = a.cols();
  IntMatrix basis(n, n - r);
  for (std::size_t j = r; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) basis.at(i, j - r) = d.v.at(i, j);
  return basis;
}

std::size_t fraction_free_rank(const IntMatrix& a) {
  if (a.empty()) return 0;
  IntMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m.at(p, c) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m.at(i, j) = (m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j)) / prev;
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve_integer shape mismatch");
  if (a.empty()) throw DimensionMismatch("solve_integer on empty matrix");
  SmithDecomposition d = snf(a);
  const std::size_t r = d.rank();
  IntVec y = d.u * b;
  IntVec z(a.cols(), Integer(0));
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < r) {
      if (y[i] % d.s.at(i, i) != 0) return std::nullopt;
      if (i < a.cols()) z[i] = y[i] / d.s.at(i, i);
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return d.v * z;
}

}  // namespace coxcanon
