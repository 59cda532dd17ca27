#include "coxcanon/normal_form.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace coxcanon;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long max_entry) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<long> entry(-max_entry, max_entry);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
  return m;
}

bool is_hermite(const IntMatrix& h) {
  std::size_t prev_pivot = 0;
  bool prev_set = false;
  bool seen_zero_row = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h.at(r, c) == 0) ++c;
    if (c == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;          // nonzero row under a zero row
    if (prev_set && c <= prev_pivot) return false;  // not echelon
    if (h.at(r, c) <= 0) return false;
    for (std::size_t i = 0; i < r; ++i)
      if (h.at(i, c) < 0 || h.at(i, c) >= h.at(r, c)) return false;
    prev_pivot = c;
    prev_set = true;
  }
  return true;
}

void check_smith(const IntMatrix& a) {
  SmithDecomposition d = snf(a);
  CHECK(d.u * a * d.v == d.s);
  CHECK(abs_int(determinant(d.u)) == 1);
  CHECK(abs_int(determinant(d.v)) == 1);
  IntVec diag = d.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (i + 1 < diag.size() && diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
    if (diag[i] == 0 && i + 1 < diag.size()) CHECK(diag[i + 1] == 0);
  }
  // Off-diagonal entries of s vanish.
  for (std::size_t r = 0; r < d.s.rows(); ++r)
    for (std::size_t c = 0; c < d.s.cols(); ++c)
      if (r != c) CHECK(d.s.at(r, c) == 0);
  // Determinantal divisors: prod of the first j diagonal entries equals the
  // gcd of all j x j minors.
  Integer prod = 1;
  for (std::size_t j = 1; j <= diag.size(); ++j) {
    prod *= diag[j - 1];
    CHECK(prod == oracle::determinantal_divisor(a, j));
  }
}

}  // namespace

TEST_CASE("hnf identity") {
  IntMatrix id = IntMatrix::identity(2);
  HermiteForm f = hnf(id);
  CHECK(f.h == id);
  CHECK(f.u == id);
}

TEST_CASE("hnf 2x2 frozen instance") {
  IntMatrix a{{2, 4}, {6, 8}};
  HermiteForm f = hnf(a);
  CHECK(f.h == IntMatrix{{2, 0}, {0, 4}});
  CHECK(f.u * a == f.h);
  CHECK(abs_int(determinant(f.u)) == 1);
  CHECK(abs_int(determinant(f.h)) == abs_int(determinant(a)));
}

TEST_CASE("hnf zero matrix") {
  IntMatrix z(2, 2);
  HermiteForm f = hnf(z);
  CHECK(f.h == z);
  CHECK(abs_int(determinant(f.u)) == 1);
}

TEST_CASE("hnf shape on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a = random_matrix(rng, 4, 9);
    HermiteForm f = hnf(a);
    CHECK(f.u * a == f.h);
    CHECK(abs_int(determinant(f.u)) == 1);
    CHECK(is_hermite(f.h));
  }
}

TEST_CASE("snf identity") {
  IntMatrix id = IntMatrix::identity(3);
  CHECK(snf(id).s == id);
}

TEST_CASE("snf frozen instances") {
  SUBCASE("2x2") {
    SmithDecomposition d = snf(IntMatrix{{2, 4}, {6, 8}});
    CHECK(d.diagonal() == IntVec{2, 4});
  }
  SUBCASE("4x2 pairing matrix") {
    SmithDecomposition d = snf(IntMatrix{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    CHECK(d.diagonal() == IntVec{1, 1});
    CHECK(d.rank() == 2);
  }
}

TEST_CASE("snf invariants on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) check_smith(random_matrix(rng, 4, 9));
}

TEST_CASE("fraction-free rank agrees with snf rank") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    IntMatrix a = random_matrix(rng, 4, 9);
    CHECK(fraction_free_rank(a) == rank(a));
  }
}

TEST_CASE("kernel basis spans the kernel") {
  IntMatrix a{{1, 2, 3}, {2, 4, 6}};
  IntMatrix k = kernel_basis(a);
  CHECK(k.cols() == 2);
  for (std::size_t j = 0; j < k.cols(); ++j) {
    IntVec v = k.col(j);
    IntVec im = a * v;
    for (const Integer& x : im) CHECK(x == 0);
  }
}

TEST_CASE("solve_integer") {
  IntMatrix a{{2, 0}, {0, 3}};
  auto sol = solve_integer(a, IntVec{4, -9});
  REQUIRE(sol.has_value());
  CHECK(*sol == IntVec{2, -3});
  CHECK_FALSE(solve_integer(a, IntVec{1, 0}).has_value());
  CHECK_FALSE(solve_integer(IntMatrix{{1}, {1}}, IntVec{0, 1}).has_value());
}

TEST_CASE("entries stay exact far beyond 64 bits") {
  // Hilbert-like matrix scaled: intermediate HNF entries explode; everything
  // must stay exact.
  IntMatrix a(4, 4);
  Integer big("123456789012345678901234567890");
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) a.at(r, c) = big / Integer(1 + r + c) + Integer(r * c);
  SmithDecomposition d = snf(a);
  CHECK(d.u * a * d.v == d.s);
  CHECK(abs_int(determinant(d.u)) == 1);
  CHECK(abs_int(determinant(d.v)) == 1);
}
