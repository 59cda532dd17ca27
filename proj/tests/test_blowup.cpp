#include "coxcanon/blowup.hpp"

#include <doctest.h>

#include <random>

using namespace coxcanon;

namespace {

PointConfig plane_points(std::size_t r) {
  PointConfig config;
  config.n = 2;
  const std::vector<RatVec> all = {
      RatVec{1, 0, 0}, RatVec{0, 1, 0}, RatVec{0, 0, 1}, RatVec{1, 1, 1}, RatVec{1, 2, 3}};
  config.points.assign(all.begin(), all.begin() + r);
  return config;
}

BlowupDivisor bd(long d, std::initializer_list<long> c) {
  BlowupDivisor out;
  out.d = d;
  for (long x : c) out.c.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("point config validation") {
  CHECK_THROWS_AS(validate_point_config(PointConfig{1, {RatVec{1, 0}}}), InvalidPointConfig);
  PointConfig zero{2, {RatVec{0, 0, 0}}};
  CHECK_THROWS_AS(validate_point_config(zero), InvalidPointConfig);
  PointConfig proportional{2, {RatVec{1, 2, 0}, RatVec{2, 4, 0}}};
  CHECK_THROWS_AS(validate_point_config(proportional), InvalidPointConfig);
  CHECK_NOTHROW(validate_point_config(plane_points(3)));
}

TEST_CASE("pencil of lines through one point") {
  CHECK(section_dimension_blowup(plane_points(1), bd(1, {1})) == 2);
}

TEST_CASE("single line through two points") {
  CHECK(section_dimension_blowup(plane_points(2), bd(1, {1, 1})) == 1);
}

TEST_CASE("nonpositive multiplicities impose nothing") {
  CHECK(section_dimension_blowup(plane_points(2), bd(2, {0, -3})) == 6);
}

TEST_CASE("negative degree has no sections") {
  CHECK(section_dimension_blowup(plane_points(1), bd(-1, {0})) == 0);
  CHECK(section_dimension_blowup(plane_points(1), bd(-4, {-5})) == 0);
}

TEST_CASE("single fat point matches the binomial count") {
  // Conditions at one point are independent for d >= m:
  // h^0 = C(d+2,2) - C(m+1,2).
  PointConfig one = plane_points(1);
  for (long m = 0; m <= 4; ++m) {
    for (long d = m; d <= 6; ++d) {
      Integer expected = binomial(Integer(d) + 2, 2) - binomial(Integer(m) + 1, 2);
      CHECK(section_dimension_blowup(one, bd(d, {m})) == expected);
    }
  }
}

TEST_CASE("points off the coordinate axes work in any chart") {
  PointConfig config;
  config.n = 2;
  config.points = {RatVec{Rational(1, 2), Rational(1, 3), 1}, RatVec{0, 1, Rational(3, 7)}};
  CHECK(section_dimension_blowup(config, bd(1, {1, 1})) == 1);
  CHECK(section_dimension_blowup(config, bd(2, {1, 1})) == 4);
}

TEST_CASE("monotonicity in degree and multiplicities") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> d_dist(0, 5);
  std::uniform_int_distribution<long> c_dist(-2, 3);
  PointConfig config = plane_points(3);
  for (int trial = 0; trial < 60; ++trial) {
    BlowupDivisor divisor = bd(d_dist(rng), {c_dist(rng), c_dist(rng), c_dist(rng)});
    Integer base = section_dimension_blowup(config, divisor);
    BlowupDivisor more_degree = divisor;
    more_degree.d += 1;
    CHECK(section_dimension_blowup(config, more_degree) >= base);
    for (std::size_t i = 0; i < 3; ++i) {
      BlowupDivisor more_mult = divisor;
      more_mult.c[i] += 1;
      CHECK(section_dimension_blowup(config, more_mult) <= base);
    }
  }
}

TEST_CASE("class group is free on (E_1..E_r, A)") {
  CHECK(class_group_blowup(plane_points(1)).free_rank() == 2);

  PointConfig p3;
  p3.n = 3;
  p3.points = {RatVec{1, 0, 0, 0}, RatVec{0, 1, 0, 0}};
  CHECK(class_group_blowup(p3).free_rank() == 3);

  PointConfig none;
  none.n = 2;
  CHECK(class_group_blowup(none).free_rank() == 1);
}

TEST_CASE("canonical divisor formula") {
  BlowupDivisor k2 = canonical_divisor_blowup(plane_points(2));
  CHECK(k2.d == -3);
  CHECK(k2.c == IntVec{-1, -1});

  PointConfig p3;
  p3.n = 3;
  p3.points = {RatVec{1, 0, 0, 0}, RatVec{0, 1, 0, 0}};
  BlowupDivisor k3 = canonical_divisor_blowup(p3);
  CHECK(k3.d == -4);
  CHECK(k3.c == IntVec{-2, -2});

  PointConfig none;
  none.n = 2;
  BlowupDivisor k0 = canonical_divisor_blowup(none);
  CHECK(k0.d == -3);
  CHECK(k0.c.empty());
}

TEST_CASE("basis coefficient round trip") {
  BlowupDivisor d = bd(5, {2, -1, 3});
  CHECK(blowup_basis_coefficients(d) == IntVec{-2, 1, -3, 5});
  CHECK(blowup_divisor_from_basis(blowup_basis_coefficients(d)) == d);
}
