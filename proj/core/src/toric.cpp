#include "coxcanon/toric.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace coxcanon {

namespace {

std::string cone_label(const std::vector<std::size_t>& cone) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < cone.size(); ++i) os << (i ? "," : "") << cone[i];
  os << "}";
  return os.str();
}

// Exact solve of the square system rows(m) * x = b over the rationals.
std::optional<RatVec> solve_square(const std::vector<IntVec>& rows, const RatVec& b) {
  const std::size_t n = rows.size();
  std::vector<RatVec> m(n, RatVec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(rows[i][j]);
    m[i][n] = b[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[k], m[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

// Normal of the hyperplane spanned by the ridge rays (1-dim kernel).
IntVec ridge_normal(const Fan& fan, const std::vector<std::size_t>& ridge) {
  if (ridge.empty()) {
    IntVec h(fan.rank, Integer(0));
    h[0] = 1;
    return h;
  }
  std::vector<IntVec> rows;
  rows.reserve(ridge.size());
  for (std::size_t r : ridge) rows.push_back(fan.rays[r]);
  IntMatrix k = kernel_basis(IntMatrix::from_rows(rows));
  if (k.cols() != 1) return IntVec{};  // degenerate ridge
  return k.col(0);
}

Integer dot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct RidgeUse {
  std::size_t cone;
  std::size_t omitted_ray;
};

// Ridge (sorted ray set) -> the maximal cones using it, with the ray each
// cone adds on top of the ridge.
std::map<std::vector<std::size_t>, std::vector<RidgeUse>> ridge_table(const Fan& fan) {
  std::map<std::vector<std::size_t>, std::vector<RidgeUse>> table;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    for (std::size_t omit : cone) {
      std::vector<std::size_t> ridge;
      for (std::size_t r : cone)
        if (r != omit) ridge.push_back(r);
      std::sort(ridge.begin(), ridge.end());
      table[ridge].push_back(RidgeUse{c, omit});
    }
  }
  return table;
}

// Cartier data: one integral linear functional per maximal cone, or nullopt.
std::optional<std::vector<IntVec>> cartier_functionals(const Fan& fan, const ToricDivisor& d) {
  std::vector<IntVec> out;
  out.reserve(fan.max_cones.size());
  for (const auto& cone : fan.max_cones) {
    std::vector<IntVec> rows;
    RatVec rhs;
    for (std::size_t r : cone) {
      rows.push_back(fan.rays[r]);
      rhs.push_back(-d.coefficients[r]);
    }
    auto m = solve_square(rows, rhs);
    if (!m) return std::nullopt;
    IntVec mi(fan.rank);
    for (std::size_t j = 0; j < fan.rank; ++j) {
      if (!is_integral((*m)[j])) return std::nullopt;
      mi[j] = boost::multiprecision::numerator((*m)[j]);
    }
    out.push_back(std::move(mi));
  }
  return out;
}

void check_divisor(const Fan& fan, const ToricDivisor& d) {
  if (d.coefficients.size() != fan.rays.size())
    throw DimensionMismatch("divisor coefficient count != ray count");
}

}  // namespace

bool ToricDivisor::is_integral() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const Rational& c) { return coxcanon::is_integral(c); });
}

FanDiagnostics validate_fan(const Fan& fan) {
  FanDiagnostics diag;
  auto fail = [&diag](const std::string& msg) {
    diag.ok = false;
    diag.problems.push_back(msg);
  };

  if (fan.rank == 0) fail("lattice rank must be positive");
  if (fan.rays.empty()) fail("fan has no rays");
  if (fan.max_cones.empty()) fail("fan has no maximal cones");
  if (!diag.ok) return diag;

  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const IntVec& v = fan.rays[i];
    if (v.size() != fan.rank) {
      fail("ray " + std::to_string(i) + " has wrong length");
      continue;
    }
    Integer g = 0;
    for (const Integer& x : v) g = gcd_int(g, x);
    if (g == 0)
      fail("ray " + std::to_string(i) + " is zero");
    else if (g != 1)
      fail("non-primitive ray " + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j)
      if (fan.rays[j] == v) fail("duplicate rays " + std::to_string(j) + "," + std::to_string(i));
  }
  if (!diag.ok) return diag;

  std::set<std::vector<std::size_t>> seen;
  std::vector<bool> ray_used(fan.rays.size(), false);
  for (const auto& cone_in : fan.max_cones) {
    std::vector<std::size_t> cone = cone_in;
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end()) {
      fail("cone " + cone_label(cone_in) + " repeats a ray");
      continue;
    }
    for (std::size_t r : cone) {
      if (r >= fan.rays.size()) {
        fail("cone " + cone_label(cone_in) + " references missing ray " + std::to_string(r));
        return diag;
      }
      ray_used[r] = true;
    }
    if (cone.size() != fan.rank) {
      fail("cone " + cone_label(cone_in) +
           " is not simplicial full-dimensional (expected " + std::to_string(fan.rank) +
           " rays)");
      continue;
    }
    std::vector<IntVec> rows;
    for (std::size_t r : cone) rows.push_back(fan.rays[r]);
    if (determinant(IntMatrix::from_rows(rows)) == 0)
      fail("cone " + cone_label(cone_in) + " is degenerate (not strongly convex)");
    if (!seen.insert(cone).second) fail("duplicate cone " + cone_label(cone_in));
  }
  for (std::size_t r = 0; r < ray_used.size(); ++r)
    if (!ray_used[r]) fail("ray " + std::to_string(r) + " belongs to no maximal cone");
  if (!diag.ok) return diag;

  // Completeness: every ridge is shared by exactly two maximal cones, whose
  // extra rays lie strictly on opposite sides of the ridge hyperplane.
  for (const auto& [ridge, uses] : ridge_table(fan)) {
    if (uses.size() != 2) {
      fail("incomplete fan: ridge " + cone_label(ridge) + " lies in " +
           std::to_string(uses.size()) + " maximal cone(s)");
      continue;
    }
    IntVec h = ridge_normal(fan, ridge);
    if (h.empty()) {
      fail("degenerate ridge " + cone_label(ridge));
      continue;
    }
    Integer s0 = dot(h, fan.rays[uses[0].omitted_ray]);
    Integer s1 = dot(h, fan.rays[uses[1].omitted_ray]);
    if (s0 == 0 || s1 == 0 || (s0 > 0) == (s1 > 0))
      fail("cones " + std::to_string(uses[0].cone) + " and " + std::to_string(uses[1].cone) +
           " overlap across ridge " + cone_label(ridge));
  }
  return diag;
}

ToricDivisor canonical_divisor(const Fan& fan) {
  return ToricDivisor{RatVec(fan.rays.size(), Rational(-1))};
}

ToricDivisor principal_divisor(const Fan& fan, const IntVec& character) {
  if (character.size() != fan.rank) throw DimensionMismatch("character length != rank");
  ToricDivisor d;
  d.coefficients.reserve(fan.rays.size());
  for (const IntVec& ray : fan.rays) d.coefficients.emplace_back(dot(ray, character));
  return d;
}

FGAbelianGroup class_group(const Fan& fan) {
  FanDiagnostics diag = validate_fan(fan);
  if (!diag.ok) throw InvalidFan("class_group: " + diag.problems.front());
  IntMatrix relations(fan.rays.size(), fan.rank);
  for (std::size_t r = 0; r < fan.rays.size(); ++r)
    for (std::size_t j = 0; j < fan.rank; ++j) relations.at(r, j) = fan.rays[r][j];
  return cokernel_presentation(relations);
}

RationalPolyhedron section_polyhedron(const Fan& fan, const ToricDivisor& d) {
  check_divisor(fan, d);
  std::vector<Constraint> cs;
  cs.reserve(fan.rays.size());
  for (std::size_t r = 0; r < fan.rays.size(); ++r)
    cs.push_back(Constraint{fan.rays[r], -d.coefficients[r]});
  return RationalPolyhedron(fan.rank, std::move(cs));
}

Integer section_dimension(const Fan& fan, const ToricDivisor& d) {
  return Integer(enumerate_lattice_points(section_polyhedron(fan, d)).size());
}

bool is_cartier(const Fan& fan, const ToricDivisor& d) {
  check_divisor(fan, d);
  if (!d.is_integral())
    throw UnsupportedOperation("Cartier test requires an integral divisor");
  return cartier_functionals(fan, d).has_value();
}

bool is_ample(const Fan& fan, const ToricDivisor& d) {
  check_divisor(fan, d);
  if (!d.is_integral())
    throw UnsupportedOperation("ample test requires an integral (Cartier) divisor");
  auto functionals = cartier_functionals(fan, d);
  if (!functionals) return false;
  for (const auto& [ridge, uses] : ridge_table(fan)) {
    if (uses.size() != 2) return false;  // unreachable on validated fans
    for (int side = 0; side < 2; ++side) {
      const IntVec& m = (*functionals)[uses[side].cone];
      const std::size_t other_ray = uses[1 - side].omitted_ray;
      Rational lhs(dot(m, fan.rays[other_ray]));
      if (lhs <= -d.coefficients[other_ray]) return false;
    }
  }
  return true;
}

Fan projective_space_fan(std::size_t n) {
  if (n == 0) throw DimensionMismatch("projective space dimension must be positive");
  Fan fan;
  fan.rank = n;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, Integer(0));
    e[i] = 1;
    fan.rays.push_back(std::move(e));
  }
  fan.rays.push_back(IntVec(n, Integer(-1)));
  for (std::size_t omit = 0; omit <= n; ++omit) {
    std::vector<std::size_t> cone;
    for (std::size_t r = 0; r <= n; ++r)
      if (r != omit) cone.push_back(r);
    fan.max_cones.push_back(std::move(cone));
  }
  return fan;
}

Fan product_of_p1_fan(std::size_t factors) {
  if (factors == 0) throw DimensionMismatch("product of P^1s needs at least one factor");
  Fan fan;
  fan.rank = factors;
  for (std::size_t i = 0; i < factors; ++i) {
    IntVec plus(factors, Integer(0)), minus(factors, Integer(0));
    plus[i] = 1;
    minus[i] = -1;
    fan.rays.push_back(std::move(plus));
    fan.rays.push_back(std::move(minus));
  }
  for (std::size_t mask = 0; mask < (std::size_t(1) << factors); ++mask) {
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i < factors; ++i)
      cone.push_back(2 * i + ((mask >> i) & 1));
    fan.max_cones.push_back(std::move(cone));
  }
  return fan;
}

Fan del_pezzo6_fan() {
  Fan fan;
  fan.rank = 2;
  fan.rays = {IntVec{1, 0},  IntVec{0, 1},  IntVec{-1, -1},
              IntVec{1, 1},  IntVec{-1, 0}, IntVec{0, -1}};
  // Hexagon order: r0, r3, r1, r4, r2, r5.
  fan.max_cones = {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}};
  return fan;
}

Fan hirzebruch_fan(long a) {
  if (a < 0) throw DimensionMismatch("Hirzebruch parameter must be >= 0");
  Fan fan;
  fan.rank = 2;
  fan.rays = {IntVec{1, 0}, IntVec{0, 1}, IntVec{-1, Integer(a)}, IntVec{0, -1}};
  fan.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return fan;
}

}  // namespace coxcanon
