#include "coxcanon/blowup.hpp"

#include "coxcanon/normal_form.hpp"

#include <algorithm>
#include <string>

namespace coxcanon {

namespace {

// All exponent vectors of length vars summing to total, lexicographic.
void enumerate_exponents(std::size_t vars, const Integer& total,
                         IntVec& current, std::vector<IntVec>& out) {
  if (vars == 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (Integer e = total; e >= 0; --e) {
    current.push_back(e);
    enumerate_exponents(vars - 1, total - e, current, out);
    current.pop_back();
  }
}

std::vector<IntVec> exponents_of_degree(std::size_t vars, const Integer& total) {
  std::vector<IntVec> out;
  IntVec current;
  enumerate_exponents(vars, total, current, out);
  return out;
}

Integer falling_factorial(const Integer& a, const Integer& k) {
  Integer out = 1;
  for (Integer i = 0; i < k; ++i) out *= a - i;
  return out;
}

Rational pow_rat(const Rational& base, const Integer& exp) {
  Rational out = 1;
  for (Integer i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

void validate_point_config(const PointConfig& config) {
  if (config.n < 2) throw InvalidPointConfig("projective dimension must be >= 2");
  for (std::size_t i = 0; i < config.points.size(); ++i) {
    const RatVec& p = config.points[i];
    if (p.size() != config.n + 1)
      throw InvalidPointConfig("point " + std::to_string(i) + " needs " +
                               std::to_string(config.n + 1) + " homogeneous coordinates");
    if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x == 0; }))
      throw InvalidPointConfig("point " + std::to_string(i) + " is the zero vector");
  }
  for (std::size_t i = 0; i < config.points.size(); ++i) {
    for (std::size_t j = i + 1; j < config.points.size(); ++j) {
      const RatVec& p = config.points[i];
      const RatVec& q = config.points[j];
      bool proportional = true;
      for (std::size_t a = 0; a < p.size() && proportional; ++a)
        for (std::size_t b = a + 1; b < p.size() && proportional; ++b)
          if (p[a] * q[b] != p[b] * q[a]) proportional = false;
      if (proportional)
        throw InvalidPointConfig("points " + std::to_string(i) + " and " + std::to_string(j) +
                                 " coincide in P^n");
    }
  }
}

Integer section_dimension_blowup(const PointConfig& config, const BlowupDivisor& divisor) {
  validate_point_config(config);
  if (divisor.c.size() != config.count())
    throw DimensionMismatch("divisor has wrong number of exceptional coefficients");
  if (divisor.d < 0) return 0;

  const std::size_t n = config.n;
  const std::vector<IntVec> monomials = exponents_of_degree(n + 1, divisor.d);

  // One row per Taylor coefficient of order < max(c_i, 0) per point, taken in
  // the affine chart of the point's first nonzero coordinate.
  std::vector<RatVec> rows;
  for (std::size_t pi = 0; pi < config.count(); ++pi) {
    if (divisor.c[pi] <= 0) continue;
    const Integer& order = divisor.c[pi];
    const RatVec& hom = config.points[pi];
    std::size_t chart = 0;
    while (hom[chart] == 0) ++chart;
    RatVec affine;  // the n coordinates other than the chart one, scaled to chart = 1
    std::vector<std::size_t> affine_index;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == chart) continue;
      affine.push_back(hom[j] / hom[chart]);
      affine_index.push_back(j);
    }
    for (Integer deriv_order = 0; deriv_order < order; ++deriv_order) {
      for (const IntVec& beta : exponents_of_degree(n, deriv_order)) {
        RatVec row(monomials.size(), Rational(0));
        for (std::size_t mi = 0; mi < monomials.size(); ++mi) {
          // Dehomogenized exponent vector of the monomial in this chart.
          Rational value = 1;
          bool vanished = false;
          for (std::size_t a = 0; a < n && !vanished; ++a) {
            const Integer& alpha = monomials[mi][affine_index[a]];
            if (alpha < beta[a]) {
              vanished = true;
              break;
            }
            value *= Rational(falling_factorial(alpha, beta[a]));
            value *= pow_rat(affine[a], alpha - beta[a]);
          }
          if (!vanished) row[mi] = value;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return Integer(monomials.size());

  // Scale each row to integers (rank-preserving) and run Bareiss.
  IntMatrix m(rows.size(), monomials.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Integer scale = 1;
    for (const Rational& x : rows[i]) scale = lcm_int(scale, boost::multiprecision::denominator(x));
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      Rational scaled = rows[i][j] * Rational(scale);
      m.at(i, j) = boost::multiprecision::numerator(scaled);
    }
  }
  return Integer(monomials.size()) - Integer(fraction_free_rank(m));
}

FGAbelianGroup class_group_blowup(const PointConfig& config) {
  validate_point_config(config);
  return FGAbelianGroup::free_group(config.count() + 1);
}

BlowupDivisor canonical_divisor_blowup(const PointConfig& config) {
  BlowupDivisor k;
  k.d = -(Integer(config.n) + 1);
  k.c.assign(config.count(), -(Integer(config.n) - 1));
  return k;
}

IntVec blowup_basis_coefficients(const BlowupDivisor& divisor) {
  IntVec out;
  out.reserve(divisor.c.size() + 1);
  for (const Integer& ci : divisor.c) out.push_back(-ci);
  out.push_back(divisor.d);
  return out;
}

BlowupDivisor blowup_divisor_from_basis(const IntVec& coefficients) {
  if (coefficients.empty()) throw DimensionMismatch("empty blow-up coefficient vector");
  BlowupDivisor d;
  d.d = coefficients.back();
  d.c.reserve(coefficients.size() - 1);
  for (std::size_t i = 0; i + 1 < coefficients.size(); ++i) d.c.push_back(-coefficients[i]);
  return d;
}

}  // namespace coxcanon
