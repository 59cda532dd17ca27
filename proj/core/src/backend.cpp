#include "coxcanon/backend.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace coxcanon {

bool divisor_is_integral(const Divisor& d) {
  return std::all_of(d.begin(), d.end(), [](const Rational& c) { return is_integral(c); });
}

IntVec divisor_numerators(const Divisor& d) {
  IntVec out;
  out.reserve(d.size());
  for (const Rational& c : d) {
    if (!is_integral(c)) throw UnsupportedOperation("divisor is not integral");
    out.push_back(boost::multiprecision::numerator(c));
  }
  return out;
}

Divisor divisor_add(const Divisor& a, const Divisor& b) {
  if (a.size() != b.size()) throw DimensionMismatch("divisor length mismatch");
  Divisor out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Divisor divisor_combination(const std::vector<Divisor>& divisors, const IntVec& coeffs) {
  if (divisors.size() != coeffs.size()) throw DimensionMismatch("combination length mismatch");
  if (divisors.empty()) throw DimensionMismatch("empty divisor combination");
  Divisor out(divisors.front().size(), Rational(0));
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i].size() != out.size()) throw DimensionMismatch("divisor length mismatch");
    if (coeffs[i] == 0) continue;
    Rational c(coeffs[i]);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * divisors[i][j];
  }
  return out;
}

ToricBackend::ToricBackend(Fan fan) : fan_(std::move(fan)) {
  FanDiagnostics diag = validate_fan(fan_);
  if (!diag.ok) {
    std::ostringstream os;
    os << "invalid fan:";
    for (const auto& p : diag.problems) os << " " << p << ";";
    throw InvalidFan(os.str());
  }
  class_group_ = coxcanon::class_group(fan_);
}

GroupElement ToricBackend::divisor_class(const Divisor& d) const {
  return class_group_.from_ambient(divisor_numerators(d));
}

Divisor ToricBackend::canonical_divisor() const {
  return coxcanon::canonical_divisor(fan_).coefficients;
}

Integer ToricBackend::section_dimension(const Divisor& d) const {
  return coxcanon::section_dimension(fan_, ToricDivisor{d});
}

bool ToricBackend::is_ample_cartier(const Divisor& d) const {
  if (!divisor_is_integral(d)) return false;
  return is_ample(fan_, ToricDivisor{d});
}

BlowupBackend::BlowupBackend(PointConfig config) : config_(std::move(config)) {
  validate_point_config(config_);
  class_group_ = class_group_blowup(config_);
}

BlowupDivisor BlowupBackend::to_blowup_divisor(const Divisor& d) const {
  if (d.size() != divisor_length()) throw DimensionMismatch("blow-up divisor length mismatch");
  return blowup_divisor_from_basis(divisor_numerators(d));
}

GroupElement BlowupBackend::divisor_class(const Divisor& d) const {
  return class_group_.from_ambient(divisor_numerators(d));
}

Divisor BlowupBackend::canonical_divisor() const {
  IntVec coeffs = blowup_basis_coefficients(canonical_divisor_blowup(config_));
  Divisor out;
  out.reserve(coeffs.size());
  for (const Integer& c : coeffs) out.emplace_back(c);
  return out;
}

Integer BlowupBackend::section_dimension(const Divisor& d) const {
  if (!divisor_is_integral(d))
    throw UnsupportedOperation("blow-up backend supports integral divisors only");
  return section_dimension_blowup(config_, to_blowup_divisor(d));
}

bool BlowupBackend::is_ample_cartier(const Divisor& d) const {
  if (!divisor_is_integral(d)) return false;
  BlowupDivisor bd = to_blowup_divisor(d);
  if (config_.count() == 0) return bd.d >= 1;
  Integer total = 0;
  for (const Integer& ci : bd.c) {
    if (ci < 1) return false;
    total += ci;
  }
  return bd.d >= total + 1;
}

WeightedBlowupLatticeBackend::WeightedBlowupLatticeBackend(long a, long b, long c)
    : a_(a), b_(b), c_(c), class_group_(FGAbelianGroup::free_group(2)) {
  if (a < 1 || b < 1 || c < 1)
    throw InvalidPointConfig("weights must be positive");
  if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1)
    throw InvalidPointConfig("weights must be pairwise coprime");
}

GroupElement WeightedBlowupLatticeBackend::divisor_class(const Divisor& d) const {
  return class_group_.from_ambient(divisor_numerators(d));
}

Divisor WeightedBlowupLatticeBackend::canonical_divisor() const {
  // K = E - (a+b+c)A in basis (E, A).
  return Divisor{Rational(1), Rational(-(a_ + b_ + c_))};
}

Integer WeightedBlowupLatticeBackend::section_dimension(const Divisor&) const {
  throw UnsupportedOperation(
      "section dimensions of the weighted blow-up need symbolic powers; only "
      "class-group data is modeled");
}

bool WeightedBlowupLatticeBackend::is_ample_cartier(const Divisor&) const {
  throw UnsupportedOperation("no ample test on the lattice-level backend");
}

}  // namespace coxcanon
