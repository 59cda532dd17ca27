#pragma once

#include "coxcanon/abelian_group.hpp"
#include "coxcanon/blowup.hpp"
#include "coxcanon/toric.hpp"

#include <memory>
#include <string>
#include <vector>

namespace coxcanon {

/// A Weil Q-divisor as a coefficient vector in the backend's divisor basis:
/// ray order on a toric variety, (E_1, ..., E_r, A) on a point blow-up.
using Divisor = RatVec;

bool divisor_is_integral(const Divisor& d);
IntVec divisor_numerators(const Divisor& d);  // requires integral
Divisor divisor_add(const Divisor& a, const Divisor& b);
/// sum coeffs_i * divisors_i
Divisor divisor_combination(const std::vector<Divisor>& divisors, const IntVec& coeffs);

/// Capability bundle a multi-section ring needs from the variety:
/// class group, canonical divisor, section dimensions, ample Cartier test.
class VarietyBackend {
 public:
  virtual ~VarietyBackend() = default;

  virtual std::string name() const = 0;
  virtual std::size_t dimension() const = 0;       ///< dim X
  virtual std::size_t divisor_length() const = 0;  ///< coefficient count per divisor
  virtual const FGAbelianGroup& class_group() const = 0;
  /// Class of an integral divisor in the class group's coordinates.
  virtual GroupElement divisor_class(const Divisor& d) const = 0;
  virtual Divisor canonical_divisor() const = 0;

  virtual bool supports_sections() const { return true; }
  virtual Integer section_dimension(const Divisor& d) const = 0;

  virtual bool ample_test_available() const { return true; }
  /// True when d is integral and ample Cartier. Backends may implement a
  /// sufficient test only; a false answer then means "not established".
  virtual bool is_ample_cartier(const Divisor& d) const = 0;
};

/// Complete toric variety defined by a fan. Validates the fan on construction.
class ToricBackend final : public VarietyBackend {
 public:
  explicit ToricBackend(Fan fan);

  const Fan& fan() const { return fan_; }

  std::string name() const override { return "toric"; }
  std::size_t dimension() const override { return fan_.rank; }
  std::size_t divisor_length() const override { return fan_.rays.size(); }
  const FGAbelianGroup& class_group() const override { return class_group_; }
  GroupElement divisor_class(const Divisor& d) const override;
  Divisor canonical_divisor() const override;
  Integer section_dimension(const Divisor& d) const override;
  bool is_ample_cartier(const Divisor& d) const override;

 private:
  Fan fan_;
  FGAbelianGroup class_group_;
};

/// Blow-up of P^n at r distinct rational points. Section dimensions come from
/// fat-point interpolation; the ample test is the sufficient criterion
/// c_i >= 1 for all i and d >= sum c_i + 1 (d >= 1 when r = 0), which is
/// sound for arbitrary distinct points.
class BlowupBackend final : public VarietyBackend {
 public:
  explicit BlowupBackend(PointConfig config);

  const PointConfig& config() const { return config_; }

  std::string name() const override { return "blowup"; }
  std::size_t dimension() const override { return config_.n; }
  std::size_t divisor_length() const override { return config_.count() + 1; }
  const FGAbelianGroup& class_group() const override { return class_group_; }
  GroupElement divisor_class(const Divisor& d) const override;
  Divisor canonical_divisor() const override;
  Integer section_dimension(const Divisor& d) const override;
  bool is_ample_cartier(const Divisor& d) const override;

 private:
  BlowupDivisor to_blowup_divisor(const Divisor& d) const;

  PointConfig config_;
  FGAbelianGroup class_group_;
};

/// Lattice-level model of the blow-up of a weighted projective plane
/// Proj k[x,y,z] (deg x = a, y = b, z = c pairwise coprime) at the point of
/// the space monomial curve (t^a, t^b, t^c). Carries exactly the class-group
/// data: Cl(X) = Z^2 on (E, A) and K_X = E - (a+b+c)A. Section dimensions of
/// symbolic powers are out of reach here, so section queries are unsupported
/// and condition (2) has to be assumed by the caller.
class WeightedBlowupLatticeBackend final : public VarietyBackend {
 public:
  WeightedBlowupLatticeBackend(long a, long b, long c);

  long a() const { return a_; }
  long b() const { return b_; }
  long c() const { return c_; }

  std::string name() const override { return "weighted_blowup_lattice"; }
  std::size_t dimension() const override { return 2; }
  std::size_t divisor_length() const override { return 2; }  ///< basis (E, A)
  const FGAbelianGroup& class_group() const override { return class_group_; }
  GroupElement divisor_class(const Divisor& d) const override;
  Divisor canonical_divisor() const override;

  bool supports_sections() const override { return false; }
  Integer section_dimension(const Divisor& d) const override;
  bool ample_test_available() const override { return false; }
  bool is_ample_cartier(const Divisor& d) const override;

 private:
  long a_, b_, c_;
  FGAbelianGroup class_group_;
};

}  // namespace coxcanon
