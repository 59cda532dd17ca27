#include "coxcanon/multisection.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <optional>

namespace coxcanon {

std::string to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::Found: return "found";
    case WitnessStatus::Assumed: return "assumed";
    case WitnessStatus::NotFound: return "not_found";
  }
  return "unknown";
}

namespace {

void check_box(const DegreeBox& box) {
  if (box.lo.size() != box.hi.size()) throw DimensionMismatch("degree box axis mismatch");
  for (std::size_t i = 0; i < box.lo.size(); ++i)
    if (box.lo[i] > box.hi[i]) throw DimensionMismatch("degree box with lo > hi");
}

// Integer vectors of [-m, m]^s with max-norm exactly m, lexicographic.
void shell_vectors(std::size_t s, long m, IntVec& current, std::vector<IntVec>& out) {
  if (current.size() == s) {
    for (const Integer& x : current)
      if (x == m || x == -m) {
        out.push_back(current);
        return;
      }
    return;
  }
  for (long v = -m; v <= m; ++v) {
    current.emplace_back(v);
    shell_vectors(s, m, current, out);
    current.pop_back();
  }
}

AmpleWitness search_witness(const VarietyBackend& backend, const std::vector<Divisor>& divisors,
                            const RingOptions& options) {
  AmpleWitness w;
  if (!backend.ample_test_available()) {
    w.status = options.assume_ample ? WitnessStatus::Assumed : WitnessStatus::NotFound;
    return w;
  }
  const std::size_t s = divisors.size();
  for (long m = 1; m <= options.witness_bound; ++m) {
    std::vector<IntVec> shell;
    IntVec current;
    shell_vectors(s, m, current, shell);
    for (const IntVec& a : shell) {
      Divisor combo = divisor_combination(divisors, a);
      if (!divisor_is_integral(combo)) continue;
      if (backend.is_ample_cartier(combo)) {
        w.status = WitnessStatus::Found;
        w.combination = a;
        return w;
      }
    }
  }
  w.status = options.assume_ample ? WitnessStatus::Assumed : WitnessStatus::NotFound;
  return w;
}

}  // namespace

MultiSectionRing MultiSectionRing::build(std::shared_ptr<const VarietyBackend> backend,
                                         std::vector<Divisor> divisors,
                                         const RingOptions& options,
                                         bool enforce_independence) {
  if (!backend) throw DimensionMismatch("null backend");
  if (divisors.empty()) throw DimensionMismatch("a multi-section ring needs s >= 1 divisors");
  for (const Divisor& d : divisors)
    if (d.size() != backend->divisor_length())
      throw DimensionMismatch("divisor coefficient count does not match the backend");

  bool integral = std::all_of(divisors.begin(), divisors.end(), divisor_is_integral);

  // Condition (1) is about divisor classes; rational coefficients are cleared
  // first (independence is unaffected for the degrees the ring lives on).
  std::vector<GroupElement> classes;
  classes.reserve(divisors.size());
  for (const Divisor& d : divisors) {
    Integer q = 1;
    for (const Rational& c : d) q = lcm_int(q, boost::multiprecision::denominator(c));
    IntVec cleared(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      Rational scaled = d[i] * Rational(q);
      cleared[i] = boost::multiprecision::numerator(scaled);
    }
    classes.push_back(backend->class_group().from_ambient(cleared));
  }
  bool independent = backend->class_group().independent(classes);
  if (enforce_independence && !independent)
    throw DependentClasses("divisor classes are linearly dependent over Z in Cl(X)");

  AmpleWitness witness = search_witness(*backend, divisors, options);

  MultiSectionRing ring;
  ring.backend_ = std::move(backend);
  ring.divisors_ = std::move(divisors);
  ring.integral_ = integral;
  ring.cleared_classes_ = std::move(classes);
  ring.classes_independent_ = independent;
  ring.witness_ = std::move(witness);
  return ring;
}

MultiSectionRing MultiSectionRing::create(std::shared_ptr<const VarietyBackend> backend,
                                          std::vector<Divisor> divisors, RingOptions options) {
  return build(std::move(backend), std::move(divisors), options, true);
}

MultiSectionRing MultiSectionRing::create_unchecked(std::shared_ptr<const VarietyBackend> backend,
                                                    std::vector<Divisor> divisors,
                                                    RingOptions options) {
  return build(std::move(backend), std::move(divisors), options, false);
}

Divisor MultiSectionRing::degree_divisor(const IntVec& n) const {
  if (n.size() != grading_rank()) throw DimensionMismatch("degree vector length != s");
  return divisor_combination(divisors_, n);
}

Integer graded_dimension(const MultiSectionRing& ring, const IntVec& n) {
  return ring.backend().section_dimension(ring.degree_divisor(n));
}

Integer module_piece_dimension(const MultiSectionRing& ring, const Divisor& f, const IntVec& n) {
  return ring.backend().section_dimension(divisor_add(ring.degree_divisor(n), f));
}

Integer canonical_piece_dimension(const MultiSectionRing& ring, const IntVec& n) {
  return module_piece_dimension(ring, ring.backend().canonical_divisor(), n);
}

Integer top_local_cohomology_dim(const MultiSectionRing& ring, const IntVec& n) {
  IntVec neg(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) neg[i] = -n[i];
  return canonical_piece_dimension(ring, neg);
}

Integer q_canonical_piece(const MultiSectionRing& ring, const IntVec& n) {
  if (ring.integral()) return canonical_piece_dimension(ring, n);
  const auto* toric = dynamic_cast<const ToricBackend*>(&ring.backend());
  if (!toric)
    throw UnsupportedOperation("Q-divisor canonical pieces are only supported on the toric "
                               "backend");
  const Fan& fan = toric->fan();
  Divisor combined = ring.degree_divisor(n);
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    Integer q_v = 1;
    for (const Divisor& d : ring.divisors())
      q_v = lcm_int(q_v, boost::multiprecision::denominator(d[r]));
    // K_X contributes -1; the correction term is (q_V - 1)/q_V.
    combined[r] += Rational(-1) + Rational(q_v - 1, q_v);
    combined[r] = Rational(rat_floor(combined[r]));
  }
  return ring.backend().section_dimension(combined);
}

DegreeBox symmetric_box(std::size_t axes, long radius) {
  DegreeBox box;
  box.lo.assign(axes, Integer(-radius));
  box.hi.assign(axes, Integer(radius));
  return box;
}

std::vector<IntVec> box_degrees(const DegreeBox& box) {
  check_box(box);
  std::vector<IntVec> out;
  IntVec n = box.lo;
  for (;;) {
    out.push_back(n);
    std::size_t i = box.axes();
    while (i > 0) {
      --i;
      if (n[i] < box.hi[i]) {
        ++n[i];
        for (std::size_t j = i + 1; j < box.axes(); ++j) n[j] = box.lo[j];
        break;
      }
      if (i == 0) return out;
    }
  }
}

namespace {

GradedDimTable fill_table(const DegreeBox& box, const std::function<Integer(const IntVec&)>& fn) {
  GradedDimTable table;
  table.box = box;
  for (const IntVec& n : box_degrees(box)) table.entries.emplace(n, fn(n));
  return table;
}

}  // namespace

GradedDimTable graded_table(const MultiSectionRing& ring, const DegreeBox& box) {
  if (box.axes() != ring.grading_rank()) throw DimensionMismatch("box axes != s");
  return fill_table(box, [&](const IntVec& n) { return graded_dimension(ring, n); });
}

GradedDimTable module_table(const MultiSectionRing& ring, const Divisor& f, const DegreeBox& box) {
  if (box.axes() != ring.grading_rank()) throw DimensionMismatch("box axes != s");
  return fill_table(box, [&](const IntVec& n) { return module_piece_dimension(ring, f, n); });
}

GradedDimTable canonical_table(const MultiSectionRing& ring, const DegreeBox& box) {
  if (box.axes() != ring.grading_rank()) throw DimensionMismatch("box axes != s");
  return fill_table(box, [&](const IntVec& n) { return canonical_piece_dimension(ring, n); });
}

FreenessVerdict freeness_test(const MultiSectionRing& ring) {
  if (!ring.integral())
    throw UnsupportedOperation("freeness_test needs integral divisors");
  const FGAbelianGroup& cl = ring.backend().class_group();
  GroupElement k_class = ring.backend().divisor_class(ring.backend().canonical_divisor());
  FreenessVerdict verdict;
  auto membership = cl.subgroup_membership(ring.cleared_classes(), k_class);
  verdict.free = membership.has_value();
  if (membership) {
    verdict.membership = *membership;
    IntVec e(membership->size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = -(*membership)[i];
    verdict.generator_degree = e;
  }
  return verdict;
}

std::vector<Divisor> cox_basis_divisors(const VarietyBackend& backend) {
  const FGAbelianGroup& cl = backend.class_group();
  if (!cl.torsion().empty())
    throw UnsupportedOperation("Cox ring construction needs a free class group");
  std::vector<Divisor> basis;
  for (std::size_t j = 0; j < cl.free_rank(); ++j) {
    IntVec target(cl.free_rank(), Integer(0));
    target[j] = 1;
    auto sol = solve_integer(cl.projection(), target);
    if (!sol) throw UnsupportedOperation("class-group projection is not surjective");
    Divisor d;
    d.reserve(sol->size());
    for (const Integer& x : *sol) d.emplace_back(x);
    basis.push_back(std::move(d));
  }
  return basis;
}

MultiSectionRing cox_ring(std::shared_ptr<const VarietyBackend> backend, RingOptions options) {
  std::vector<Divisor> basis = cox_basis_divisors(*backend);
  return MultiSectionRing::create(std::move(backend), std::move(basis), options);
}

GroupElement cox_canonical_degree(std::shared_ptr<const VarietyBackend> backend) {
  const FGAbelianGroup& cl = backend->class_group();
  GroupElement k_class = backend->divisor_class(backend->canonical_divisor());
  GroupElement degree = cl.negate(k_class);

  MultiSectionRing cox = cox_ring(backend);
  FreenessVerdict verdict = freeness_test(cox);
  if (!verdict.free || !verdict.generator_degree || *verdict.generator_degree != degree.coords)
    throw std::logic_error("Cox ring freeness does not match the canonical degree");
  return degree;
}

FGAbelianGroup cl_R_group(const MultiSectionRing& ring) {
  if (!ring.integral()) throw UnsupportedOperation("cl_R_group needs integral divisors");
  return ring.backend().class_group().quotient(ring.cleared_classes());
}

GroupElement class_in_cl_R(const MultiSectionRing& ring, const Divisor& f) {
  FGAbelianGroup cl_r = cl_R_group(ring);
  GroupElement f_class = ring.backend().divisor_class(f);
  return cl_r.from_ambient(f_class.coords);
}

MultiSectionRing restrict_ring(const MultiSectionRing& ring,
                               const std::vector<IntVec>& sublattice, RingOptions options) {
  if (sublattice.empty()) throw DimensionMismatch("empty sublattice basis");
  std::vector<Divisor> divisors;
  divisors.reserve(sublattice.size());
  for (const IntVec& row : sublattice) {
    if (row.size() != ring.grading_rank())
      throw DimensionMismatch("sublattice vector length != s");
    divisors.push_back(divisor_combination(ring.divisors(), row));
  }
  return MultiSectionRing::create(ring.backend_ptr(), std::move(divisors), options);
}

namespace {

bool polyhedron_feasible(const RationalPolyhedron& p) {
  return is_bounded_with_box(p).kind != BoxKind::Empty;
}

// Interior lattice points of the Z^s-graded section cone of a toric ring:
// {(u, n) : <u, v_rho> + sum_i n_i a_i,rho >= 0}. The implicit equality
// constraints (tight on the whole cone) are found once; the relative interior
// keeps them as equalities and makes every other constraint strict.
class ConeInterior {
 public:
  explicit ConeInterior(const MultiSectionRing& ring) {
    const auto* toric = dynamic_cast<const ToricBackend*>(&ring.backend());
    if (!toric)
      throw UnsupportedOperation("section-cone interior needs the toric backend");
    fan_ = &toric->fan();
    divisors_ = ring.divisors();
    const std::size_t d = fan_->rank;
    const std::size_t s = divisors_.size();

    std::vector<Constraint> cone;
    for (std::size_t r = 0; r < fan_->rays.size(); ++r) {
      Integer scale = 1;
      for (const Divisor& div : divisors_)
        scale = lcm_int(scale, boost::multiprecision::denominator(div[r]));
      Constraint c;
      c.normal.resize(d + s);
      for (std::size_t j = 0; j < d; ++j) c.normal[j] = scale * fan_->rays[r][j];
      for (std::size_t i = 0; i < s; ++i) {
        Rational scaled = divisors_[i][r] * Rational(scale);
        c.normal[d + i] = boost::multiprecision::numerator(scaled);
      }
      c.bound = 0;
      cone.push_back(std::move(c));
    }

    implicit_.resize(fan_->rays.size());
    for (std::size_t r = 0; r < fan_->rays.size(); ++r) {
      std::vector<Constraint> strict = cone;
      strict.push_back(Constraint{cone[r].normal, Rational(1)});
      implicit_[r] = !polyhedron_feasible(RationalPolyhedron(d + s, std::move(strict)));
    }
  }

  Integer piece(const IntVec& n) const {
    const std::size_t d = fan_->rank;
    std::vector<Constraint> cs;
    for (std::size_t r = 0; r < fan_->rays.size(); ++r) {
      Rational bound = 0;
      for (std::size_t i = 0; i < divisors_.size(); ++i)
        bound -= Rational(n[i]) * divisors_[i][r];
      if (implicit_[r]) {
        cs.push_back(Constraint{fan_->rays[r], bound});
        IntVec negated(d);
        for (std::size_t j = 0; j < d; ++j) negated[j] = -fan_->rays[r][j];
        cs.push_back(Constraint{std::move(negated), -bound});
      } else {
        // Strict at lattice points: value >= floor(bound) + 1.
        cs.push_back(Constraint{fan_->rays[r], Rational(rat_floor(bound) + 1)});
      }
    }
    return Integer(enumerate_lattice_points(RationalPolyhedron(d, std::move(cs))).size());
  }

 private:
  const Fan* fan_ = nullptr;
  std::vector<Divisor> divisors_;
  std::vector<bool> implicit_;
};

}  // namespace

bool supports_cone_interior(const MultiSectionRing& ring) {
  return dynamic_cast<const ToricBackend*>(&ring.backend()) != nullptr;
}

Integer cone_interior_canonical_piece(const MultiSectionRing& ring, const IntVec& n) {
  if (n.size() != ring.grading_rank()) throw DimensionMismatch("degree vector length != s");
  return ConeInterior(ring).piece(n);
}

RestrictionReport restriction_check(const MultiSectionRing& ring,
                                    const std::vector<IntVec>& sublattice, const DegreeBox& box) {
  check_box(box);
  if (box.axes() != sublattice.size())
    throw DimensionMismatch("box axes must match the sublattice rank");
  MultiSectionRing restricted = restrict_ring(ring, sublattice);

  RestrictionReport report;
  report.sublattice = sublattice;
  report.box = box;
  report.sublattice_witness = restricted.ample_witness();

  std::optional<ConeInterior> interior;
  if (supports_cone_interior(restricted)) {
    interior.emplace(restricted);
    report.restricted_method = "cone-interior";
  } else {
    report.restricted_method = "mk-formula";
  }

  for (const IntVec& m : box_degrees(box)) {
    RestrictionEntry entry;
    entry.degree = m;
    entry.restricted_ring =
        interior ? interior->piece(m) : canonical_piece_dimension(restricted, m);
    IntVec embedded(ring.grading_rank(), Integer(0));
    for (std::size_t j = 0; j < sublattice.size(); ++j)
      for (std::size_t k = 0; k < ring.grading_rank(); ++k)
        embedded[k] += m[j] * sublattice[j][k];
    entry.restriction = canonical_piece_dimension(ring, embedded);
    if (entry.restricted_ring != entry.restriction) report.agree = false;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

ProbeReport local_domain_probe(const MultiSectionRing& ring, const DegreeBox& box) {
  check_box(box);
  if (box.axes() != ring.grading_rank()) throw DimensionMismatch("box axes != s");
  ProbeReport report;
  for (const IntVec& n : box_degrees(box)) {
    if (std::all_of(n.begin(), n.end(), [](const Integer& x) { return x == 0; })) continue;
    if (graded_dimension(ring, n) == 0) continue;
    IntVec neg(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) neg[i] = -n[i];
    if (graded_dimension(ring, neg) > 0) {
      report.violation_found = true;
      report.degree = n;
      return report;
    }
  }
  return report;
}

}  // namespace coxcanon
