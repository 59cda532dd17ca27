// Acceptance suite: every criterion is exact (integer arithmetic throughout,
// zero tolerance). One PASS/FAIL line per criterion.

#include "coxcanon/cohomology.hpp"
#include "coxcanon/job.hpp"
#include "coxcanon/multisection.hpp"

#include "../oracles.hpp"

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace coxcanon;

namespace {

struct Criterion {
  std::string name;
  std::function<void(std::ostream&)> run;  // throws on failure
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

IntVec deg(std::initializer_list<long> v) {
  IntVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

Divisor ray_divisor(std::size_t rays, std::size_t index, long value = 1) {
  Divisor d(rays, Rational(0));
  d[index] = value;
  return d;
}

MultiSectionRing cox_p1p1() {
  auto backend = std::make_shared<ToricBackend>(product_of_p1_fan(2));
  return MultiSectionRing::create(backend, {ray_divisor(4, 0), ray_divisor(4, 2)});
}

// ---- criterion 1: weighted blow-up freeness grid ----

void criterion_weighted_freeness(std::ostream& log) {
  auto backend = std::make_shared<WeightedBlowupLatticeBackend>(2, 3, 5);
  RingOptions assume;
  assume.assume_ample = true;
  int free_count = 0;
  for (long alpha = 1; alpha <= 6; ++alpha) {
    for (long beta = 1; beta <= 6; ++beta) {
      MultiSectionRing ring = MultiSectionRing::create(
          backend, {Divisor{Rational(-alpha), 0}, Divisor{0, Rational(beta)}}, assume);
      bool expected = (alpha == 1) && (10 % beta == 0);
      FreenessVerdict verdict = freeness_test(ring);
      std::ostringstream os;
      os << "(alpha,beta)=(" << alpha << "," << beta << ") expected "
         << (expected ? "free" : "not free");
      require(verdict.free == expected, os.str());
      if (verdict.free) ++free_count;
    }
  }
  require(free_count == 3, "exactly beta in {1,2,5} with alpha = 1");
  log << "36 pairs, free exactly at alpha=1, beta in {1,2,5}";
}

// ---- criterion 2: blow-up of P^3 at two points ----

void criterion_p3_freeness(std::ostream& log) {
  PointConfig config;
  config.n = 3;
  config.points = {RatVec{1, 0, 0, 0}, RatVec{0, 1, 0, 0}};
  auto backend = std::make_shared<BlowupBackend>(config);
  auto verdict = [&](long m1, long m2) {
    MultiSectionRing ring = MultiSectionRing::create(
        backend, {Divisor{Rational(-m1), Rational(-m2), 0}, Divisor{0, 0, 1}});
    return freeness_test(ring).free;
  };
  require(verdict(2, 2), "m=(2,2) free");
  require(verdict(1, 1), "m=(1,1) free");
  require(!verdict(2, 3), "m=(2,3) not free");
  require(!verdict(3, 3), "m=(3,3) not free");
  log << "m=(1,1),(2,2) free; m=(2,3),(3,3) not free";
}

// ---- criterion 3: Cox(P1xP1) shift ----

void criterion_cox_shift(std::ostream& log) {
  MultiSectionRing cox = cox_p1p1();
  FreenessVerdict verdict = freeness_test(cox);
  require(verdict.free, "Cox ring canonical module is free");
  require(*verdict.generator_degree == deg({2, 2}), "generator degree (2,2)");
  require(*verdict.membership == deg({-2, -2}), "canonical module is R twisted by (-2,-2)");
  for (long a = -5; a <= 5; ++a) {
    for (long b = -5; b <= 5; ++b) {
      Integer canonical = canonical_piece_dimension(cox, deg({a, b}));
      Integer shifted = graded_dimension(cox, deg({a - 2, b - 2}));
      std::ostringstream os;
      os << "canonical(" << a << "," << b << ") == graded(" << a - 2 << "," << b - 2 << ")";
      require(canonical == shifted, os.str());
    }
  }
  log << "canonical table == graded table shifted by (2,2) on [-5,5]^2";
}

// ---- criterion 4: restriction counterexample ----

void criterion_restriction(std::ostream& log) {
  MultiSectionRing cox = cox_p1p1();
  DegreeBox box = symmetric_box(1, 5);

  RestrictionReport horizontal = restriction_check(cox, {deg({1, 0})}, box);
  require(!horizontal.agree, "sublattice (1,0) must mismatch");
  require(horizontal.sublattice_witness.status == WitnessStatus::NotFound,
          "(1,0) carries no ample witness");
  bool value_at_2 = false;
  for (const RestrictionEntry& e : horizontal.entries) {
    require(e.restriction == 0, "restriction of the big table is identically zero");
    if (e.degree == deg({2})) value_at_2 = (e.restricted_ring == 1);
  }
  require(value_at_2, "restricted ring table has value 1 at n = 2");

  RestrictionReport diagonal = restriction_check(cox, {deg({1, 1})}, box);
  require(diagonal.agree, "sublattice (1,1) must agree on [-5,5]");
  require(diagonal.sublattice_witness.status == WitnessStatus::Found,
          "(1,1) contains an ample witness");
  log << "(1,0): mismatch, zero restriction, value 1 at n=2; (1,1): agreement";
}

// ---- criterion 5: Segre identity ----

void criterion_segre(std::ostream& log) {
  MultiSectionRing cox = cox_p1p1();
  for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 1}, {2, 3}}) {
    MultiSectionRing s_ab = restrict_ring(cox, {deg({a, b})});
    for (long n = 1; n <= 5; ++n) {
      auto poly_dim = [](long d) { return d >= 0 ? Integer(d + 1) : Integer(0); };
      Integer expected = poly_dim(n * a - 2) * poly_dim(n * b - 2);
      std::ostringstream os;
      os << "S_(" << a << "," << b << ") canonical piece at n=" << n;
      require(canonical_piece_dimension(s_ab, deg({n})) == expected, os.str());
    }
  }
  log << "omega pieces match dim k[x]_{na-2} * dim k[y]_{nb-2} for (1,1) and (2,3)";
}

// ---- criterion 6: duality against the oracle ----

void criterion_duality(std::ostream& log) {
  MultiSectionRing cox = cox_p1p1();
  for (long a = -6; a <= 6; ++a) {
    for (long b = -6; b <= 6; ++b) {
      CohomologyQuery q;
      q.factor_dims = {1, 1};
      q.twists = {a, b};
      q.index = 2;
      std::ostringstream os;
      os << "Cox(P1xP1) local cohomology at (" << a << "," << b << ")";
      require(top_local_cohomology_dim(cox, deg({a, b})) == kunneth_dimension(q), os.str());
    }
  }
  auto p1 = std::make_shared<ToricBackend>(product_of_p1_fan(1));
  MultiSectionRing poly = MultiSectionRing::create(p1, {ray_divisor(2, 0)});
  for (long n = -6; n <= 6; ++n) {
    std::ostringstream os;
    os << "R(P1; pt) local cohomology at " << n;
    require(top_local_cohomology_dim(poly, deg({n})) == bott_dimension(1, n, 1), os.str());
  }
  log << "H^{d+s}_m matches the Kunneth/Bott oracle on [-6,6]^s";
}

// ---- criterion 7: cross-backend agreement ----

void criterion_cross_backend(std::ostream& log) {
  // Blow-up of P^2 at the three torus-fixed points, matched against the
  // del Pezzo-6 fan. Ray order (1,0),(0,1),(-1,-1),(1,1),(-1,0),(0,-1);
  // the exceptional rays 3,4,5 sit over (0:0:1), (1:0:0), (0:1:0), and the
  // pullback of a line is D_0 + D_3 + D_5.
  PointConfig config;
  config.n = 2;
  config.points = {RatVec{0, 0, 1}, RatVec{1, 0, 0}, RatVec{0, 1, 0}};
  Fan fan = del_pezzo6_fan();

  long checked = 0;
  for (long d = -5; d <= 5; ++d) {
    for (long c1 = -3; c1 <= 3; ++c1) {
      for (long c2 = -3; c2 <= 3; ++c2) {
        for (long c3 = -3; c3 <= 3; ++c3) {
          BlowupDivisor bd{Integer(d), IntVec{c1, c2, c3}};
          Integer blowup_dim = section_dimension_blowup(config, bd);
          ToricDivisor td;
          td.coefficients.assign(6, Rational(0));
          td.coefficients[0] = d;
          td.coefficients[3] = Rational(d - c1);
          td.coefficients[5] = Rational(d - c3);
          td.coefficients[4] = Rational(-c2);
          Integer toric_dim = section_dimension(fan, td);
          std::ostringstream os;
          os << "agreement at d=" << d << " c=(" << c1 << "," << c2 << "," << c3 << "): "
             << blowup_dim << " vs " << toric_dim;
          require(blowup_dim == toric_dim, os.str());
          ++checked;
        }
      }
    }
  }
  std::ostringstream os;
  os << checked << " divisors agree across the two backends";
  log << os.str();
}

// ---- criterion 8: property suites ----

void criterion_properties(std::ostream& log) {
  // (a) Smith normal form invariants on 500 random matrices.
  {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int trial = 0; trial < 500; ++trial) {
      IntMatrix a(dim(rng), dim(rng));
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(r, c) = entry(rng);
      SmithDecomposition s = snf(a);
      require(s.u * a * s.v == s.s, "U*A*V == S");
      require(abs_int(determinant(s.u)) == 1, "U unimodular");
      require(abs_int(determinant(s.v)) == 1, "V unimodular");
      IntVec diag = s.diagonal();
      Integer prod = 1;
      for (std::size_t j = 0; j < diag.size(); ++j) {
        require(diag[j] >= 0, "diagonal nonnegative");
        if (j + 1 < diag.size() && diag[j] != 0)
          require(diag[j + 1] % diag[j] == 0, "divisibility chain");
        prod *= diag[j];
        require(prod == oracle::determinantal_divisor(a, j + 1), "determinantal divisors");
      }
    }
  }
  // (b) lattice-point enumeration vs direct filter on 200 bounded polyhedra.
  {
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<std::size_t> dim_dist(1, 3);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<long> halfwidth(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = dim_dist(rng);
      std::vector<Constraint> cs;
      std::vector<std::pair<long, long>> apriori(n);
      for (std::size_t i = 0; i < n; ++i) {
        long w = halfwidth(rng);
        apriori[i] = {-w, w};
        IntVec lo(n, Integer(0)), hi(n, Integer(0));
        lo[i] = 1;
        hi[i] = -1;
        cs.push_back(Constraint{lo, Rational(-w)});
        cs.push_back(Constraint{hi, Rational(-w)});
      }
      const std::size_t extra = 8 - std::min<std::size_t>(2 * n, 6);
      for (std::size_t k = 0; k < extra; ++k) {
        Constraint con;
        con.normal.resize(n);
        bool zero = true;
        for (std::size_t i = 0; i < n; ++i) {
          con.normal[i] = coeff(rng);
          if (con.normal[i] != 0) zero = false;
        }
        if (zero) continue;
        con.bound = coeff(rng);
        cs.push_back(std::move(con));
      }
      RationalPolyhedron p(n, cs);
      require(enumerate_lattice_points(p) == oracle::lattice_points_by_filter(p, apriori),
              "enumeration equals the direct box filter");
    }
  }
  // (c) linear-equivalence invariance on 100 random toric divisors.
  {
    std::mt19937_64 rng(107);
    std::uniform_int_distribution<long> entry(-4, 4);
    std::vector<Fan> fans = {projective_space_fan(2), product_of_p1_fan(2), del_pezzo6_fan()};
    int done = 0;
    while (done < 100) {
      const Fan& fan = fans[done % fans.size()];
      ToricDivisor d;
      for (std::size_t r = 0; r < fan.rays.size(); ++r) d.coefficients.emplace_back(entry(rng));
      IntVec u(fan.rank);
      for (auto& x : u) x = entry(rng);
      ToricDivisor shifted = d;
      ToricDivisor principal = principal_divisor(fan, u);
      for (std::size_t r = 0; r < fan.rays.size(); ++r)
        shifted.coefficients[r] += principal.coefficients[r];
      require(section_dimension(fan, d) == section_dimension(fan, shifted),
              "linear equivalence invariance");
      ++done;
    }
  }
  // (d) degree-shift identity for 50 random module divisors on both backends.
  {
    std::mt19937_64 rng(109);
    std::uniform_int_distribution<long> entry(-2, 2);

    MultiSectionRing cox = cox_p1p1();
    for (int trial = 0; trial < 25; ++trial) {
      Divisor f(4, Rational(0));
      for (auto& x : f) x = entry(rng);
      for (std::size_t j = 0; j < 2; ++j) {
        Divisor f_plus = divisor_add(f, cox.divisors()[j]);
        for (long a = -2; a <= 2; ++a) {
          for (long b = -2; b <= 2; ++b) {
            IntVec n = deg({a, b});
            IntVec shifted = n;
            shifted[j] += 1;
            require(module_piece_dimension(cox, f_plus, n) ==
                        module_piece_dimension(cox, f, shifted),
                    "toric degree-shift identity");
          }
        }
      }
    }

    PointConfig config;
    config.n = 2;
    config.points = {RatVec{1, 0, 0}, RatVec{0, 1, 0}};
    auto backend = std::make_shared<BlowupBackend>(config);
    MultiSectionRing ring =
        MultiSectionRing::create(backend, {Divisor{1, 1, 0}, Divisor{0, 0, 1}});
    for (int trial = 0; trial < 25; ++trial) {
      Divisor f(3, Rational(0));
      for (auto& x : f) x = entry(rng);
      for (std::size_t j = 0; j < 2; ++j) {
        Divisor f_plus = divisor_add(f, ring.divisors()[j]);
        for (long a = -1; a <= 2; ++a) {
          for (long b = -1; b <= 3; ++b) {
            IntVec n = deg({a, b});
            IntVec shifted = n;
            shifted[j] += 1;
            require(module_piece_dimension(ring, f_plus, n) ==
                        module_piece_dimension(ring, f, shifted),
                    "blow-up degree-shift identity");
          }
        }
      }
    }
  }
  log << "SNF x500, enumeration x200, linear equivalence x100, degree shift x50";
}

// ---- criterion 9: local domain probe ----

void criterion_probe(std::ostream& log) {
  std::vector<std::pair<std::string, MultiSectionRing>> shipped;
  shipped.emplace_back("Cox(P1xP1)", cox_p1p1());
  shipped.emplace_back("Cox(P2)",
                       cox_ring(std::make_shared<ToricBackend>(projective_space_fan(2))));
  shipped.emplace_back("Cox(dP6)", cox_ring(std::make_shared<ToricBackend>(del_pezzo6_fan())));
  shipped.emplace_back("Cox(F1)", cox_ring(std::make_shared<ToricBackend>(hirzebruch_fan(1))));
  {
    auto p1 = std::make_shared<ToricBackend>(product_of_p1_fan(1));
    shipped.emplace_back("R(P1; pt)", MultiSectionRing::create(p1, {ray_divisor(2, 0)}));
  }
  {
    PointConfig config;
    config.n = 3;
    config.points = {RatVec{1, 0, 0, 0}, RatVec{0, 1, 0, 0}};
    auto backend = std::make_shared<BlowupBackend>(config);
    shipped.emplace_back("R(Bl_2 P3; -2E_1-2E_2, A)",
                         MultiSectionRing::create(
                             backend, {Divisor{-2, -2, 0}, Divisor{0, 0, 1}}));
  }
  {
    PointConfig config;
    config.n = 2;
    config.points = {RatVec{1, 0, 0}};
    auto backend = std::make_shared<BlowupBackend>(config);
    shipped.emplace_back("R(Bl_1 P2; -E, A)",
                         MultiSectionRing::create(backend, {Divisor{1, 0}, Divisor{0, 1}}));
  }
  for (const auto& [name, ring] : shipped) {
    ProbeReport probe = local_domain_probe(ring, symmetric_box(ring.grading_rank(), 5));
    require(!probe.violation_found, name + " must have no violating degree");
  }

  auto p1p1 = std::make_shared<ToricBackend>(product_of_p1_fan(2));
  MultiSectionRing broken = MultiSectionRing::create_unchecked(
      p1p1, {ray_divisor(4, 0), ray_divisor(4, 0, -1)});
  ProbeReport probe = local_domain_probe(broken, symmetric_box(2, 5));
  require(probe.violation_found, "bypassed independence must be caught");
  require(probe.degree[0] == probe.degree[1] && probe.degree[0] != 0,
          "violating degree lies on the diagonal");
  log << shipped.size() << " shipped rings clean; bypassed ring caught at degree ("
      << probe.degree[0] << "," << probe.degree[1] << ")";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1 weighted blow-up freeness grid (alpha,beta) in [1,6]^2", criterion_weighted_freeness},
      {"2 freeness on the blow-up of P^3 at two points", criterion_p3_freeness},
      {"3 Cox(P1xP1) canonical shift (2,2)", criterion_cox_shift},
      {"4 restriction identity and its (1,0) counterexample", criterion_restriction},
      {"5 Segre canonical pieces", criterion_segre},
      {"6 top local cohomology vs Kunneth/Bott oracle", criterion_duality},
      {"7 cross-backend section dimensions (|d|<=5, |c_i|<=3)", criterion_cross_backend},
      {"8 property suites (SNF, enumeration, equivalence, shift)", criterion_properties},
      {"9 local domain probe", criterion_probe},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::ostringstream log;
    try {
      criterion.run(log);
      std::cout << "PASS  criterion " << criterion.name;
      if (!log.str().empty()) std::cout << "  [" << log.str() << "]";
      std::cout << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL  criterion " << criterion.name << "  [" << e.what() << "]\n";
    }
  }
  if (failures == 0) {
    std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
  } else {
    std::cout << failures << " acceptance criteria FAILED\n";
  }
  return failures == 0 ? 0 : 1;
}
