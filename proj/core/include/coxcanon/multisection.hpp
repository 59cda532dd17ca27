#pragma once

#include "coxcanon/backend.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coxcanon {

enum class WitnessStatus { Found, Assumed, NotFound };

std::string to_string(WitnessStatus s);

/// Result of the ample Cartier witness search over integer combinations of
/// the ring's divisors (max-norm shells up to the bound).
struct AmpleWitness {
  WitnessStatus status = WitnessStatus::NotFound;
  IntVec combination;  ///< valid when status == Found
};

struct RingOptions {
  bool assume_ample = false;  ///< record condition (2) as an assumption when unverifiable
  long witness_bound = 8;     ///< max-norm bound of the witness search
};

/// R(X; D_1, ..., D_s): a variety backend plus an ordered divisor list, with
/// cached divisor classes and ample-witness data. Construction verifies that
/// the classes are independent over Z (hard failure otherwise); the Noetherian
/// hypothesis is always an assumption and only ever reported, never checked.
class MultiSectionRing {
 public:
  static MultiSectionRing create(std::shared_ptr<const VarietyBackend> backend,
                                 std::vector<Divisor> divisors, RingOptions options = {});
  /// Skips the class-independence check; for diagnostics and for exercising
  /// local_domain_probe on a deliberately broken ring.
  static MultiSectionRing create_unchecked(std::shared_ptr<const VarietyBackend> backend,
                                           std::vector<Divisor> divisors,
                                           RingOptions options = {});

  const VarietyBackend& backend() const { return *backend_; }
  std::shared_ptr<const VarietyBackend> backend_ptr() const { return backend_; }
  std::size_t grading_rank() const { return divisors_.size(); }  ///< s
  const std::vector<Divisor>& divisors() const { return divisors_; }
  bool integral() const { return integral_; }
  /// Classes of the divisors after clearing denominators (equal to the
  /// divisor classes themselves on integral rings).
  const std::vector<GroupElement>& cleared_classes() const { return cleared_classes_; }
  bool classes_independent() const { return classes_independent_; }
  const AmpleWitness& ample_witness() const { return witness_; }
  bool noetherian_assumed() const { return true; }

  /// sum n_i D_i
  Divisor degree_divisor(const IntVec& n) const;

 private:
  MultiSectionRing() = default;
  static MultiSectionRing build(std::shared_ptr<const VarietyBackend> backend,
                                std::vector<Divisor> divisors, const RingOptions& options,
                                bool enforce_independence);

  std::shared_ptr<const VarietyBackend> backend_;
  std::vector<Divisor> divisors_;
  bool integral_ = true;
  std::vector<GroupElement> cleared_classes_;
  bool classes_independent_ = false;
  AmpleWitness witness_;
};

/// dim_k R_n = h^0(X, O(sum n_i D_i)).
Integer graded_dimension(const MultiSectionRing& ring, const IntVec& n);

/// dim_k [M_F]_n = h^0(X, O(sum n_i D_i + F)).
Integer module_piece_dimension(const MultiSectionRing& ring, const Divisor& f, const IntVec& n);

/// dim_k [M_{K_X}]_n; the degreewise realization of the canonical module
/// under the ample-witness and Noetherian hypotheses.
Integer canonical_piece_dimension(const MultiSectionRing& ring, const IntVec& n);

/// dim_k H^{dim X + s}_m(R)_n, the graded dual of the canonical module:
/// equals canonical_piece_dimension at -n.
Integer top_local_cohomology_dim(const MultiSectionRing& ring, const IntVec& n);

/// Canonical piece for Q-divisor rings: h^0 of the coefficientwise floor of
/// sum n_i D_i + K_X + sum_V ((q_V - 1)/q_V) V, where q_V is the lcm of the
/// reduced coefficient denominators at the prime divisor V. Toric backends
/// only, except that fully integral rings degenerate to
/// canonical_piece_dimension on any backend.
Integer q_canonical_piece(const MultiSectionRing& ring, const IntVec& n);

/// Inclusive per-axis integer box of degree vectors.
struct DegreeBox {
  IntVec lo, hi;
  std::size_t axes() const { return lo.size(); }
};

DegreeBox symmetric_box(std::size_t axes, long radius);
/// All degree vectors of the box in lexicographic order.
std::vector<IntVec> box_degrees(const DegreeBox& box);

/// Finite map from degree vectors to dimensions; a cache over a stated box,
/// never a claim outside it.
struct GradedDimTable {
  DegreeBox box;
  std::map<IntVec, Integer> entries;
};

GradedDimTable graded_table(const MultiSectionRing& ring, const DegreeBox& box);
GradedDimTable module_table(const MultiSectionRing& ring, const Divisor& f, const DegreeBox& box);
GradedDimTable canonical_table(const MultiSectionRing& ring, const DegreeBox& box);

/// Freeness of the canonical module: exact lattice membership of the class of
/// K_X in Z D_1-bar + ... + Z D_s-bar inside Cl(X).
struct FreenessVerdict {
  bool free = false;
  /// K_X-bar = sum membership_i * D_i-bar when free.
  std::optional<IntVec> membership;
  /// Degree of the rank-one generator: e = -membership, so the canonical
  /// module is R twisted by `membership` and canonical_piece(n) equals
  /// graded_dimension(n - e).
  std::optional<IntVec> generator_degree;
};

FreenessVerdict freeness_test(const MultiSectionRing& ring);

/// Deterministic divisors whose classes form the chosen basis of a free
/// class group. Throws UnsupportedOperation on torsion.
std::vector<Divisor> cox_basis_divisors(const VarietyBackend& backend);

/// The Cox ring R(X; B_1, ..., B_f) on the chosen class-group basis.
MultiSectionRing cox_ring(std::shared_ptr<const VarietyBackend> backend, RingOptions options = {});

/// Degree of the generator of the Cox ring's canonical module: -K_X-bar in
/// the chosen basis. Asserts that freeness_test on the Cox ring agrees.
GroupElement cox_canonical_degree(std::shared_ptr<const VarietyBackend> backend);

/// Cl(R) = Cl(X) / (Z D_1-bar + ... + Z D_s-bar). Integral rings only.
FGAbelianGroup cl_R_group(const MultiSectionRing& ring);

/// Image of the class of F under Cl(X) -> Cl(R); the class of M_F.
GroupElement class_in_cl_R(const MultiSectionRing& ring, const Divisor& f);

/// R(X; F_1, ..., F_r) for F_j = sum_k sublattice[j][k] * D_k.
MultiSectionRing restrict_ring(const MultiSectionRing& ring,
                               const std::vector<IntVec>& sublattice, RingOptions options = {});

struct RestrictionEntry {
  IntVec degree;            ///< in the sublattice's Z^r grading
  Integer restricted_ring;  ///< canonical piece of R(X; F_1..F_r)
  Integer restriction;      ///< canonical piece of the big ring at the embedded degree
};

struct RestrictionReport {
  std::vector<IntVec> sublattice;
  DegreeBox box;
  std::vector<RestrictionEntry> entries;
  bool agree = true;
  AmpleWitness sublattice_witness;
  /// "cone-interior" when the restricted side was computed from the interior
  /// lattice points of the section cone (exact for toric backends, no
  /// hypotheses); "mk-formula" when it reuses the M_{K_X} realization, which
  /// is only the canonical module under the ample-witness hypothesis.
  std::string restricted_method;
};

/// Compares the restricted ring's canonical table against the restriction of
/// the big ring's canonical table to the sublattice.
RestrictionReport restriction_check(const MultiSectionRing& ring,
                                    const std::vector<IntVec>& sublattice, const DegreeBox& box);

/// True when cone_interior_canonical_piece is available for this ring.
bool supports_cone_interior(const MultiSectionRing& ring);

/// Graded dimension of the span of the interior lattice points of the ring's
/// section cone (toric backends). This is the canonical module of the
/// semigroup ring independently of the ample-witness hypothesis, so it both
/// validates canonical_piece_dimension and stays correct where the M_{K_X}
/// realization does not apply.
Integer cone_interior_canonical_piece(const MultiSectionRing& ring, const IntVec& n);

struct ProbeReport {
  bool violation_found = false;
  IntVec degree;  ///< first degree (lex order) with R_n and R_{-n} both nonzero
};

/// Searches the box for n != 0 with graded_dimension(n) > 0 and
/// graded_dimension(-n) > 0. Impossible when the divisor classes are
/// independent; a hit signals a backend bug or a bypassed independence check.
ProbeReport local_domain_probe(const MultiSectionRing& ring, const DegreeBox& box);

}  // namespace coxcanon
