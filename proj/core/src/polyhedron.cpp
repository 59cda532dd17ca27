#include "coxcanon/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace coxcanon {

namespace {

bool is_zero_vec(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// gcd-reduce the normal, scaling the bound by the same factor.
void normalize_constraint(Constraint& c) {
  Integer g = 0;
  for (const Integer& x : c.normal) g = gcd_int(g, x);
  if (g > 1) {
    for (Integer& x : c.normal) x /= g;
    c.bound /= Rational(g);
  }
}

// Normalize, drop vacuous constant constraints, keep the tightest bound per
// normal. A positive constant bound (0 >= b > 0) is kept as a contradiction.
std::vector<Constraint> canonicalize(std::vector<Constraint> cs) {
  std::map<IntVec, Rational> best;
  for (Constraint& c : cs) {
    if (is_zero_vec(c.normal)) {
      if (c.bound <= 0) continue;  // 0 >= nonpositive: vacuous
      c.normal.assign(c.normal.size(), Integer(0));
    } else {
      normalize_constraint(c);
    }
    auto [it, inserted] = best.emplace(c.normal, c.bound);
    if (!inserted && c.bound > it->second) it->second = c.bound;
  }
  std::vector<Constraint> out;
  out.reserve(best.size());
  for (auto& [normal, bound] : best) out.push_back(Constraint{normal, bound});
  return out;
}

// Eliminate variable k; the result lives in the same ambient coordinates but
// every constraint has coefficient 0 at k. Exact projection.
std::vector<Constraint> eliminate_variable(const std::vector<Constraint>& cs, std::size_t k) {
  std::vector<const Constraint*> pos, neg;
  std::vector<Constraint> out;
  for (const Constraint& c : cs) {
    if (c.normal[k] > 0) {
      pos.push_back(&c);
    } else if (c.normal[k] < 0) {
      neg.push_back(&c);
    } else {
      out.push_back(c);
    }
  }
  for (const Constraint* p : pos) {
    for (const Constraint* n : neg) {
      const Integer a = p->normal[k];   // > 0
      const Integer b = -n->normal[k];  // > 0
      Constraint combined;
      combined.normal.resize(p->normal.size());
      for (std::size_t i = 0; i < combined.normal.size(); ++i)
        combined.normal[i] = b * p->normal[i] + a * n->normal[i];
      combined.bound = Rational(b) * p->bound + Rational(a) * n->bound;
      out.push_back(std::move(combined));
    }
  }
  return canonicalize(std::move(out));
}

struct IntervalResult {
  bool empty = false;
  std::optional<Rational> lower;  // nullopt: unbounded below
  std::optional<Rational> upper;
};

// Project onto variable i by eliminating all the others.
IntervalResult coordinate_interval(const RationalPolyhedron& p, std::size_t i) {
  std::vector<Constraint> cs = p.constraints();
  for (std::size_t k = 0; k < p.dim(); ++k) {
    if (k == i) continue;
    cs = eliminate_variable(cs, k);
  }
  IntervalResult res;
  for (const Constraint& c : cs) {
    const Integer& a = c.normal[i];
    if (a == 0) {
      if (c.bound > 0) res.empty = true;  // 0 >= positive
      continue;
    }
    Rational v = c.bound / Rational(a);
    if (a > 0) {
      if (!res.lower || v > *res.lower) res.lower = v;
    } else {
      if (!res.upper || v < *res.upper) res.upper = v;
    }
  }
  if (res.lower && res.upper && *res.lower > *res.upper) res.empty = true;
  return res;
}

}  // namespace

RationalPolyhedron::RationalPolyhedron(std::size_t dim, std::vector<Constraint> constraints)
    : dim_(dim) {
  if (dim == 0) throw DimensionMismatch("polyhedron ambient dimension must be positive");
  for (const Constraint& c : constraints)
    if (c.normal.size() != dim) throw DimensionMismatch("constraint normal length != dim");
  constraints_ = canonicalize(std::move(constraints));
}

bool RationalPolyhedron::contains(const IntVec& point) const {
  if (point.size() != dim_) throw DimensionMismatch("point length != dim");
  for (const Constraint& c : constraints_) {
    Integer v = 0;
    for (std::size_t i = 0; i < dim_; ++i) v += c.normal[i] * point[i];
    if (Rational(v) < c.bound) return false;
  }
  return true;
}

bool RationalPolyhedron::contains(const RatVec& point) const {
  if (point.size() != dim_) throw DimensionMismatch("point length != dim");
  for (const Constraint& c : constraints_) {
    Rational v = 0;
    for (std::size_t i = 0; i < dim_; ++i) v += Rational(c.normal[i]) * point[i];
    if (v < c.bound) return false;
  }
  return true;
}

RationalPolyhedron RationalPolyhedron::translated(const IntVec& t) const {
  if (t.size() != dim_) throw DimensionMismatch("translation length != dim");
  std::vector<Constraint> cs = constraints_;
  for (Constraint& c : cs) {
    Integer shift = 0;
    for (std::size_t i = 0; i < dim_; ++i) shift += c.normal[i] * t[i];
    c.bound += Rational(shift);
  }
  return RationalPolyhedron(dim_, std::move(cs));
}

BoxResult is_bounded_with_box(const RationalPolyhedron& p) {
  BoxResult res;
  res.box.resize(p.dim());
  bool unbounded = false;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    IntervalResult iv = coordinate_interval(p, i);
    if (iv.empty) {
      res.kind = BoxKind::Empty;
      res.box.clear();
      return res;
    }
    if (!iv.lower || !iv.upper) {
      unbounded = true;
      continue;
    }
    res.box[i] = {rat_ceil(*iv.lower), rat_floor(*iv.upper)};
  }
  res.kind = unbounded ? BoxKind::Unbounded : BoxKind::Bounded;
  if (unbounded) res.box.clear();
  return res;
}

std::vector<IntVec> enumerate_lattice_points(const RationalPolyhedron& p) {
  BoxResult b = is_bounded_with_box(p);
  if (b.kind == BoxKind::Unbounded)
    throw UnboundedPolyhedron("enumerate_lattice_points on unbounded polyhedron");
  std::vector<IntVec> out;
  if (b.kind == BoxKind::Empty) return out;
  for (const auto& [lo, hi] : b.box)
    if (lo > hi) return out;

  IntVec point(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) point[i] = b.box[i].first;
  for (;;) {
    if (p.contains(point)) out.push_back(point);
    // Odometer step in lexicographic order (last coordinate fastest).
    std::size_t i = p.dim();
    while (i > 0) {
      --i;
      if (point[i] < b.box[i].second) {
        ++point[i];
        for (std::size_t j = i + 1; j < p.dim(); ++j) point[j] = b.box[j].first;
        break;
      }
      if (i == 0) return out;
    }
  }
}

RationalPolyhedron fourier_motzkin_project(const RationalPolyhedron& p,
                                           const std::vector<std::size_t>& keep) {
  if (keep.empty()) throw DimensionMismatch("projection needs at least one coordinate");
  for (std::size_t k : keep)
    if (k >= p.dim()) throw DimensionMismatch("projection coordinate out of range");
  std::vector<Constraint> cs = p.constraints();
  for (std::size_t v = 0; v < p.dim(); ++v) {
    if (std::find(keep.begin(), keep.end(), v) != keep.end()) continue;
    cs = eliminate_variable(cs, v);
  }
  std::vector<Constraint> reduced;
  for (const Constraint& c : cs) {
    Constraint rc;
    rc.normal.resize(keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) rc.normal[j] = c.normal[keep[j]];
    rc.bound = c.bound;
    reduced.push_back(std::move(rc));
  }
  return RationalPolyhedron(keep.size(), std::move(reduced));
}

}  // namespace coxcanon
