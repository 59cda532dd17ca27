#include "coxcanon/job.hpp"

#include "coxcanon/cohomology.hpp"

#include <json.hpp>

#include <sstream>

namespace coxcanon {

namespace {

using nlohmann::json;

Integer parse_integer_field(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>());
    } catch (const std::exception&) {
      throw SchemaError(where + ": not an integer");
    }
  }
  throw SchemaError(where + ": expected an integer (floats are rejected; arithmetic is exact)");
}

Rational parse_rational_field(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    const std::size_t slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(Integer(s));
      Integer num(s.substr(0, slash));
      Integer den(s.substr(slash + 1));
      if (den == 0) throw SchemaError(where + ": zero denominator");
      return Rational(num, den);
    } catch (const SchemaError&) {
      throw;
    } catch (const std::exception&) {
      throw SchemaError(where + ": not a rational (use \"p/q\" or an integer)");
    }
  }
  throw SchemaError(where + ": expected an integer or \"p/q\" string");
}

json intvec_to_json(const IntVec& v) {
  json a = json::array();
  for (const Integer& x : v) a.push_back(to_int64(x));
  return a;
}

struct ParsedVariety {
  std::shared_ptr<const VarietyBackend> backend;
  /// Factor dimensions when X is P^n or a product of P^1s (the oracle scope).
  std::optional<std::vector<long>> oracle_factors;
  json description;
};

ParsedVariety parse_variety(const json& doc) {
  if (!doc.contains("variety")) throw SchemaError("missing \"variety\"");
  const json& v = doc.at("variety");
  if (!v.is_object() || !v.contains("type") || !v.at("type").is_string())
    throw SchemaError("\"variety\" must be an object with a \"type\" string");
  const std::string type = v.at("type").get<std::string>();

  ParsedVariety parsed;
  parsed.description = v;

  if (type == "toric") {
    if (!v.contains("fan") || !v.at("fan").is_object())
      throw SchemaError("toric variety needs a \"fan\" object");
    const json& fj = v.at("fan");
    if (!fj.contains("rays") || !fj.at("rays").is_array() || fj.at("rays").empty())
      throw SchemaError("fan needs a nonempty \"rays\" array");
    if (!fj.contains("max_cones") || !fj.at("max_cones").is_array() || fj.at("max_cones").empty())
      throw SchemaError("fan needs a nonempty \"max_cones\" array");
    Fan fan;
    for (const json& rj : fj.at("rays")) {
      if (!rj.is_array() || rj.empty()) throw SchemaError("each ray must be a nonempty array");
      IntVec ray;
      for (const json& x : rj) ray.push_back(parse_integer_field(x, "ray entry"));
      fan.rays.push_back(std::move(ray));
    }
    fan.rank = fan.rays.front().size();
    for (const json& cj : fj.at("max_cones")) {
      if (!cj.is_array()) throw SchemaError("each maximal cone must be an array of ray indices");
      std::vector<std::size_t> cone;
      for (const json& x : cj) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
          throw SchemaError("cone entries must be nonnegative ray indices");
        cone.push_back(static_cast<std::size_t>(x.get<std::int64_t>()));
      }
      fan.max_cones.push_back(std::move(cone));
    }
    parsed.backend = std::make_shared<ToricBackend>(std::move(fan));
  } else if (type == "builtin") {
    if (!v.contains("name") || !v.at("name").is_string())
      throw SchemaError("builtin variety needs a \"name\"");
    const std::string name = v.at("name").get<std::string>();
    if (name == "projective_space") {
      if (!v.contains("n")) throw SchemaError("projective_space needs \"n\"");
      long n = static_cast<long>(to_int64(parse_integer_field(v.at("n"), "n")));
      if (n < 1) throw SchemaError("projective_space needs n >= 1");
      parsed.backend = std::make_shared<ToricBackend>(projective_space_fan(n));
      parsed.oracle_factors = std::vector<long>{n};
    } else if (name == "product_of_p1") {
      if (!v.contains("factors")) throw SchemaError("product_of_p1 needs \"factors\"");
      long k = static_cast<long>(to_int64(parse_integer_field(v.at("factors"), "factors")));
      if (k < 1) throw SchemaError("product_of_p1 needs factors >= 1");
      parsed.backend = std::make_shared<ToricBackend>(product_of_p1_fan(k));
      parsed.oracle_factors = std::vector<long>(static_cast<std::size_t>(k), 1L);
    } else if (name == "del_pezzo_6") {
      parsed.backend = std::make_shared<ToricBackend>(del_pezzo6_fan());
    } else if (name == "hirzebruch") {
      if (!v.contains("a")) throw SchemaError("hirzebruch needs \"a\"");
      long a = static_cast<long>(to_int64(parse_integer_field(v.at("a"), "a")));
      parsed.backend = std::make_shared<ToricBackend>(hirzebruch_fan(a));
    } else {
      throw SchemaError("unknown builtin \"" + name + "\" (use projective_space, product_of_p1, "
                        "del_pezzo_6 or hirzebruch)");
    }
  } else if (type == "blowup") {
    if (!v.contains("n")) throw SchemaError("blowup variety needs \"n\"");
    PointConfig config;
    long n_value = static_cast<long>(to_int64(parse_integer_field(v.at("n"), "n")));
    if (n_value < 1) throw SchemaError("blowup needs n >= 1");
    config.n = static_cast<std::size_t>(n_value);
    if (!v.contains("points") || !v.at("points").is_array())
      throw SchemaError("blowup variety needs a \"points\" array");
    for (const json& pj : v.at("points")) {
      if (!pj.is_array()) throw SchemaError("each point must be an array of coordinates");
      RatVec p;
      for (const json& x : pj) p.push_back(parse_rational_field(x, "point coordinate"));
      config.points.push_back(std::move(p));
    }
    parsed.backend = std::make_shared<BlowupBackend>(std::move(config));
  } else if (type == "weighted_blowup_lattice") {
    for (const char* key : {"a", "b", "c"})
      if (!v.contains(key)) throw SchemaError("weighted_blowup_lattice needs \"a\", \"b\", \"c\"");
    long a = static_cast<long>(to_int64(parse_integer_field(v.at("a"), "a")));
    long b = static_cast<long>(to_int64(parse_integer_field(v.at("b"), "b")));
    long c = static_cast<long>(to_int64(parse_integer_field(v.at("c"), "c")));
    parsed.backend = std::make_shared<WeightedBlowupLatticeBackend>(a, b, c);
  } else {
    throw SchemaError("unknown variety type \"" + type + "\"");
  }
  return parsed;
}

std::vector<Divisor> parse_divisors(const json& doc, const VarietyBackend& backend) {
  if (!doc.contains("divisors")) return {};
  const json& dj = doc.at("divisors");
  if (!dj.is_array()) throw SchemaError("\"divisors\" must be an array of coefficient vectors");
  std::vector<Divisor> out;
  for (const json& one : dj) {
    if (!one.is_array()) throw SchemaError("each divisor must be a coefficient array");
    Divisor d;
    for (const json& x : one) d.push_back(parse_rational_field(x, "divisor coefficient"));
    if (d.size() != backend.divisor_length())
      throw SchemaError("divisor has " + std::to_string(d.size()) + " coefficients, backend "
                        "expects " + std::to_string(backend.divisor_length()));
    out.push_back(std::move(d));
  }
  return out;
}

RingOptions parse_ring_options(const json& doc) {
  RingOptions options;
  if (doc.contains("assume_ample")) {
    if (!doc.at("assume_ample").is_boolean()) throw SchemaError("\"assume_ample\" must be a bool");
    options.assume_ample = doc.at("assume_ample").get<bool>();
  }
  if (doc.contains("witness_bound")) {
    options.witness_bound =
        static_cast<long>(to_int64(parse_integer_field(doc.at("witness_bound"), "witness_bound")));
    if (options.witness_bound < 1) throw SchemaError("\"witness_bound\" must be >= 1");
  }
  return options;
}

DegreeBox parse_box_spec(const std::string& spec, std::size_t axes) {
  DegreeBox box;
  std::istringstream ss(spec);
  std::string axis;
  while (std::getline(ss, axis, ',')) {
    const std::size_t colon = axis.find(':');
    if (colon == std::string::npos) throw SchemaError("--box axes are \"lo:hi\"");
    try {
      box.lo.emplace_back(Integer(axis.substr(0, colon)));
      box.hi.emplace_back(Integer(axis.substr(colon + 1)));
    } catch (const std::exception&) {
      throw SchemaError("--box entries must be integers");
    }
  }
  if (box.lo.size() == 1 && axes > 1) {
    // One range applies to every axis.
    box.lo.assign(axes, box.lo.front());
    box.hi.assign(axes, box.hi.front());
  }
  if (box.lo.size() != axes)
    throw SchemaError("--box has " + std::to_string(box.lo.size()) + " axes, expected " +
                      std::to_string(axes));
  for (std::size_t i = 0; i < axes; ++i)
    if (box.lo[i] > box.hi[i]) throw SchemaError("--box axis with lo > hi");
  return box;
}

DegreeBox parse_box_json(const json& bj, std::size_t axes) {
  if (!bj.is_array()) throw SchemaError("\"box\" must be an array of [lo, hi] pairs");
  DegreeBox box;
  for (const json& pair : bj) {
    if (!pair.is_array() || pair.size() != 2) throw SchemaError("box axes are [lo, hi] pairs");
    box.lo.push_back(parse_integer_field(pair.at(0), "box lo"));
    box.hi.push_back(parse_integer_field(pair.at(1), "box hi"));
  }
  if (box.lo.size() != axes)
    throw SchemaError("box has " + std::to_string(box.lo.size()) + " axes, expected " +
                      std::to_string(axes));
  for (std::size_t i = 0; i < axes; ++i)
    if (box.lo[i] > box.hi[i]) throw SchemaError("box axis with lo > hi");
  return box;
}

DegreeBox resolve_box(const CliRequest& request, const json& doc, std::size_t axes) {
  if (request.box_spec) return parse_box_spec(*request.box_spec, axes);
  if (doc.contains("box")) return parse_box_json(doc.at("box"), axes);
  return symmetric_box(axes, 5);
}

std::vector<IntVec> parse_sublattice_spec(const std::string& spec, std::size_t s) {
  std::vector<IntVec> out;
  std::istringstream ss(spec);
  std::string vec;
  while (std::getline(ss, vec, ';')) {
    IntVec row;
    std::istringstream vs(vec);
    std::string entry;
    while (std::getline(vs, entry, ',')) {
      try {
        row.emplace_back(Integer(entry));
      } catch (const std::exception&) {
        throw SchemaError("--sublattice entries must be integers");
      }
    }
    if (row.size() != s)
      throw SchemaError("--sublattice vectors must have length s = " + std::to_string(s));
    out.push_back(std::move(row));
  }
  if (out.empty()) throw SchemaError("--sublattice is empty");
  return out;
}

std::vector<IntVec> resolve_sublattice(const CliRequest& request, const json& doc, std::size_t s) {
  if (request.sublattice_spec) return parse_sublattice_spec(*request.sublattice_spec, s);
  if (doc.contains("sublattice")) {
    const json& sj = doc.at("sublattice");
    if (!sj.is_array() || sj.empty()) throw SchemaError("\"sublattice\" must be a nonempty array");
    std::vector<IntVec> out;
    for (const json& vj : sj) {
      if (!vj.is_array()) throw SchemaError("each sublattice vector must be an array");
      IntVec row;
      for (const json& x : vj) row.push_back(parse_integer_field(x, "sublattice entry"));
      if (row.size() != s)
        throw SchemaError("sublattice vectors must have length s = " + std::to_string(s));
      out.push_back(std::move(row));
    }
    return out;
  }
  throw SchemaError("restrict needs a sublattice (--sublattice or \"sublattice\")");
}

json hypotheses_json(const MultiSectionRing& ring, std::vector<std::string>& warnings) {
  json h;
  h["ample_witness"] = to_string(ring.ample_witness().status);
  if (ring.ample_witness().status == WitnessStatus::Found)
    h["ample_witness_combination"] = intvec_to_json(ring.ample_witness().combination);
  h["noetherian"] = "assumed";
  if (ring.ample_witness().status == WitnessStatus::NotFound)
    warnings.push_back("no ample Cartier witness found in the search box; results that depend on "
                       "it are unverified");
  else if (ring.ample_witness().status == WitnessStatus::Assumed)
    warnings.push_back("ample Cartier witness assumed, not verified");
  return h;
}

json group_json(const FGAbelianGroup& g) {
  json out;
  out["free_rank"] = static_cast<std::int64_t>(g.free_rank());
  json t = json::array();
  for (const Integer& x : g.torsion()) t.push_back(to_int64(x));
  out["torsion"] = t;
  return out;
}

json box_json(const DegreeBox& box) {
  json out = json::array();
  for (std::size_t i = 0; i < box.axes(); ++i)
    out.push_back(json::array({to_int64(box.lo[i]), to_int64(box.hi[i])}));
  return out;
}

json table_json(const GradedDimTable& table) {
  json out;
  out["box"] = box_json(table.box);
  json entries = json::array();
  for (const auto& [degree, dim] : table.entries) {
    json e;
    e["degree"] = intvec_to_json(degree);
    e["dim"] = to_int64(dim);
    entries.push_back(e);
  }
  out["entries"] = entries;
  return out;
}

std::string table_csv(const GradedDimTable& table) {
  std::ostringstream os;
  for (std::size_t i = 0; i < table.box.axes(); ++i) os << "n" << i + 1 << ",";
  os << "dim\n";
  for (const auto& [degree, dim] : table.entries) {
    for (const Integer& x : degree) os << x << ",";
    os << dim << "\n";
  }
  return os.str();
}

struct RingContext {
  ParsedVariety variety;
  std::vector<Divisor> divisors;
  MultiSectionRing ring;
};

RingContext make_ring(const json& doc) {
  ParsedVariety variety = parse_variety(doc);
  std::vector<Divisor> divisors = parse_divisors(doc, *variety.backend);
  if (divisors.empty())
    throw SchemaError("this subcommand needs a nonempty \"divisors\" array");
  MultiSectionRing ring =
      MultiSectionRing::create(variety.backend, divisors, parse_ring_options(doc));
  return RingContext{std::move(variety), std::move(divisors), std::move(ring)};
}

json report_skeleton(const std::string& subcommand) {
  json out;
  out["subcommand"] = subcommand;
  return out;
}

// ---- subcommand handlers ----

JobResult finish_json(json report, std::vector<std::string> warnings) {
  if (!warnings.empty()) report["warnings"] = warnings;
  JobResult r;
  r.output = report.dump(2) + "\n";
  return r;
}

JobResult run_classgroup(const CliRequest&, const json& doc) {
  ParsedVariety variety = parse_variety(doc);
  json report = report_skeleton("classgroup");
  std::vector<std::string> warnings;
  report["class_group"] = group_json(variety.backend->class_group());
  std::vector<Divisor> divisors = parse_divisors(doc, *variety.backend);
  if (!divisors.empty()) {
    MultiSectionRing ring =
        MultiSectionRing::create(variety.backend, divisors, parse_ring_options(doc));
    report["cl_R"] = group_json(cl_R_group(ring));
    report["hypotheses"] = hypotheses_json(ring, warnings);
  }
  return finish_json(std::move(report), std::move(warnings));
}

JobResult run_sections(const CliRequest& request, const json& doc) {
  RingContext ctx = make_ring(doc);
  DegreeBox box = resolve_box(request, doc, ctx.ring.grading_rank());
  GradedDimTable table = graded_table(ctx.ring, box);
  if (request.format == "csv") return JobResult{0, table_csv(table), ""};
  json report = report_skeleton("sections");
  std::vector<std::string> warnings;
  report["hypotheses"] = hypotheses_json(ctx.ring, warnings);
  report["table"] = table_json(table);
  return finish_json(std::move(report), std::move(warnings));
}

JobResult run_canonical(const CliRequest& request, const json& doc) {
  RingContext ctx = make_ring(doc);
  DegreeBox box = resolve_box(request, doc, ctx.ring.grading_rank());
  GradedDimTable table;
  table.box = box;
  for (const IntVec& n : box_degrees(box))
    table.entries.emplace(n, q_canonical_piece(ctx.ring, n));
  if (request.format == "csv") return JobResult{0, table_csv(table), ""};
  json report = report_skeleton("canonical");
  std::vector<std::string> warnings;
  report["hypotheses"] = hypotheses_json(ctx.ring, warnings);
  report["q_correction_applied"] = !ctx.ring.integral();
  report["table"] = table_json(table);
  return finish_json(std::move(report), std::move(warnings));
}

JobResult run_freeness(const CliRequest&, const json& doc) {
  RingContext ctx = make_ring(doc);
  FreenessVerdict verdict = freeness_test(ctx.ring);
  json report = report_skeleton("freeness");
  std::vector<std::string> warnings;
  report["hypotheses"] = hypotheses_json(ctx.ring, warnings);
  report["free"] = verdict.free;
  if (verdict.free) {
    report["canonical_twist"] = intvec_to_json(*verdict.membership);
    report["generator_degree"] = intvec_to_json(*verdict.generator_degree);
  }
  return finish_json(std::move(report), std::move(warnings));
}

JobResult run_restrict(const CliRequest& request, const json& doc) {
  RingContext ctx = make_ring(doc);
  std::vector<IntVec> sublattice = resolve_sublattice(request, doc, ctx.ring.grading_rank());
  DegreeBox box = resolve_box(request, doc, sublattice.size());
  RestrictionReport rep = restriction_check(ctx.ring, sublattice, box);

  if (request.format == "csv") {
    std::ostringstream os;
    for (std::size_t i = 0; i < box.axes(); ++i) os << "m" << i + 1 << ",";
    os << "restricted_ring,restriction\n";
    for (const RestrictionEntry& e : rep.entries) {
      for (const Integer& x : e.degree) os << x << ",";
      os << e.restricted_ring << "," << e.restriction << "\n";
    }
    return JobResult{0, os.str(), ""};
  }

  json report = report_skeleton("restrict");
  std::vector<std::string> warnings;
  report["hypotheses"] = hypotheses_json(ctx.ring, warnings);
  json sub = json::array();
  for (const IntVec& v : rep.sublattice) sub.push_back(intvec_to_json(v));
  report["sublattice"] = sub;
  report["box"] = box_json(rep.box);
  report["agree"] = rep.agree;
  report["restricted_method"] = rep.restricted_method;
  report["sublattice_ample_witness"] = to_string(rep.sublattice_witness.status);
  if (rep.sublattice_witness.status == WitnessStatus::Found)
    report["sublattice_ample_combination"] = intvec_to_json(rep.sublattice_witness.combination);
  else
    warnings.push_back("the sublattice carries no ample witness; the restriction identity is "
                       "not expected to hold");
  json entries = json::array();
  for (const RestrictionEntry& e : rep.entries) {
    json ej;
    ej["degree"] = intvec_to_json(e.degree);
    ej["restricted_ring"] = to_int64(e.restricted_ring);
    ej["restriction"] = to_int64(e.restriction);
    entries.push_back(ej);
  }
  report["entries"] = entries;
  return finish_json(std::move(report), std::move(warnings));
}

JobResult run_duality(const CliRequest& request, const json& doc) {
  RingContext ctx = make_ring(doc);
  if (!ctx.variety.oracle_factors)
    throw UnsupportedOperation("duality checks need a projective_space or product_of_p1 builtin "
                               "(the closed-form cohomology oracle only covers those)");
  if (!ctx.ring.integral())
    throw UnsupportedOperation("duality checks need integral divisors");
  const std::vector<long>& factors = *ctx.variety.oracle_factors;
  long total_dim = 0;
  for (long f : factors) total_dim += f;

  DegreeBox box = resolve_box(request, doc, ctx.ring.grading_rank());
  json entries = json::array();
  bool agree = true;
  GradedDimTable csv_table;
  csv_table.box = box;
  for (const IntVec& n : box_degrees(box)) {
    Integer ring_side = top_local_cohomology_dim(ctx.ring, n);
    GroupElement cls = ctx.ring.backend().divisor_class(ctx.ring.degree_divisor(n));
    CohomologyQuery q;
    q.factor_dims = factors;
    for (const Integer& t : cls.coords) q.twists.push_back(static_cast<long>(to_int64(t)));
    q.index = total_dim;
    Integer oracle_side = kunneth_dimension(q);
    if (ring_side != oracle_side) agree = false;
    json e;
    e["degree"] = intvec_to_json(n);
    e["ring"] = to_int64(ring_side);
    e["oracle"] = to_int64(oracle_side);
    entries.push_back(e);
  }
  if (request.format == "csv") {
    std::ostringstream os;
    for (std::size_t i = 0; i < box.axes(); ++i) os << "n" << i + 1 << ",";
    os << "ring,oracle\n";
    for (const json& e : entries) {
      for (const json& x : e.at("degree")) os << x.get<std::int64_t>() << ",";
      os << e.at("ring").get<std::int64_t>() << "," << e.at("oracle").get<std::int64_t>() << "\n";
    }
    return JobResult{0, os.str(), ""};
  }
  json report = report_skeleton("duality");
  std::vector<std::string> warnings;
  report["hypotheses"] = hypotheses_json(ctx.ring, warnings);
  report["box"] = box_json(box);
  report["agree"] = agree;
  report["entries"] = entries;
  return finish_json(std::move(report), std::move(warnings));
}

JobResult run_probe(const CliRequest& request, const json& doc) {
  RingContext ctx = make_ring(doc);
  DegreeBox box = resolve_box(request, doc, ctx.ring.grading_rank());
  ProbeReport probe = local_domain_probe(ctx.ring, box);
  json report = report_skeleton("probe");
  std::vector<std::string> warnings;
  report["hypotheses"] = hypotheses_json(ctx.ring, warnings);
  report["box"] = box_json(box);
  report["violation_found"] = probe.violation_found;
  if (probe.violation_found) report["degree"] = intvec_to_json(probe.degree);
  return finish_json(std::move(report), std::move(warnings));
}

JobResult run_examples(const CliRequest&) {
  json report = report_skeleton("examples");

  // Weighted-plane blow-up, weights (2,3,5): freeness of R(X; -alpha E, beta A).
  {
    auto backend = std::make_shared<WeightedBlowupLatticeBackend>(2, 3, 5);
    json grid = json::array();
    for (long alpha = 1; alpha <= 6; ++alpha) {
      for (long beta = 1; beta <= 6; ++beta) {
        RingOptions options;
        options.assume_ample = true;
        MultiSectionRing ring = MultiSectionRing::create(
            backend,
            {Divisor{Rational(-alpha), Rational(0)}, Divisor{Rational(0), Rational(beta)}},
            options);
        FreenessVerdict verdict = freeness_test(ring);
        json e;
        e["alpha"] = alpha;
        e["beta"] = beta;
        e["free"] = verdict.free;
        if (verdict.free) e["generator_degree"] = intvec_to_json(*verdict.generator_degree);
        grid.push_back(e);
      }
    }
    json section;
    section["weights"] = json::array({2, 3, 5});
    section["hypotheses"] = {{"ample_witness", "assumed"}, {"noetherian", "assumed"}};
    section["freeness_grid"] = grid;
    report["weighted_blowup_freeness"] = section;
  }

  // Blow-up of P^3 at two points: freeness of R(X; -m_1 E_1 - m_2 E_2, A).
  {
    PointConfig config;
    config.n = 3;
    config.points = {RatVec{1, 0, 0, 0}, RatVec{0, 1, 0, 0}};
    auto backend = std::make_shared<BlowupBackend>(config);
    json grid = json::array();
    for (long m1 = 1; m1 <= 3; ++m1) {
      for (long m2 = m1; m2 <= 3; ++m2) {
        MultiSectionRing ring = MultiSectionRing::create(
            backend,
            {Divisor{Rational(-m1), Rational(-m2), Rational(0)},
             Divisor{Rational(0), Rational(0), Rational(1)}},
            {});
        FreenessVerdict verdict = freeness_test(ring);
        json e;
        e["m"] = json::array({m1, m2});
        e["free"] = verdict.free;
        e["ample_witness"] = to_string(ring.ample_witness().status);
        grid.push_back(e);
      }
    }
    report["p3_two_point_blowup_freeness"] = grid;
  }

  // Cox ring of P^1 x P^1: generator degree, canonical twist, the restriction
  // identity along (1,1) and its failure along (1,0), and the Segre pieces.
  {
    auto backend = std::make_shared<ToricBackend>(product_of_p1_fan(2));
    MultiSectionRing cox = cox_ring(backend);
    FreenessVerdict verdict = freeness_test(cox);
    json section;
    section["free"] = verdict.free;
    section["canonical_twist"] = intvec_to_json(*verdict.membership);
    section["generator_degree"] = intvec_to_json(*verdict.generator_degree);

    DegreeBox line_box = symmetric_box(1, 5);
    RestrictionReport diag = restriction_check(cox, {IntVec{1, 1}}, line_box);
    RestrictionReport horiz = restriction_check(cox, {IntVec{1, 0}}, line_box);
    section["restriction_1_1_agrees"] = diag.agree;
    section["restriction_1_0_agrees"] = horiz.agree;
    json mismatch = json::array();
    for (const RestrictionEntry& e : horiz.entries) {
      json ej;
      ej["degree"] = intvec_to_json(e.degree);
      ej["restricted_ring"] = to_int64(e.restricted_ring);
      ej["restriction"] = to_int64(e.restriction);
      mismatch.push_back(ej);
    }
    section["restriction_1_0_entries"] = mismatch;

    json segre = json::array();
    for (long a : {1L, 2L}) {
      long b = (a == 1) ? 1 : 3;
      MultiSectionRing s_ab =
          restrict_ring(cox, {IntVec{Integer(a), Integer(b)}});
      json pieces = json::array();
      for (long n = 1; n <= 5; ++n) {
        pieces.push_back(to_int64(canonical_piece_dimension(s_ab, IntVec{Integer(n)})));
      }
      json e;
      e["a"] = a;
      e["b"] = b;
      e["pieces_n_1_to_5"] = pieces;
      segre.push_back(e);
    }
    section["segre_canonical_pieces"] = segre;
    report["p1xp1_cox"] = section;
  }

  return finish_json(std::move(report), {});
}

}  // namespace

JobResult run_job(const CliRequest& request) {
  try {
    if (request.format != "json" && request.format != "csv")
      throw SchemaError("--format must be json or csv");
    if (request.subcommand == "examples") {
      if (request.format == "csv") throw SchemaError("examples output is JSON only");
      return run_examples(request);
    }

    json doc;
    try {
      doc = json::parse(request.input_text);
    } catch (const json::parse_error& e) {
      throw SchemaError(std::string("input is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("input document must be a JSON object");

    if (request.format == "csv" && request.subcommand != "sections" &&
        request.subcommand != "canonical" && request.subcommand != "duality" &&
        request.subcommand != "restrict")
      throw SchemaError("csv output is only available for table subcommands");

    if (request.subcommand == "classgroup") return run_classgroup(request, doc);
    if (request.subcommand == "sections") return run_sections(request, doc);
    if (request.subcommand == "canonical") return run_canonical(request, doc);
    if (request.subcommand == "freeness") return run_freeness(request, doc);
    if (request.subcommand == "restrict") return run_restrict(request, doc);
    if (request.subcommand == "duality") return run_duality(request, doc);
    if (request.subcommand == "probe") return run_probe(request, doc);
    throw SchemaError("unknown subcommand \"" + request.subcommand + "\"");
  } catch (const SchemaError& e) {
    return JobResult{2, "", e.what()};
  } catch (const DependentClasses& e) {
    return JobResult{3, "", e.what()};
  } catch (const InvalidFan& e) {
    return JobResult{3, "", e.what()};
  } catch (const InvalidPointConfig& e) {
    return JobResult{3, "", e.what()};
  } catch (const UnsupportedOperation& e) {
    return JobResult{3, "", e.what()};
  } catch (const UnboundedPolyhedron& e) {
    return JobResult{3, "", e.what()};
  } catch (const DimensionMismatch& e) {
    return JobResult{3, "", e.what()};
  }
}

}  // namespace coxcanon
