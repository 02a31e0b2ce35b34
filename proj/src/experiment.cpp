#include "korovkin/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "korovkin/error.hpp"
#include "korovkin/numeric.hpp"
#include "korovkin/operators.hpp"
#include "korovkin/rate.hpp"
#include "korovkin/rates.hpp"
#include "korovkin/summability.hpp"
#include "korovkin/test_system.hpp"

namespace korovkin {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::invalid_argument, what); }

/// Reads an object member by member and rejects whatever was not read.
class Fields {
 public:
  Fields(const json& obj, std::string where) : obj_(obj), where_(std::move(where)) {
    if (!obj_.is_object()) bad(where_ + " must be an object");
  }

  bool has(const std::string& key) const { return obj_.contains(key); }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    if (!obj_.contains(key)) bad(where_ + "." + key + " is required");
    return obj_.at(key);
  }

  std::string str(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_string()) bad(where_ + "." + key + " must be a string");
    return v.get<std::string>();
  }
  std::string str(const std::string& key, const std::string& def) { return has(key) ? str(key) : (seen_.insert(key), def); }

  double num(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number()) bad(where_ + "." + key + " must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) bad(where_ + "." + key + " must be finite");
    return d;
  }
  double num(const std::string& key, double def) { return has(key) ? num(key) : (seen_.insert(key), def); }

  std::uint64_t uint(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
      bad(where_ + "." + key + " must be a non-negative integer");
    return v.get<std::uint64_t>();
  }
  std::uint64_t uint(const std::string& key, std::uint64_t def) {
    return has(key) ? uint(key) : (seen_.insert(key), def);
  }

  bool boolean(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_boolean()) bad(where_ + "." + key + " must be a boolean");
    return v.get<bool>();
  }

  std::vector<double> numbers(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_array()) bad(where_ + "." + key + " must be an array");
    std::vector<double> out;
    for (const auto& e : v) {
      if (!e.is_number()) bad(where_ + "." + key + " must hold numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }

  void finish() const {
    for (const auto& [k, v] : obj_.items())
      if (!seen_.count(k)) bad("unknown field " + where_ + "." + k);
  }

 private:
  const json& obj_;
  std::string where_;
  std::set<std::string> seen_;
};

const std::set<std::string> kExperiments = {"mellin-rates", "kantorovich-rates", "density", "limit",
                                            "limsup",       "check-system",      "rho-star"};

GridSpec parse_grid(const json& j) {
  Fields f(j, "grid");
  GridSpec g;
  const std::string region = f.str("region", "box");
  const std::size_t dim = f.uint("dimension", region == "simplex" ? 2 : 1);
  if (region == "box") {
    if (dim < 1 || dim > 3) bad("grid.dimension must be 1, 2 or 3");
    std::vector<Interval> axes(dim, Interval{0.0, 1.0});
    if (f.has("bounds")) {
      const json& b = f.raw("bounds");
      if (!b.is_array() || b.size() != dim) bad("grid.bounds needs one [lo, hi] per dimension");
      for (std::size_t d = 0; d < dim; ++d) {
        if (!b[d].is_array() || b[d].size() != 2 || !b[d][0].is_number() || !b[d][1].is_number())
          bad("grid.bounds entries must be [lo, hi]");
        axes[d] = Interval{b[d][0].get<double>(), b[d][1].get<double>()};
      }
    }
    g.region = Region::box(axes);
  } else if (region == "simplex") {
    if (dim != 2) bad("the simplex region is two-dimensional");
    g.region = Region::simplex2();
  } else {
    bad("grid.region must be box or simplex");
  }
  g.resolution = f.uint("resolution", 101);
  if (g.resolution < kMinResolution) bad("grid.resolution must be >= 4");
  const std::string layout = f.str("layout", "midpoint");
  if (layout == "midpoint") g.layout = NodeLayout::Midpoint;
  else if (layout == "lattice") g.layout = NodeLayout::Lattice;
  else bad("grid.layout must be midpoint or lattice");
  f.finish();
  return g;
}

json grid_json(const GridSpec& g) {
  json j;
  j["region"] = g.region.kind == RegionKind::Box ? "box" : "simplex";
  j["dimension"] = g.region.dimension();
  if (g.region.kind == RegionKind::Box) {
    j["bounds"] = json::array();
    for (const auto& a : g.region.axes) j["bounds"].push_back({a.lo, a.hi});
  }
  j["resolution"] = g.resolution;
  j["layout"] = g.layout == NodeLayout::Midpoint ? "midpoint" : "lattice";
  return j;
}

PhiFunction parse_phi(const json& j) {
  Fields f(j, "phi");
  const std::string family = f.str("family", "linear");
  PhiFunction phi;
  if (family == "linear") {
    phi = PhiFunction::linear();
  } else if (family == "power") {
    const double p = f.num("p");
    if (!(p >= 1.0)) bad("phi.p must be >= 1");
    phi = PhiFunction::power(p);
  } else if (family == "expm1") {
    phi = PhiFunction::expm1();
  } else {
    bad("phi.family must be linear, power or expm1");
  }
  f.finish();
  return phi;
}

json phi_json(const PhiFunction& phi) {
  switch (phi.family) {
    case PhiFamily::Linear: return {{"family", "linear"}};
    case PhiFamily::Power: return {{"family", "power"}, {"p", phi.p}};
    case PhiFamily::ExpM1: return {{"family", "expm1"}};
  }
  return {};
}

// ------------------------------------------------------------- net specs

Net build_net(const std::string& kind, double value, std::size_t horizon) {
  if (kind == "alternating")
    return Net::single(horizon, [](std::size_t n) { return n % 2 == 0 ? 1.0 : 0.0; });
  if (kind == "sign") return Net::single(horizon, [](std::size_t n) { return n % 2 == 0 ? 1.0 : -1.0; });
  if (kind == "squares")
    return Net::single(horizon, [](std::size_t n) { return is_perfect_square(n) ? 1.0 : 0.0; });
  if (kind == "constant") return Net::single(horizon, [value](std::size_t) { return value; });
  if (kind == "inverse")
    return Net::single(horizon, [](std::size_t n) { return 1.0 / static_cast<double>(n); });
  bad("params.net must be alternating, sign, squares, constant or inverse");
}

// ----------------------------------------------------------- expectations

struct Expectations {
  Fields f;
  std::vector<std::string> failures;

  explicit Expectations(const json& j) : f(j, "expect") {}

  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

RateKind parse_kind(const std::string& s) {
  if (s == "little-o") return RateKind::LittleO;
  if (s == "big-O") return RateKind::BigO;
  if (s == "neither") return RateKind::Neither;
  bad("classification must be little-o, big-O or neither");
}

void finish_expectations(Expectations& ex, ReportData& data) {
  ex.f.finish();
  data.pass = ex.failures.empty();
  data.summary["failed_expectations"] = ex.failures;
}

/// Common expectations of the rate experiments.
void expect_rates(Expectations& ex, const RateReport& rep, ReportData& data) {
  std::vector<std::pair<std::string, const RateClass*>> all;
  for (std::size_t r = 0; r < rep.test_names.size(); ++r) all.emplace_back(rep.test_names[r], &rep.test_classes[r]);
  for (const auto& p : rep.probes) all.emplace_back(p.name, &p.classification);
  for (const auto& [name, cls] : all) {
    data.classifications[name] = to_string(cls->kind);
    data.limsup_estimates[name] = cls->limsup_estimate;
  }

  if (ex.f.has("classes")) {
    const json& c = ex.f.raw("classes");
    if (!c.is_object()) bad("expect.classes must be an object");
    for (const auto& [name, v] : c.items()) {
      if (!v.is_string()) bad("expect.classes values must be strings");
      const auto it = std::find_if(all.begin(), all.end(), [&](const auto& e) { return e.first == name; });
      if (it == all.end()) bad("expect.classes names an unknown net: " + name);
      ex.check(it->second->kind == parse_kind(v.get<std::string>()), "class of " + name);
    }
  }
  if (ex.f.has("all_big_o") && ex.f.boolean("all_big_o")) {
    for (const auto& [name, cls] : all) ex.check(cls->satisfies_big_o(), name + " is big-O");
  }
  if (ex.f.has("limsup_range")) {
    const auto range = ex.f.numbers("limsup_range");
    if (range.size() != 2) bad("expect.limsup_range must be [lo, hi]");
    for (const auto& [name, cls] : all) {
      if (cls->kind == RateKind::LittleO) continue;
      ex.check(cls->limsup_estimate >= range[0] && cls->limsup_estimate <= range[1],
               name + " limsup inside range");
    }
  }
  if (ex.f.has("implication") && ex.f.boolean("implication"))
    ex.check(rep.implication_little_o && rep.implication_big_o, "rate implication");
}

json rate_summary(const RateReport& rep, const TestSystem& sys) {
  json s;
  s["gamma"] = rep.gamma;
  s["tau"] = json_number(rep.tau);
  json probes = json::array();
  for (const auto& p : rep.probes)
    probes.push_back({{"name", p.name}, {"tau", p.tau}, {"M", p.m}});
  s["probes"] = probes;
  s["implication_little_o"] = rep.implication_little_o;
  s["implication_big_o"] = rep.implication_big_o;
  s["test_system"] = {{"name", sys.name},   {"m", sys.m},
                      {"C1", sys.c1},       {"C1_delta_min", sys.c1_delta_min},
                      {"N_bound", sys.n_bound}};
  return s;
}

// ------------------------------------------------------------ experiments

OrliczModular make_rho(const ExperimentConfig& c, const GridPtr& grid) {
  c.phi.validate();
  return OrliczModular(c.phi, grid);
}

void positivity_summary(const OperatorFamily& family, const GridPtr& grid, const ExperimentConfig& c,
                        ReportData& data) {
  const std::size_t w_max = std::min<std::size_t>(c.horizon, 50);
  const PositivityReport pos = check_positivity_set(family, grid, w_max, 10, c.seed);
  data.summary["positivity"] = {{"w_max", w_max},
                                {"positive_count", pos.positive.size()},
                                {"complement_density", pos.complement_density},
                                {"complement_small", pos.complement_small}};
}

void run_mellin_rates(const ExperimentConfig& c, ReportData& data, Expectations& ex) {
  Fields p(c.params, "params");
  const double delta_min = p.num("delta_min", 0.2);
  const std::size_t quad = p.uint("quadrature_points", 24);
  p.finish();
  if (c.grid.region.kind != RegionKind::Box) bad("mellin-rates needs a box grid on [0,1]^N");
  const GridPtr grid = build_grid(c.grid.region, c.grid.resolution, c.grid.layout);
  const std::size_t dim = grid->dimension();

  MellinParams mp;
  mp.dimension = dim;
  mp.w_range = c.horizon;
  mp.quadrature_points = quad;
  const OperatorFamily family = mellin_family(mp);
  const TestSystem sys = build_test_system_euclidean(PhiMap::Identity, dim, grid, delta_min);
  const OrliczModular rho = make_rho(c, grid);
  const ConvergenceMode mode = build_mode(c.mode, c.horizon);

  const double nd = static_cast<double>(dim);
  auto mean = [nd](std::span<const double> t) {
    double s = 0.0;
    for (double x : t) s += x;
    return s / nd;
  };
  // Lipschitz constants w.r.t. the Euclidean metric.
  std::vector<LipschitzProbe> probes{
      {"mean", FunctionSample::from_field(grid, mean), 1.0 / std::sqrt(nd)},
      {"affine", FunctionSample::from_field(grid, [mean](std::span<const double> t) { return 0.5 + 0.5 * mean(t); }),
       0.5 / std::sqrt(nd)},
      {"kink", FunctionSample::from_field(grid, [](std::span<const double> t) { return std::abs(t[0] - 0.3); }), 1.0}};
  const std::vector<Net> xi(sys.count(), power_xi(c.horizon, c.xi_p));
  const RateReport rep = rates_pipeline_lipschitz(family, sys, rho, xi, c.gamma, probes, mode);

  data.summary = rate_summary(rep, sys);
  positivity_summary(family, grid, c, data);
  data.evidence = rate_evidence_table(rep);
  expect_rates(ex, rep, data);
}

void run_kantorovich_rates(const ExperimentConfig& c, ReportData& data, Expectations& ex) {
  Fields p(c.params, "params");
  const double delta_min = p.num("delta_min", 0.2);
  const std::string gate = p.str("gate", "squares");
  p.finish();
  if (c.grid.region.kind != RegionKind::Simplex2) bad("kantorovich-rates needs the simplex grid");
  if (c.horizon > kKantorovichMaxN) bad("kantorovich-rates horizon must be <= 400");

  KantorovichParams kp;
  kp.n_range = c.horizon;
  if (gate == "none") {
    kp.gate = [](std::size_t) { return false; };
    kp.gate_name = "none";
  } else if (gate != "squares") {
    bad("params.gate must be squares or none");
  }
  kp.validate();
  const GridPtr grid = build_grid(c.grid.region, c.grid.resolution, c.grid.layout);
  const OperatorFamily family = gate_family(kantorovich_family(c.horizon), kp.gate, kp.gate_name);
  const TestSystem sys = build_test_system_euclidean(PhiMap::Identity, 2, grid, delta_min);
  const OrliczModular rho = make_rho(c, grid);
  const ConvergenceMode mode = build_mode(c.mode, c.horizon);

  std::vector<LipschitzProbe> probes{
      {"product", FunctionSample::from_field(grid, [](std::span<const double> t) { return t[0] * t[1]; }), 1.0},
      {"mean", FunctionSample::from_field(grid, [](std::span<const double> t) { return 0.5 * (t[0] + t[1]); }),
       std::sqrt(0.5)},
      {"kink", FunctionSample::from_field(grid, [](std::span<const double> t) { return std::abs(t[0] - 0.3); }), 1.0}};
  const std::vector<Net> xi(sys.count(), power_xi(c.horizon, c.xi_p));
  const RateReport rep = rates_pipeline_lipschitz(family, sys, rho, xi, c.gamma, probes, mode);

  data.summary = rate_summary(rep, sys);
  positivity_summary(family, grid, c, data);
  data.evidence = rate_evidence_table(rep);
  expect_rates(ex, rep, data);
}

SummabilityMatrix parse_matrix(const std::string& s) {
  if (s == "cesaro") return SummabilityMatrix::cesaro();
  if (s == "degenerate") return SummabilityMatrix::degenerate();
  if (s == "identity") return SummabilityMatrix::identity();
  if (s == "sqrt-band") return SummabilityMatrix::sqrt_band();
  bad("matrix must be cesaro, degenerate, identity or sqrt-band");
}

ShapeFunction parse_shape(const std::string& s) {
  if (s == "triangular") return ShapeFunction::triangular();
  if (s == "full") return ShapeFunction::full();
  bad("shape must be triangular or full");
}

PairPredicate parse_set(const std::string& s) {
  if (s == "squares") return [](std::size_t, std::size_t j) { return is_perfect_square(j); };
  if (s == "even") return [](std::size_t, std::size_t j) { return j % 2 == 0; };
  if (s == "all") return [](std::size_t, std::size_t) { return true; };
  bad("set must be squares, even or all");
}

void run_density(const ExperimentConfig& c, ReportData& data, Expectations& ex) {
  Fields p(c.params, "params");
  const std::string matrix_name = p.str("matrix", "cesaro");
  const std::string shape_name = p.str("shape", "triangular");
  const std::string set_name = p.str("set", "squares");
  const std::size_t i_max = p.uint("i_max", c.horizon);
  p.finish();
  if (i_max < kMinAxiomHorizon) bad("params.i_max must be >= 32");
  const SummabilityMatrix a = parse_matrix(matrix_name);
  const ShapeFunction shape = parse_shape(shape_name);

  const AxiomReport ax = check_summability_axioms(a, shape, i_max);
  const DensityReport d = triangular_density(parse_set(set_name), a, shape, i_max);

  data.summary = {{"matrix", a.name},
                  {"shape", shape.name},
                  {"set", set_name},
                  {"i_max", i_max},
                  {"estimate", d.estimate},
                  {"oscillation", d.oscillation},
                  {"converged", d.converged},
                  {"axioms",
                   {{"A1", ax.a1},
                    {"A1_max_row_sum", ax.a1_max_row_sum},
                    {"A2", ax.a2},
                    {"A2_estimate", ax.a2_estimate},
                    {"A3", ax.a3}}},
                  {"trusted", ax.all()}};
  if (!ax.a2) data.summary["note"] = "(A2) fails";
  data.limsup_estimates["density"] = d.estimate;
  data.evidence.header = {"i", "partial_sum"};
  for (const auto& [i, s] : d.partial_sums) data.evidence.rows.push_back({std::to_string(i), format_double(s)});

  if (ex.f.has("estimate_max")) ex.check(d.estimate <= ex.f.num("estimate_max"), "estimate <= estimate_max");
  if (ex.f.has("estimate_min")) ex.check(d.estimate >= ex.f.num("estimate_min"), "estimate >= estimate_min");
  if (ex.f.has("axioms_hold")) ex.check(ax.all() == ex.f.boolean("axioms_hold"), "axioms_hold");
}

void run_limit(const ExperimentConfig& c, ReportData& data, Expectations& ex) {
  Fields p(c.params, "params");
  const std::string net_name = p.str("net");
  const double value = p.num("value", 0.0);
  const double candidate = p.num("candidate");
  const std::vector<double> eps = p.has("eps") ? p.numbers("eps") : std::vector<double>{0.1, 0.01};
  p.finish();
  const Net x = build_net(net_name, value, c.horizon);
  const ConvergenceMode mode = build_mode(c.mode, c.horizon);
  const LimitReport rep = mode_limit(x, mode, candidate, eps);

  data.summary = {{"mode", mode.name()}, {"net", net_name}, {"candidate", candidate}, {"converges", rep.converges}};
  data.classifications["limit"] = rep.converges ? "converges" : "does-not-converge";
  data.evidence.header = {"eps", "statistic", "threshold", "passed"};
  for (const auto& chk : rep.checks)
    data.evidence.rows.push_back({format_double(chk.eps), format_double(chk.statistic),
                                  format_double(chk.threshold), chk.passed ? "true" : "false"});
  if (ex.f.has("converges")) ex.check(rep.converges == ex.f.boolean("converges"), "converges");
}

void run_limsup(const ExperimentConfig& c, ReportData& data, Expectations& ex) {
  Fields p(c.params, "params");
  const std::string net_name = p.str("net");
  const double value = p.num("value", 0.0);
  p.finish();
  const Net x = build_net(net_name, value, c.horizon);
  const ConvergenceMode mode = build_mode(c.mode, c.horizon);
  const LimsupLiminf ll = filter_limsup_liminf(x, mode);

  data.summary = {{"mode", mode.name()}, {"net", net_name}, {"limsup", json_number(ll.limsup)},
                  {"liminf", json_number(ll.liminf)}};
  data.limsup_estimates["limsup"] = ll.limsup;
  data.limsup_estimates["liminf"] = ll.liminf;
  data.evidence.header = {"w", "value"};
  for (std::size_t w = 1; w <= x.horizon(); ++w)
    data.evidence.rows.push_back({std::to_string(w), format_double(x(w))});

  const double abs_tol = ex.f.num("abs_tol", 1e-6);
  if (ex.f.has("limsup")) ex.check(std::abs(ll.limsup - ex.f.num("limsup")) <= abs_tol, "limsup");
  if (ex.f.has("liminf")) ex.check(std::abs(ll.liminf - ex.f.num("liminf")) <= abs_tol, "liminf");
}

void run_check_system(const ExperimentConfig& c, ReportData& data, Expectations& ex) {
  Fields p(c.params, "params");
  const std::string system = p.str("system", "euclid");
  const GridPtr grid = build_grid(c.grid.region, c.grid.resolution, c.grid.layout);
  const double delta_min = p.num("delta_min", std::max(0.2, grid->h_min()));
  p.finish();

  TestSystem sys;
  if (system == "euclid" || system == "euclid-exp") {
    sys = build_test_system_euclidean(system == "euclid" ? PhiMap::Identity : PhiMap::Exp, grid->dimension(),
                                      grid, delta_min);
  } else if (system == "trig") {
    if (grid->region().kind != RegionKind::Box || grid->dimension() != 1)
      bad("the trig system needs a 1-D box grid");
    const auto ax = grid->region().axes.front();
    sys = build_test_system_trig(ax.lo, ax.hi, grid, delta_min);
  } else {
    bad("params.system must be euclid, euclid-exp or trig");
  }
  const PAxiomReport rep = verify_P_axioms(sys, *grid, delta_min);

  data.summary = {{"system", sys.name},
                  {"m", sys.m},
                  {"P1_ok", rep.p1_ok},
                  {"max_P_diagonal", rep.max_p_diagonal},
                  {"C1_est", rep.c1_est},
                  {"delta_min", rep.delta_min},
                  {"N_bound", sys.n_bound},
                  {"h_min", grid->h_min()}};
  if (rep.c0_est) data.summary["C0_est"] = *rep.c0_est;
  if (sys.c0) data.summary["C0"] = *sys.c0;

  data.evidence.header = {"node"};
  for (std::size_t d = 0; d < grid->dimension(); ++d) data.evidence.header.push_back("x" + std::to_string(d + 1));
  for (std::size_t r = 0; r <= sys.m; ++r) data.evidence.header.push_back("a" + std::to_string(r));
  data.evidence.header.push_back("p_diag");
  for (std::size_t k = 0; k < grid->size(); ++k) {
    std::vector<std::string> row{std::to_string(k)};
    for (double x : grid->node(k)) row.push_back(format_double(x));
    for (const auto& a : sys.a) row.push_back(format_double(a[k]));
    row.push_back(format_double(sys.p_value(grid->node(k), grid->node(k))));
    data.evidence.rows.push_back(std::move(row));
  }

  if (ex.f.has("p1_ok")) ex.check(rep.p1_ok == ex.f.boolean("p1_ok"), "p1_ok");
  if (ex.f.has("c1_min")) ex.check(rep.c1_est >= ex.f.num("c1_min"), "C1_est >= c1_min");
  if (ex.f.has("c0_min")) ex.check(rep.c0_est && *rep.c0_est >= ex.f.num("c0_min"), "C0_est >= c0_min");
}

void run_rho_star(const ExperimentConfig& c, ReportData& data, Expectations& ex) {
  Fields p(c.params, "params");
  const std::string family_name = p.str("family", "mellin");
  const std::vector<double> taus = p.has("taus") ? p.numbers("taus") : std::vector<double>{1.0};
  p.finish();
  for (double t : taus)
    if (!(t > 0.0)) bad("params.taus must be positive");
  const GridPtr grid = build_grid(c.grid.region, c.grid.resolution, c.grid.layout);

  OperatorFamily family;
  if (family_name == "mellin") {
    MellinParams mp;
    mp.dimension = grid->dimension();
    mp.w_range = c.horizon;
    family = mellin_family(mp);
  } else if (family_name == "kantorovich-gated") {
    if (c.horizon > kKantorovichMaxN) bad("kantorovich horizon must be <= 400");
    KantorovichParams kp;
    kp.n_range = c.horizon;
    kp.validate();
    family = gate_family(kantorovich_family(c.horizon), kp.gate, kp.gate_name);
  } else if (family_name == "identity") {
    family = identity_family();
  } else if (family_name == "zero") {
    family = zero_family();
  } else {
    bad("params.family must be mellin, kantorovich-gated, identity or zero");
  }
  const OrliczModular rho = make_rho(c, grid);
  const ConvergenceMode mode = build_mode(c.mode, c.horizon);

  std::vector<FunctionSample> probes{FunctionSample::constant(grid, 1.0),
                                     FunctionSample::from_field(grid, [](std::span<const double> t) {
                                       double s = 0.0;
                                       for (double x : t) s += x;
                                       return 1.0 + s;
                                     })};
  const RhoStarReport rep = check_rho_star(family, rho, probes, mode, taus, c.horizon);

  data.summary = {{"family", family.name}, {"mode", mode.name()}, {"E_est", json_number(rep.e_est)},
                  {"holds", rep.holds}};
  data.limsup_estimates["E_est"] = rep.e_est;
  data.evidence.header = {"w"};
  for (std::size_t k = 0; k < rep.ratios.size(); ++k) data.evidence.header.push_back("ratio_" + std::to_string(k));
  for (std::size_t w = 1; w <= c.horizon; ++w) {
    std::vector<std::string> row{std::to_string(w)};
    for (const auto& r : rep.ratios) row.push_back(format_double(r(w)));
    data.evidence.rows.push_back(std::move(row));
  }
  if (ex.f.has("holds")) ex.check(rep.holds == ex.f.boolean("holds"), "holds");
  if (ex.f.has("e_est_max")) ex.check(rep.e_est <= ex.f.num("e_est_max"), "E_est <= e_est_max");
}

}  // namespace

json ExperimentConfig::to_json() const {
  return {{"experiment", experiment}, {"mode", mode},     {"horizon", horizon},
          {"grid", grid_json(grid)},  {"phi", phi_json(phi)}, {"gamma", gamma},
          {"xi", {{"family", "power"}, {"p", xi_p}}},     {"seed", seed},
          {"output_dir", output_dir.generic_string()},    {"params", params},
          {"expect", expect}};
}

ExperimentConfig parse_config(const json& doc) {
  Fields f(doc, "config");
  ExperimentConfig c;
  c.experiment = f.str("experiment");
  if (!kExperiments.count(c.experiment)) bad("unknown experiment " + c.experiment);
  if (f.has("mode")) {
    c.mode = f.raw("mode");
    if (!c.mode.is_object()) bad("config.mode must be an object");
  }
  c.horizon = f.uint("horizon", 200);
  if (c.horizon < kMinConfigHorizon) bad("config.horizon must be >= 32");
  c.grid = parse_grid(f.has("grid") ? f.raw("grid") : json::object());
  c.phi = parse_phi(f.has("phi") ? f.raw("phi") : json::object());
  c.gamma = f.num("gamma", 1.0);
  if (!(c.gamma > 0.0)) bad("config.gamma must be positive");
  if (f.has("xi")) {
    Fields x(f.raw("xi"), "xi");
    if (x.str("family") != "power") bad("xi.family must be power");
    c.xi_p = x.num("p");
    x.finish();
  }
  if (!(c.xi_p > 0.0)) bad("xi.p must be positive");
  c.seed = f.uint("seed", 1);
  c.output_dir = f.str("output_dir");
  if (c.output_dir.empty()) bad("config.output_dir must not be empty");
  if (f.has("params")) c.params = f.raw("params");
  if (f.has("expect")) c.expect = f.raw("expect");
  if (!c.params.is_object()) bad("config.params must be an object");
  if (!c.expect.is_object()) bad("config.expect must be an object");
  f.finish();
  // Validate the mode spec now so config errors surface before any work.
  (void)build_mode(c.mode, std::max(c.horizon, kMinConfigHorizon));
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot read " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    bad(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(doc);
}

ConvergenceMode build_mode(const json& spec, std::size_t horizon) {
  Fields f(spec, "mode");
  const std::string variant = f.str("variant");
  ConvergenceMode mode = ConvergenceMode::frechet();
  if (variant == "ordinary") {
    mode = ConvergenceMode::ordinary();
  } else if (variant == "frechet") {
    mode = ConvergenceMode::frechet();
  } else if (variant == "density-filter") {
    const std::string set = f.str("set", "non-squares");
    if (set == "non-squares") mode = ConvergenceMode::non_squares();
    else if (set == "odd") mode = ConvergenceMode::density_filter("odd", [](std::size_t n) { return n % 2 == 1; });
    else bad("mode.set must be non-squares or odd");
  } else if (variant == "psi-a") {
    const SummabilityMatrix a = parse_matrix(f.str("matrix", "cesaro"));
    const ShapeFunction shape = parse_shape(f.str("shape", "triangular"));
    mode = ConvergenceMode::psi_a_statistical(a, shape, horizon);
  } else if (variant == "almost") {
    const std::size_t m_max = f.uint("m_max");
    if (m_max + 1 > horizon) bad("mode.m_max leaves no block length at this horizon");
    mode = ConvergenceMode::almost(m_max);
  } else {
    bad("mode.variant must be ordinary, frechet, density-filter, psi-a or almost");
  }
  f.finish();
  return mode;
}

ReportData run_experiment(const ExperimentConfig& c) {
  ReportData data;
  data.config = c.to_json();
  Expectations ex(c.expect);
  if (c.experiment == "mellin-rates") run_mellin_rates(c, data, ex);
  else if (c.experiment == "kantorovich-rates") run_kantorovich_rates(c, data, ex);
  else if (c.experiment == "density") run_density(c, data, ex);
  else if (c.experiment == "limit") run_limit(c, data, ex);
  else if (c.experiment == "limsup") run_limsup(c, data, ex);
  else if (c.experiment == "check-system") run_check_system(c, data, ex);
  else if (c.experiment == "rho-star") run_rho_star(c, data, ex);
  else bad("unknown experiment " + c.experiment);
  finish_expectations(ex, data);
  return data;
}

int run(const ExperimentConfig& config) {
  ReportData data;
  try {
    data = run_experiment(config);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::io ? kExitIo : kExitInvalidConfig;
  }
  try {
    emit_report(data, config.output_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return data.pass ? kExitOk : kExitExpectation;
}

}  // namespace korovkin
