#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bifurcato/critical_loci.hpp"
#include "bifurcato/dynamics.hpp"
#include "bifurcato/equilibria.hpp"
#include "bifurcato/error.hpp"
#include "bifurcato/focus.hpp"
#include "bifurcato/geometry.hpp"
#include "bifurcato/local_analysis.hpp"
#include "bifurcato/rng.hpp"
#include "bifurcato/unfolding.hpp"

namespace bifurcato::cli {

json params_json(const DimensionlessParams& p) {
  return {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"m", p.m}, {"n", p.n}};
}

json dimensional_json(const DimensionalParams& p) {
  return {{"Lambda", p.Lambda}, {"d", p.d},         {"mu", p.mu},      {"delta", p.delta},
          {"kappa", p.kappa},   {"beta", p.beta}, {"gamma", p.gamma}};
}

bool opt_is_null(const json& opt, const std::string& key) { return !opt.contains(key) || opt.at(key).is_null(); }

double opt_real(const json& opt, const std::string& key) {
  const json& v = opt.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw std::invalid_argument("option " + key + " is not a number");
}

std::size_t opt_positive(const json& opt, const std::string& key) {
  const double v = opt_real(opt, key);
  if (!(v >= 1)) throw std::invalid_argument("option " + key + " must be a positive integer");
  return static_cast<std::size_t>(v);
}

namespace {

std::size_t opt_count(const json& opt, const std::string& key) {
  const double v = opt_real(opt, key);
  if (!(v >= 0)) throw std::invalid_argument("option " + key + " must be a non-negative integer");
  return static_cast<std::size_t>(v);
}

double opt_tol(const json& opt, const std::string& key) {
  const double v = opt_real(opt, key);
  if (!(v > 0)) throw std::invalid_argument("option " + key + " must be > 0");
  return v;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

json error_json(const Error& e) { return {{"error", e.name()}, {"message", e.what()}}; }

json equilibrium_json(const Equilibrium& e, const DimensionlessParams& p, double classify_tol) {
  json j = {{"x", e.x},
            {"y", e.y},
            {"multiplicity", e.multiplicity},
            {"kind", e.kind == EquilibriumKind::DiseaseFree ? "disease_free" : "endemic"}};
  const auto c = classify(e, p, classify_tol);
  j["tag"] = tag_name(c.tag);
  j["trace"] = c.trace;
  j["det"] = c.det;
  return j;
}

json curve_json(const CurveSample& c) {
  json pts = json::array();
  for (const auto& q : c.points) {
    if (c.dim == 2)
      pts.push_back({q[0], q[1]});
    else
      pts.push_back({q[0], q[1], q[2]});
  }
  return {{"label", c.label},
          {"dim", c.dim},
          {"parameterization", c.parameterization},
          {"points", pts},
          {"skipped", c.skipped},
          {"truncated_asymptotic", c.truncated_asymptotic}};
}

CsvTable curves_csv(const std::vector<CurveSample>& curves, std::vector<std::string> header) {
  CsvTable t;
  t.header = std::move(header);
  for (const auto& c : curves)
    for (const auto& q : c.points) {
      std::vector<std::string> row{c.label, csv_field(q[0]), csv_field(q[1])};
      if (t.header.size() > 3) row.push_back(csv_field(q[2]));
      t.rows.push_back(std::move(row));
    }
  return t;
}

json xi_json(const NormalFormCoeffs& xi) {
  json j = {{"xi1", xi.xi1}, {"xi2", xi.xi2}, {"xi3", xi.xi3}, {"xi4", xi.xi4},
            {"zeta", xi.zeta}, {"eta", xi.eta}};
  if (xi.has_higher) {
    j["xi5"] = xi.xi5;
    j["xi6"] = xi.xi6;
    j["xi7"] = xi.xi7;
    j["xi8"] = xi.xi8;
  }
  return j;
}

// ---- equilibria

Output cmd_equilibria(const Context& ctx) {
  const double tol = opt_tol(ctx.opt, "double_root_tol");
  const double ctol = opt_tol(ctx.opt, "classify_tol");
  const auto& p = validate(ctx.p);
  const auto rc = reduce(p);
  json eqs = json::array();
  for (const auto& e : solve_equilibria(p, tol)) eqs.push_back(equilibrium_json(e, p, ctol));
  json r = {{"params", params_json(p)},
            {"discriminant", discriminant(rc)},
            {"discriminant_scale", discriminant_scale(rc)},
            {"discriminant_sign", discriminant_sign(rc, tol)},
            {"equilibria", eqs},
            {"stable_cycle_predicate", exists_stable_cycle_predicate(p)}};
  try {
    r["dulac_no_cycles"] = dulac_no_cycles(p);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoPositiveEquilibria) throw;
    r["dulac_no_cycles"] = true;
  }
  return {r, std::nullopt};
}

// ---- critical

Output cmd_critical(const Context& ctx) {
  const auto& p = ctx.p;
  json r = {{"params", params_json(p)}, {"x_star", x_star(p.a, p.m)}};
  try {
    const auto sn = sn_critical(p.a, p.b, p.m);
    r["sn_critical"] = {{"x_star", sn.x_star},
                        {"n_star", sn.n_star},
                        {"c_star", sn.c_star},
                        {"condition", sn.condition},
                        {"n_star_notation", n_star_notation(p.a, p.b, p.m)}};
  } catch (const Error& e) {
    r["sn_critical"] = error_json(e);
  }
  try {
    const auto t = bt3_critical(p.a, p.m);
    r["bt3_critical"] = {{"x_star", t.x_star}, {"vartheta", t.vartheta}, {"c_star", t.c_star},
                         {"n_star", t.n_star}, {"b_star", t.b_star},     {"chi_rational", chi_rational(p.a, p.m)}};
  } catch (const Error& e) {
    r["bt3_critical"] = error_json(e);
  }
  try {
    const auto br = b_roots(p.a, p.c, p.m, p.n);
    r["b_roots"] = {{"b1", br.b1}, {"b2", br.b2}};
  } catch (const Error& e) {
    r["b_roots"] = error_json(e);
  }
  if (ctx.dim) {
    const auto g = gamma_thresholds(*ctx.dim);
    r["gamma_thresholds"] = {{"gamma1", g.gamma1},
                             {"gamma2", g.gamma2},
                             {"case", eradication_case_name(eradication_case(g))},
                             {"gamma", ctx.dim->gamma},
                             {"eradication_predicted", eradication_predicted(ctx.dim->gamma, g)}};
  }
  return {r, std::nullopt};
}

// ---- normal-form

Output cmd_normal_form(const Context& ctx) {
  DimensionlessParams p = ctx.p;
  const auto at = ctx.opt.at("at").get<std::string>();
  if (at == "sn") {
    const auto sn = sn_critical(p.a, p.b, p.m);
    p.c = sn.c_star;
    p.n = sn.n_star;
  } else if (at != "given") {
    throw std::invalid_argument("option at must be 'given' or 'sn'");
  }
  validate(p);
  const double xs = opt_is_null(ctx.opt, "x_star") ? x_star(p.a, p.m) : opt_real(ctx.opt, "x_star");
  const bool higher = ctx.opt.at("higher").get<bool>();
  const auto xi = xi_coefficients(p, xs, higher);
  const auto xj = xi_coefficients_jet(p, xs);
  json r = {{"params", params_json(p)},
            {"x_star", xs},
            {"xi", xi_json(xi)},
            {"xi_jet", xi_json(xj)},
            {"zeta_notation", zeta_notation(p, xs)},
            {"eta_notation", eta_notation(p, xs)},
            {"regime", std::abs(xi.eta) < opt_tol(ctx.opt, "eta_tol") * std::max(1.0, std::abs(xi.zeta))
                           ? "eta_zero"
                           : "codim2"}};
  try {
    r["chi"] = chi(p, xs, opt_tol(ctx.opt, "eta_tol"));
    r["chi_chain"] = chi_chain(xi_coefficients(p, xs, true), p.n);
  } catch (const Error& e) {
    r["chi"] = error_json(e);
  }
  return {r, std::nullopt};
}

// ---- unfold-bt2

json jet_json(const BT2Jet& j) {
  return {{"r", {j.r1, j.r2, j.r3, j.r4, j.r5}},
          {"s", {j.s1, j.s2, j.s3, j.s4, j.s5}},
          {"upsilon", j.upsilon},
          {"zeta", j.zeta},
          {"eta", j.eta}};
}

CurveSolveOptions solve_options(const json& opt) {
  CurveSolveOptions o;
  o.lo = opt_real(opt, "lo");
  o.hi = opt_real(opt, "hi");
  o.scan_step = opt_tol(opt, "scan_step");
  return o;
}

Output cmd_unfold_bt2(const Context& ctx) {
  const auto base = bt2_base(ctx.p.a, ctx.p.b, ctx.p.m);
  const auto jet = bt2_jets(base);
  const auto so = solve_options(ctx.opt);
  const auto grid =
      linspace(opt_real(ctx.opt, "eps_min"), opt_real(ctx.opt, "eps_max"), opt_count(ctx.opt, "eps_count"));
  const auto curves = bt2_curves(jet, grid, so);
  json cj = json::array();
  for (const auto& c : curves) cj.push_back(curve_json(c));
  json r = {{"base", params_json(base.params)},
            {"x_star", base.x_star},
            {"jet", jet_json(jet)},
            {"linear_det", jet.linear_det()},
            {"linear_det_closed_form", bt2_linear_det_closed_form(base, jet)},
            {"curves", cj}};
  if (!opt_is_null(ctx.opt, "probe_eps1")) {
    const double e1 = opt_real(ctx.opt, "probe_eps1");
    json probe = {{"eps1", e1}};
    double e2 = 0.0;
    probe["hopf_eps2"] = bt2_hopf_eps2(jet, e1, e2, so) ? json(e2) : json(nullptr);
    probe["homoclinic_eps2"] = bt2_homoclinic_eps2(jet, e1, e2, so) ? json(e2) : json(nullptr);
    probe["sn_eps2"] = bt2_sn_eps2(jet, e1, e2, so) ? json(e2) : json(nullptr);
    r["probe"] = probe;
  }
  return {r, curves_csv(curves, {"label", "eps1", "eps2"})};
}

// ---- unfold-bt3

Output cmd_unfold_bt3(const Context& ctx) {
  const auto& o = ctx.opt;
  const auto T = bt3_transversality(ctx.p.a, ctx.p.m);
  auto grid = [&](const std::string& k) {
    return linspace(opt_real(o, k + "_min"), opt_real(o, k + "_max"), opt_count(o, k + "_count"));
  };
  const auto surfaces = bt3_surfaces(grid("mu1"), grid("mu3"), grid("u"), grid("v"));
  json sj = json::array();
  for (const auto& c : surfaces) sj.push_back(curve_json(c));
  json lin = json::array();
  for (const auto& row : T.linear) lin.push_back({row[0], row[1], row[2]});
  json r = {{"point",
             {{"x_star", T.point.x_star},
              {"vartheta", T.point.vartheta},
              {"c_star", T.point.c_star},
              {"n_star", T.point.n_star},
              {"b_star", T.point.b_star}}},
            {"D", T.D},
            {"varsigma", T.varsigma},
            {"nondegeneracy", T.nondegeneracy},
            {"nondegenerate", T.nondegenerate},
            {"det_closed_form", T.det_closed_form},
            {"linear", lin},
            {"det_linear", T.det_linear},
            {"surfaces", sj}};
  return {r, curves_csv(surfaces, {"label", "mu1", "mu2", "mu3"})};
}

// ---- focus

std::vector<ParamName> param_list(const std::string& s) {
  std::vector<ParamName> out;
  for (const auto& item : split_list(s)) out.push_back(param_from_string(item));
  return out;
}

std::vector<int> b_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split_list(s)) {
    std::size_t used = 0;
    const int k = std::stoi(item, &used);
    if (used != item.size() || k < 1 || k > 8) throw std::invalid_argument("bad focal index: " + item);
    out.push_back(k);
  }
  return out;
}

}  // namespace

json focus_report_json(const FocusReport& f) {
  json B = json::object();
  for (int k = 1; k <= 8; ++k) B["B" + std::to_string(k)] = f.B[static_cast<std::size_t>(k)];
  json h = json::object(), nu = json::object();
  for (int k = 2; k <= 7; ++k) h["h" + std::to_string(k)] = f.h[static_cast<std::size_t>(k)];
  for (int k = 2; k <= 6; ++k) nu["nu" + std::to_string(k)] = f.nu[static_cast<std::size_t>(k)];
  return {{"x2", f.x2},
          {"h", h},
          {"nu", nu},
          {"B", B},
          {"order", f.order},
          {"stability", focus_stability_name(f.stability)}};
}

json codim_json(const CodimJacobian& J) {
  json rows = json::array();
  for (const auto& row : J.matrix) rows.push_back(row);
  return {{"matrix", rows}, {"values", J.values}, {"det", J.det}};
}

json cycle_json(const LimitCycle& c, bool with_loop) {
  json j = {{"x0", c.x0},
            {"y0", c.y0},
            {"period", c.period},
            {"stability", cycle_stability_name(c.stability)},
            {"slope", c.slope},
            {"slope_backward", c.slope_backward},
            {"residual", c.residual},
            {"found_in", direction_name(c.found_in)},
            {"winding", c.winding}};
  if (with_loop) {
    json pts = json::array();
    for (const auto& s : c.loop) pts.push_back({s.x, s.y});
    j["loop"] = pts;
  }
  return j;
}

CsvTable cycles_csv(const std::vector<LimitCycle>& cycles) {
  CsvTable t;
  t.header = {"x0", "period", "stability", "slope"};
  for (const auto& c : cycles)
    t.rows.push_back({csv_field(c.x0), csv_field(c.period), cycle_stability_name(c.stability), csv_field(c.slope)});
  return t;
}

namespace {

Output cmd_focus(const Context& ctx) {
  const auto& p = validate(ctx.p);
  const double tol = opt_tol(ctx.opt, "vanish_tol");
  const FocusReport f =
      opt_is_null(ctx.opt, "x2") ? focal_values_at_e2(p, tol) : focal_values(p, opt_real(ctx.opt, "x2"), tol);
  json r = {{"params", params_json(p)}, {"report", focus_report_json(f)}};
  const auto which = param_list(ctx.opt.at("jacobian_params").get<std::string>());
  const auto bs = b_list(ctx.opt.at("jacobian_b").get<std::string>());
  if (!which.empty() || !bs.empty()) {
    if (which.size() != bs.size())
      throw std::invalid_argument("jacobian_params and jacobian_b must have the same length");
    r["codim_jacobian"] = codim_json(codim_jacobian(p, which, bs, opt_tol(ctx.opt, "rel_step")));
  }
  if (ctx.opt.at("polish").get<bool>()) {
    if (which.empty()) throw std::invalid_argument("polish needs jacobian_params and jacobian_b");
    const auto pr = polish_weak_focus(p, which, bs);
    r["polish"] = {{"params", params_json(pr.params)},
                   {"residuals", pr.residuals},
                   {"iterations", pr.iterations},
                   {"converged", pr.converged}};
    if (pr.converged) r["polish"]["report"] = focus_report_json(focal_values_at_e2(pr.params, tol));
  }
  return {r, std::nullopt};
}

// ---- simulate

IntegratorOptions integrator_options(const json& o) {
  IntegratorOptions io;
  io.rtol = opt_tol(o, "rtol");
  io.atol = opt_tol(o, "atol");
  return io;
}

Output cmd_simulate(const Context& ctx) {
  const auto& p = validate(ctx.p);
  auto io = integrator_options(ctx.opt);
  io.sample_dt = opt_real(ctx.opt, "sample_dt");
  io.backward = ctx.opt.at("backward").get<bool>();
  const double t_end = opt_real(ctx.opt, "t_end");
  const std::size_t starts = opt_count(ctx.opt, "starts");

  std::vector<State> s0;
  if (starts == 0) {
    s0.push_back({opt_real(ctx.opt, "x0"), opt_real(ctx.opt, "y0")});
  } else {
    // uniform in the triangle x, y >= 0, x + y <= 1/c
    Xoshiro256 rng(ctx.seed);
    for (std::size_t i = 0; i < starts; ++i) {
      double u = rng.uniform(), v = rng.uniform();
      if (u + v > 1.0) {
        u = 1.0 - u;
        v = 1.0 - v;
      }
      s0.push_back({u / p.c, v / p.c});
    }
  }

  CsvTable t;
  t.header = starts == 0 ? std::vector<std::string>{"t", "x", "y"} : std::vector<std::string>{"run", "t", "x", "y"};
  json runs = json::array();
  for (std::size_t i = 0; i < s0.size(); ++i) {
    const auto tr = integrate(s0[i], p, t_end, io);
    json pts = json::array();
    for (std::size_t k = 0; k < tr.t.size(); ++k) {
      pts.push_back({tr.t[k], tr.x[k], tr.y[k]});
      std::vector<std::string> row{csv_field(tr.t[k]), csv_field(tr.x[k]), csv_field(tr.y[k])};
      if (starts) row.insert(row.begin(), std::to_string(i));
      t.rows.push_back(std::move(row));
    }
    runs.push_back({{"x0", s0[i].x},
                    {"y0", s0[i].y},
                    {"started_outside", tr.started_outside},
                    {"steps", tr.stats.steps},
                    {"rejected", tr.stats.rejected},
                    {"final", {tr.x.back(), tr.y.back()}},
                    {"samples", pts}});
  }
  return {{{"params", params_json(p)}, {"runs", runs}}, t};
}

// ---- cycles

Output cmd_cycles(const Context& ctx) {
  const auto& p = validate(ctx.p);
  CycleSearchOptions o;
  o.poincare.integrator = integrator_options(ctx.opt);
  o.delta_frac = opt_tol(ctx.opt, "delta_frac");
  o.semistable_tol = opt_tol(ctx.opt, "semistable_tol");
  o.scan_backward = ctx.opt.at("scan_backward").get<bool>();
  double x_max = 0.0;
  if (!opt_is_null(ctx.opt, "x_max"))
    x_max = opt_real(ctx.opt, "x_max");
  else if (!positive_equilibria(p).empty())
    x_max = section_x_limit(p);
  const auto cycles = find_limit_cycles(p, x_max, opt_count(ctx.opt, "resolution"), o);
  const bool loops = ctx.opt.at("loops").get<bool>();
  json r = json::array();
  for (const auto& c : cycles) r.push_back(cycle_json(c, loops));
  return {r, cycles_csv(cycles)};
}

// ---- geometry

Output cmd_geometry(const Context& ctx) {
  const auto which = ctx.opt.at("surface").get<std::string>();
  if (which != "all" && which != "cusp" && which != "hopf")
    throw std::invalid_argument("option surface must be all, cusp or hopf");
  const std::size_t grid = opt_count(ctx.opt, "grid");
  std::vector<CurveSample> out;
  if (which != "hopf") {
    const std::size_t nz = opt_is_null(ctx.opt, "cusp_count") ? grid : opt_count(ctx.opt, "cusp_count");
    out.push_back(cusp_curve(linspace(opt_real(ctx.opt, "z_min"), opt_real(ctx.opt, "z_max"), nz)));
  }
  json meshes = json::array();
  if (which != "cusp") {
    SurfaceGrid g;
    g.nu = g.nv = grid;
    g.extent = opt_tol(ctx.opt, "extent");
    for (auto& s : hopf_unfolding_surfaces(g)) out.push_back(std::move(s));
    if (ctx.opt.at("mesh").get<bool>())
      for (const auto& m : hopf_unfolding_meshes(g)) meshes.push_back({{"label", m.label}, {"triangles", m.triangles}});
  }
  json sj = json::array();
  for (const auto& c : out) sj.push_back(curve_json(c));
  json r = {{"samples", sj}};
  if (!meshes.empty()) r["meshes"] = meshes;
  return {r, curves_csv(out, {"label", "x", "y", "z"})};
}

}  // namespace

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  if (n == 1) v[0] = lo;
  for (std::size_t i = 0; n > 1 && i < n; ++i)
    v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return v;
}

const std::vector<Command>& commands() {
  using T = OptType;
  static const std::vector<Command> list = {
      {"equilibria", "Solve and classify equilibria", true, false,
       {{"double_root_tol", T::Real, kDoubleRootTol, "relative band in which the discriminant counts as zero"},
        {"classify_tol", T::Real, kDegeneracyTol, "trace/det degeneracy tolerance"}},
       cmd_equilibria},
      {"critical", "x*, n*, c*, codim-3 point, b roots and gamma thresholds", true, false, {}, cmd_critical},
      {"normal-form", "Normal-form coefficients xi, zeta, eta, chi", true, false,
       {{"at", T::Text, "given", "given: use c, n as supplied; sn: move to the saddle-node point of (a, b, m)"},
        {"x_star", T::Real, nullptr, "double equilibrium (default am + sqrt(a^2 m^2 + 3m))"},
        {"higher", T::Bool, false, "also emit xi5..xi8"},
        {"eta_tol", T::Real, kEtaZeroTol, "eta = 0 tolerance for chi"}},
       cmd_normal_form},
      {"unfold-bt2", "Codim-2 unfolding jets and curves in (eps1, eps2)", true, true,
       {{"eps_min", T::Real, -0.1, ""},
        {"eps_max", T::Real, 0.1, ""},
        {"eps_count", T::Int, 201, ""},
        {"lo", T::Real, -0.5, "eps2 bracket window"},
        {"hi", T::Real, 0.5, ""},
        {"scan_step", T::Real, 1e-3, ""},
        {"probe_eps1", T::Real, nullptr, "report curve crossings at this eps1"}},
       cmd_unfold_bt2},
      {"unfold-bt3", "Codim-3 transversality and truncated surfaces", true, true,
       {{"mu1_min", T::Real, -1.0, ""},
        {"mu1_max", T::Real, 0.0, ""},
        {"mu1_count", T::Int, 21, ""},
        {"mu3_min", T::Real, -1.0, ""},
        {"mu3_max", T::Real, 1.0, ""},
        {"mu3_count", T::Int, 21, ""},
        {"u_min", T::Real, -1.0, ""},
        {"u_max", T::Real, 1.0, ""},
        {"u_count", T::Int, 21, ""},
        {"v_min", T::Real, 0.0, ""},
        {"v_max", T::Real, 1.0, ""},
        {"v_count", T::Int, 11, ""}},
       cmd_unfold_bt3},
      {"focus", "Focal values at E2 and codim Jacobians", true, false,
       {{"x2", T::Real, nullptr, "focus location (default: larger positive equilibrium)"},
        {"vanish_tol", T::Real, kFocalVanishTol, ""},
        {"jacobian_params", T::Text, "", "comma list, e.g. a,n"},
        {"jacobian_b", T::Text, "", "comma list of focal indices, e.g. 1,3"},
        {"rel_step", T::Real, 1e-5, "finite-difference step"},
        {"polish", T::Bool, false, "Newton-polish the listed B's to zero first"}},
       cmd_focus},
      {"simulate", "Integrate trajectories", true, true,
       {{"x0", T::Real, 0.1, ""},
        {"y0", T::Real, 0.1, ""},
        {"t_end", T::Real, 100.0, ""},
        {"sample_dt", T::Real, 0.1, "0 records every accepted step"},
        {"rtol", T::Real, 1e-10, ""},
        {"atol", T::Real, 1e-12, ""},
        {"backward", T::Bool, false, ""},
        {"starts", T::Int, 0, "random starts in the triangle (uses the seed); 0 uses x0, y0"}},
       cmd_simulate},
      {"cycles", "Limit cycles on the section through E2", true, true,
       {{"x_max", T::Real, nullptr, "end of the scan (default: edge of the triangle)"},
        {"resolution", T::Int, 200, ""},
        {"rtol", T::Real, 1e-10, ""},
        {"atol", T::Real, 1e-12, ""},
        {"delta_frac", T::Real, 1e-3, ""},
        {"semistable_tol", T::Real, 1e-3, ""},
        {"scan_backward", T::Bool, true, ""},
        {"loops", T::Bool, false, "include sampled orbits"}},
       cmd_cycles},
      {"geometry", "Cusp curve and Hopf-unfolding surfaces", false, true,
       {{"surface", T::Text, "all", "all, cusp or hopf"},
        {"grid", T::Int, 200, "mesh density per direction"},
        {"extent", T::Real, 1.0, ""},
        {"cusp_count", T::Int, nullptr, "cusp samples (default: grid)"},
        {"z_min", T::Real, -1.0, ""},
        {"z_max", T::Real, 1.0, ""},
        {"mesh", T::Bool, false, "emit triangle indices"}},
       cmd_geometry},
      {"repro", "Run a published example end to end", false, false,
       {{"band", T::Real, 1e-4, "double-root band for the rounded published parameters"},
        {"resolution", T::Int, 200, "cycle scan resolution"},
        {"vanish_tol", T::Real, 1e-3, "focal-value vanishing tolerance at the rounded published parameters"},
        {"eps_count", T::Int, 201, "fig8 curve samples"}},
       run_repro},
  };
  return list;
}

}  // namespace bifurcato::cli
