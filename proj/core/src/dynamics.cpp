#include "bifurcato/dynamics.hpp"

#include <algorithm>
#include <array>
#include <boost/math/tools/toms748_solve.hpp>
#include <boost/numeric/odeint/stepper/runge_kutta_dopri5.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "bifurcato/equilibria.hpp"
#include "bifurcato/error.hpp"
#include "bifurcato/parallel.hpp"

namespace bifurcato {

namespace {

using state_t = std::array<double, 2>;
using stepper_t = boost::numeric::odeint::runge_kutta_dopri5<state_t>;

struct Rhs {
  DimensionlessParams p;
  double sign = 1.0;
  void operator()(const state_t& s, state_t& d, double /*t*/) const {
    const double x = s[0];
    const double x3 = x * x * x;
    const double D = 1.0 + p.a * x + p.b * x3;
    d[0] = sign * (x3 / D * (1.0 - p.c * x - p.c * s[1]) - p.m * x);
    d[1] = sign * (x - p.n * s[1]);
  }
};

bool finite(const state_t& s) { return std::isfinite(s[0]) && std::isfinite(s[1]); }

// Adaptive DOPRI5 driver exposing the last accepted step for dense output.
class Driver {
 public:
  Driver(const DimensionlessParams& p, const State& s0, const IntegratorOptions& opt)
      : rhs_{p, opt.backward ? -1.0 : 1.0}, opt_(opt), h_(opt.h_init) {
    x_ = {s0.x, s0.y};
    rhs_(x_, dxdt_, 0.0);
    x_old_ = x_;
    dxdt_old_ = dxdt_;
  }

  double t() const { return t_; }
  double t_old() const { return t_old_; }
  const state_t& x() const { return x_; }
  const state_t& x_old() const { return x_old_; }
  const IntegratorStats& stats() const { return stats_; }

  // One accepted step, not beyond t_stop.
  void step(double t_stop = std::numeric_limits<double>::infinity()) {
    if (stats_.steps >= opt_.max_steps) throw Error(ErrorKind::StepSizeUnderflow, "step budget exhausted");
    bool last_nonfinite = false;
    for (;;) {
      double h = std::min(h_, opt_.h_max);
      const bool clipped = t_ + h >= t_stop;
      if (clipped) h = t_stop - t_;
      const double h_min = opt_.h_min_rel * std::max(1.0, std::abs(t_));
      if (h < h_min && !clipped) {
        std::ostringstream os;
        os << "step " << h << " at t = " << t_;
        throw Error(last_nonfinite ? ErrorKind::NonFiniteState : ErrorKind::StepSizeUnderflow, os.str());
      }
      state_t out, dout, err;
      stepper_.do_step(rhs_, x_, dxdt_, t_, out, dout, h, err);
      double e = 0.0;
      if (!finite(out) || !finite(dout)) {
        e = std::numeric_limits<double>::infinity();
        last_nonfinite = true;
      } else {
        last_nonfinite = false;
        for (int i = 0; i < 2; ++i) {
          const double sc = opt_.atol + opt_.rtol * std::max(std::abs(x_[i]), std::abs(out[i]));
          e = std::max(e, std::abs(err[i]) / sc);
        }
      }
      if (e <= 1.0) {
        x_old_ = x_;
        dxdt_old_ = dxdt_;
        t_old_ = t_;
        x_ = out;
        dxdt_ = dout;
        t_ = clipped ? t_stop : t_ + h;
        ++stats_.steps;
        stats_.final_error = e;
        const double grow = e == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(e, -0.2), 0.2, 5.0);
        if (!clipped || grow < 1.0) h_ = h * grow;
        return;
      }
      ++stats_.rejected;
      h_ = h * (std::isfinite(e) ? std::max(0.2, 0.9 * std::pow(e, -0.25)) : 0.1);
    }
  }

  // Dense output inside the last accepted step.
  state_t dense(double tq) {
    if (tq <= t_old_) return x_old_;
    if (tq >= t_) return x_;
    state_t out;
    stepper_.calc_state(tq, out, x_old_, dxdt_old_, t_old_, x_, dxdt_, t_);
    return out;
  }

 private:
  Rhs rhs_;
  IntegratorOptions opt_;
  stepper_t stepper_;
  state_t x_{}, dxdt_{}, x_old_{}, dxdt_old_{};
  double t_ = 0.0, t_old_ = 0.0, h_;
  IntegratorStats stats_;
};

}  // namespace

bool in_invariant_region(const State& s, const DimensionlessParams& p, double slack) {
  return s.x >= -slack && s.y >= -slack && s.x + s.y <= 1.0 / p.c + slack;
}

Trajectory integrate(const State& s0, const DimensionlessParams& p, double t_end, const IntegratorOptions& opt) {
  validate(p);
  if (!(opt.rtol > 0.0) || !(opt.atol > 0.0)) throw Error(ErrorKind::ConstraintViolation, "tolerances must be positive");
  Trajectory tr;
  tr.started_outside = !in_invariant_region(s0, p);
  Driver drv(p, s0, opt);
  auto record = [&](double t, const state_t& s) {
    tr.t.push_back(t);
    tr.x.push_back(s[0]);
    tr.y.push_back(s[1]);
  };
  record(0.0, drv.x());
  if (!(t_end > 0.0)) return tr;
  double next_sample = opt.sample_dt;
  while (drv.t() < t_end) {
    drv.step(t_end);
    if (opt.sample_dt > 0.0) {
      while (next_sample <= drv.t() + 1e-12 * t_end && next_sample <= t_end) {
        record(next_sample, drv.dense(next_sample));
        next_sample = opt.sample_dt * static_cast<double>(tr.t.size());
      }
    } else {
      record(drv.t(), drv.x());
    }
  }
  tr.stats = drv.stats();
  return tr;
}

const char* direction_name(Direction d) { return d == Direction::Forward ? "Forward" : "Backward"; }

const char* cycle_stability_name(CycleStability s) {
  switch (s) {
    case CycleStability::Stable: return "Stable";
    case CycleStability::Unstable: return "Unstable";
    case CycleStability::SemiStable: return "SemiStable";
  }
  return "Stable";
}

Section section_for(const DimensionlessParams& p) {
  const auto eq = positive_equilibria(p);
  if (eq.empty()) throw Error(ErrorKind::NoPositiveEquilibria, "the section needs a positive equilibrium");
  return Section{eq.back().x, eq.back().y};
}

double section_x_limit(const DimensionlessParams& p) {
  const Section sec = section_for(p);
  return 1.0 / p.c - sec.y2;
}

ReturnResult poincare_return(double x0, const DimensionlessParams& p, Direction dir, const PoincareOptions& opt) {
  return poincare_return(x0, p, section_for(p), dir, opt);
}

ReturnResult poincare_return(double x0, const DimensionlessParams& p, const Section& sec, Direction dir,
                             const PoincareOptions& opt) {
  if (!(x0 > sec.x2)) throw Error(ErrorKind::ConstraintViolation, "x0 must lie right of E2 on the section");
  IntegratorOptions io = opt.integrator;
  io.backward = dir == Direction::Backward;
  Driver drv(p, State{x0, sec.y2}, io);
  // y' = x - x2 > 0 on the ray, so forward crossings go upward and reversed ones downward.
  const double orient = io.backward ? -1.0 : 1.0;
  const double bound = opt.escape_factor / p.c;
  while (drv.t() < opt.t_max) {
    drv.step(opt.t_max);
    const state_t& a = drv.x_old();
    const state_t& b = drv.x();
    if (b[0] < -1e-9 || b[1] < -1e-9 || b[0] + b[1] > bound)
      throw Error(ErrorKind::NoReturn, "trajectory left the admissible region");
    if (std::hypot(b[0], b[1]) < opt.equilibrium_radius)
      throw Error(ErrorKind::ConvergedToEquilibrium, "trajectory converged to E0");
    if (std::hypot(b[0] - sec.x2, b[1] - sec.y2) < opt.equilibrium_radius * std::max(1.0, sec.x2))
      throw Error(ErrorKind::ConvergedToEquilibrium, "trajectory converged to E2");
    const double ga = orient * (a[1] - sec.y2);
    const double gb = orient * (b[1] - sec.y2);
    if (!(ga < 0.0 && gb >= 0.0)) continue;
    auto g = [&](double tq) { return orient * (drv.dense(tq)[1] - sec.y2); };
    double t_cross = drv.t();
    if (gb != 0.0) {
      const double tol = std::max(opt.time_tol, 4.0 * std::numeric_limits<double>::epsilon() * drv.t());
      std::uintmax_t iters = 100;
      const auto r = boost::math::tools::toms748_solve(
          g, drv.t_old(), drv.t(), ga, gb, [tol](double l, double r) { return r - l <= tol; }, iters);
      t_cross = 0.5 * (r.first + r.second);
    }
    const state_t s = drv.dense(t_cross);
    if (s[0] <= sec.x2) continue;
    return ReturnResult{s[0], t_cross, drv.stats().steps};
  }
  throw Error(ErrorKind::NoReturn, "no return before t_max");
}

int winding_number(const std::vector<State>& loop, double cx, double cy) {
  if (loop.size() < 2) return 0;
  double total = 0.0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const State& a = loop[i];
    const State& b = loop[(i + 1) % loop.size()];
    const double t0 = std::atan2(a.y - cy, a.x - cx);
    const double t1 = std::atan2(b.y - cy, b.x - cx);
    double d = t1 - t0;
    while (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
    while (d < -std::numbers::pi) d += 2.0 * std::numbers::pi;
    total += d;
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

namespace {

std::optional<double> displacement(double x, const DimensionlessParams& p, const Section& sec, Direction dir,
                                   const PoincareOptions& opt) {
  try {
    return poincare_return(x, p, sec, dir, opt).x1 - x;
  } catch (const Error&) {
    return std::nullopt;
  }
}

double return_slope(double x, const DimensionlessParams& p, const Section& sec, Direction dir,
                    const PoincareOptions& opt, double rel_step) {
  const double h = rel_step * std::max(std::abs(x), 1e-3);
  const double xp = poincare_return(x + h, p, sec, dir, opt).x1;
  const double xm = poincare_return(x - h, p, sec, dir, opt).x1;
  return (xp - xm) / (2.0 * h);
}

}  // namespace

std::vector<LimitCycle> find_limit_cycles(const DimensionlessParams& p, double x_max, std::size_t resolution,
                                          const CycleSearchOptions& opt) {
  validate(p);
  if (positive_equilibria(p).empty()) return {};
  const Section sec = section_for(p);
  const double lo = sec.x2 * (1.0 + opt.delta_frac);
  if (resolution < 2 || !(x_max > lo)) return {};

  std::vector<double> grid(resolution);
  for (std::size_t i = 0; i < resolution; ++i)
    grid[i] = lo + (x_max - lo) * static_cast<double>(i) / static_cast<double>(resolution - 1);

  struct Candidate {
    double x;
    Direction dir;
  };
  std::vector<Candidate> candidates;
  std::vector<Direction> dirs = {Direction::Forward};
  if (opt.scan_backward) dirs.push_back(Direction::Backward);

  for (Direction dir : dirs) {
    std::vector<std::optional<double>> d(resolution);
    parallel_for(resolution, [&](std::size_t i) { d[i] = displacement(grid[i], p, sec, dir, opt.poincare); });
    std::vector<std::pair<double, double>> brackets;
    for (std::size_t i = 0; i + 1 < resolution; ++i) {
      if (!d[i] || !d[i + 1]) continue;
      if ((*d[i] < 0.0) != (*d[i + 1] < 0.0)) brackets.emplace_back(grid[i], grid[i + 1]);
    }
    std::vector<std::optional<double>> roots(brackets.size());
    parallel_for(brackets.size(), [&](std::size_t k) {
      auto f = [&](double x) {
        const auto v = displacement(x, p, sec, dir, opt.poincare);
        if (!v) throw Error(ErrorKind::NoReturn, "return lost inside a bracket");
        return *v;
      };
      try {
        std::uintmax_t iters = 200;
        const double tol = opt.x_tol;
        const auto r = boost::math::tools::toms748_solve(
            f, brackets[k].first, brackets[k].second,
            [tol](double l, double r) { return r - l <= tol * std::max(1.0, std::abs(r)); }, iters);
        roots[k] = 0.5 * (r.first + r.second);
      } catch (const Error&) {
      }
    });
    for (const auto& r : roots)
      if (r) candidates.push_back({*r, dir});
  }

  std::sort(candidates.begin(), candidates.end(), [](const Candidate& l, const Candidate& r) { return l.x < r.x; });
  auto forward_residual = [&](double x) {
    const auto d = displacement(x, p, sec, Direction::Forward, opt.poincare);
    return d ? std::abs(*d) : std::numeric_limits<double>::infinity();
  };
  std::vector<double> residual(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t k) { residual[k] = forward_residual(candidates[k].x); });

  // A nearly flat displacement (slope close to 1) puts the forward and
  // reversed roots of one cycle further apart than merge_tol.
  std::vector<std::size_t> merged;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (!merged.empty()) {
      const std::size_t j = merged.back();
      const bool close = std::abs(candidates[k].x - candidates[j].x) < opt.merge_tol;
      const bool same_root = candidates[k].dir != candidates[j].dir && residual[k] < opt.residual_tol &&
                             residual[j] < opt.residual_tol &&
                             forward_residual(0.5 * (candidates[k].x + candidates[j].x)) < opt.residual_tol;
      if (close || same_root) {
        if (residual[k] < residual[j]) merged.back() = k;
        continue;
      }
    }
    merged.push_back(k);
  }

  std::vector<LimitCycle> out(merged.size());
  parallel_for(merged.size(), [&](std::size_t k) {
    LimitCycle lc;
    lc.x0 = candidates[merged[k]].x;
    lc.y0 = sec.y2;
    lc.found_in = candidates[merged[k]].dir;
    const ReturnResult fwd = poincare_return(lc.x0, p, sec, Direction::Forward, opt.poincare);
    lc.period = fwd.T;
    lc.residual = std::abs(fwd.x1 - lc.x0);
    lc.slope = return_slope(lc.x0, p, sec, Direction::Forward, opt.poincare, opt.slope_step);
    lc.slope_backward = return_slope(lc.x0, p, sec, Direction::Backward, opt.poincare, opt.slope_step);
    if (std::abs(lc.slope - 1.0) < opt.semistable_tol && std::abs(lc.slope_backward - 1.0) < opt.semistable_tol)
      lc.stability = CycleStability::SemiStable;
    else
      lc.stability = lc.slope < 1.0 ? CycleStability::Stable : CycleStability::Unstable;

    IntegratorOptions io = opt.poincare.integrator;
    io.sample_dt = lc.period / static_cast<double>(std::max<std::size_t>(opt.loop_samples, 8));
    const Trajectory tr = integrate(State{lc.x0, lc.y0}, p, lc.period, io);
    for (std::size_t i = 0; i < tr.t.size(); ++i) lc.loop.push_back(State{tr.x[i], tr.y[i]});
    lc.winding = winding_number(lc.loop, sec.x2, sec.y2);
    out[k] = std::move(lc);
  });
  return out;
}

}  // namespace bifurcato
