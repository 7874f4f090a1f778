#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "bifurcato/model.hpp"

namespace bifurcato {

struct IntegratorOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double h_init = 1e-3;
  double h_max = std::numeric_limits<double>::infinity();
  // Relative to max(1, |t|); smaller accepted steps raise StepSizeUnderflow.
  double h_min_rel = 1e-15;
  std::size_t max_steps = 100'000'000;
  // Uniform output spacing via dense output; 0 records every accepted step.
  double sample_dt = 0.0;
  // Integrate the reversed flow.
  bool backward = false;
};

struct IntegratorStats {
  std::size_t steps = 0;
  std::size_t rejected = 0;
  double final_error = 0.0;  // last accepted scaled error estimate
};

struct Trajectory {
  std::vector<double> t, x, y;
  IntegratorStats stats;
  bool started_outside = false;  // s0 not in the invariant triangle
};

// Inside {x >= 0, y >= 0, x + y <= 1/c} up to the given slack.
bool in_invariant_region(const State& s, const DimensionlessParams& p, double slack = 0.0);

// Dormand-Prince 5(4) with the error scaled by atol + rtol max(|x_old|, |x_new|).
// Throws StepSizeUnderflow or NonFiniteState.
Trajectory integrate(const State& s0, const DimensionlessParams& p, double t_end,
                     const IntegratorOptions& opt = {});

enum class Direction { Forward, Backward };
const char* direction_name(Direction d);

// The ray {y = y2, x > x2} through the larger positive equilibrium.
struct Section {
  double x2 = 0.0;
  double y2 = 0.0;
};
// Throws NoPositiveEquilibria.
Section section_for(const DimensionlessParams& p);

struct PoincareOptions {
  IntegratorOptions integrator;
  double t_max = 1e6;
  double time_tol = 1e-12;
  double equilibrium_radius = 1e-8;
  // A return is abandoned once x < 0, y < 0 or x + y > escape_factor / c.
  // The triangle x + y <= 1/c is forward invariant only when m > 1.
  double escape_factor = 100.0;
};

struct ReturnResult {
  double x1 = 0.0;
  double T = 0.0;
  std::size_t steps = 0;
};

// First return to the section with the starting crossing orientation.
// Throws NoReturn (left the invariant region or t_max reached) and
// ConvergedToEquilibrium.
ReturnResult poincare_return(double x0, const DimensionlessParams& p, Direction dir,
                             const PoincareOptions& opt = {});
ReturnResult poincare_return(double x0, const DimensionlessParams& p, const Section& sec, Direction dir,
                             const PoincareOptions& opt = {});

enum class CycleStability { Stable, Unstable, SemiStable };
const char* cycle_stability_name(CycleStability s);

struct LimitCycle {
  double x0 = 0.0;
  double y0 = 0.0;
  double period = 0.0;
  CycleStability stability = CycleStability::Stable;
  double slope = 0.0;           // forward return-map derivative at x0
  double slope_backward = 0.0;  // reversed-flow return-map derivative
  double residual = 0.0;        // |P(x0) - x0|
  Direction found_in = Direction::Forward;
  int winding = 0;              // around E2
  std::vector<State> loop;
};

struct CycleSearchOptions {
  PoincareOptions poincare;
  double delta_frac = 1e-3;  // scan starts at x2 + delta_frac x2
  double merge_tol = 1e-6;
  double x_tol = 1e-14;      // bracket width, relative to x
  double slope_step = 1e-6;  // relative
  double semistable_tol = 1e-3;
  // Forward/backward roots closer than merge_tol, or whose forward residual at
  // the other root is below residual_tol, are the same cycle.
  double residual_tol = 1e-8;
  std::size_t loop_samples = 400;
  bool scan_backward = true;
};

// Scan of the displacement d(x) = P(x) - x at `resolution` points of
// [x2 + delta, x_max] in both time directions. Each sign change is refined
// with TOMS 748; the result is sorted by x0. Empty without a positive
// equilibrium.
std::vector<LimitCycle> find_limit_cycles(const DimensionlessParams& p, double x_max, std::size_t resolution,
                                          const CycleSearchOptions& opt = {});

// Largest x on the section that stays inside the invariant triangle.
double section_x_limit(const DimensionlessParams& p);

// Signed number of turns of a closed sampled curve around a point.
int winding_number(const std::vector<State>& loop, double cx, double cy);

}  // namespace bifurcato
