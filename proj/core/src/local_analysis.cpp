#include "bifurcato/local_analysis.hpp"

#include <algorithm>
#include <cmath>

#include "bifurcato/error.hpp"

namespace bifurcato {

const char* tag_name(EquilibriumTag tag) {
  switch (tag) {
    case EquilibriumTag::StableNode: return "StableNode";
    case EquilibriumTag::StableFocus: return "StableFocus";
    case EquilibriumTag::UnstableNode: return "UnstableNode";
    case EquilibriumTag::UnstableFocus: return "UnstableFocus";
    case EquilibriumTag::Saddle: return "Saddle";
    case EquilibriumTag::SaddleNodeAttracting: return "SaddleNodeAttracting";
    case EquilibriumTag::SaddleNodeRepelling: return "SaddleNodeRepelling";
    case EquilibriumTag::WeakFocusOrCenter: return "WeakFocusOrCenter";
    case EquilibriumTag::DegenerateBT: return "DegenerateBT";
  }
  return "Unknown";
}

EquilibriumClass classify(const Equilibrium& eq, const DimensionlessParams& p, double tol) {
  const Mat2 J = jacobian(State{eq.x, eq.y}, p);
  EquilibriumClass out;
  out.trace = J.trace();
  out.det = J.det();
  const double scale = std::max(J.frobenius(), 1e-300);
  const bool tr_zero = std::abs(out.trace) < tol * scale;
  const bool det_zero = std::abs(out.det) < tol * scale * scale;

  if (eq.multiplicity >= 2 || det_zero) {
    if (tr_zero) {
      out.tag = EquilibriumTag::DegenerateBT;
    } else {
      out.tag = out.trace > 0.0 ? EquilibriumTag::SaddleNodeRepelling : EquilibriumTag::SaddleNodeAttracting;
    }
    return out;
  }
  if (out.det < 0.0) {
    out.tag = EquilibriumTag::Saddle;
    return out;
  }
  if (tr_zero) {
    out.tag = EquilibriumTag::WeakFocusOrCenter;
    return out;
  }
  const bool node = out.trace * out.trace - 4.0 * out.det >= 0.0;
  if (out.trace < 0.0) {
    out.tag = node ? EquilibriumTag::StableNode : EquilibriumTag::StableFocus;
  } else {
    out.tag = node ? EquilibriumTag::UnstableNode : EquilibriumTag::UnstableFocus;
  }
  return out;
}

HopfResiduals hopf_residuals(const DimensionlessParams& p, double x2) {
  const double x3 = x2 * x2 * x2;
  HopfResiduals r;
  r.trace_residual = 2.0 * p.m - p.n + p.a * (p.m - p.n) * x2 - (p.c + p.b * p.m + p.b * p.n) * x3;
  r.transversality = p.n * (2.0 * p.a * x2 + 3.0) - 2.0 * p.m * (p.a * x2 + 3.0);
  return r;
}

double dulac_margin(double x, const DimensionlessParams& p) {
  const double x3 = x * x * x;
  const double Gp = -1.0 + p.m * (p.a * x - p.b * x3 + 2.0) / (p.c * x3);
  return Gp - p.n / p_fun(x, p);
}

std::vector<double> dulac_grid(const DimensionlessParams& p, int size) {
  const auto eqs = positive_equilibria(p);
  if (eqs.empty()) throw Error(ErrorKind::NoPositiveEquilibria, "no positive equilibria; cycles are absent");
  const double lo = 0.5 * eqs.front().x;
  const double hi = 1.0 / p.c;
  std::vector<double> grid(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) grid[i] = lo + (hi - lo) * i / (size - 1);
  return grid;
}

bool dulac_no_cycles(const DimensionlessParams& p, const std::vector<double>& grid) {
  constexpr double kRefineMargin = 1e-3;
  constexpr int kRefineSteps = 64;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = dulac_margin(grid[i], p);
    if (!(v > 0.0)) return false;
    if (v < kRefineMargin && i + 1 < grid.size()) {
      const double a = grid[i], b = grid[i + 1];
      for (int k = 1; k < kRefineSteps; ++k) {
        if (!(dulac_margin(a + (b - a) * k / kRefineSteps, p) > 0.0)) return false;
      }
    }
  }
  return !grid.empty();
}

bool dulac_no_cycles(const DimensionlessParams& p) {
  std::vector<double> grid;
  try {
    grid = dulac_grid(p);
  } catch (const Error&) {
    return true;
  }
  return dulac_no_cycles(p, grid);
}

bool exists_stable_cycle_predicate(const DimensionlessParams& p) {
  if (discriminant_sign(reduce(p)) >= 0) return false;
  const auto eqs = positive_equilibria(p);
  if (eqs.size() < 2) return false;
  const Mat2 J = jacobian(State{eqs[1].x, eqs[1].y}, p);
  return J.trace() > 0.0;
}

}  // namespace bifurcato
