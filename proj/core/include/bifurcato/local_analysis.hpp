#pragma once

#include <vector>

#include "bifurcato/equilibria.hpp"
#include "bifurcato/model.hpp"

namespace bifurcato {

enum class EquilibriumTag {
  StableNode,
  StableFocus,
  UnstableNode,
  UnstableFocus,
  Saddle,
  SaddleNodeAttracting,
  SaddleNodeRepelling,
  WeakFocusOrCenter,
  DegenerateBT,
};

const char* tag_name(EquilibriumTag tag);

struct EquilibriumClass {
  EquilibriumTag tag = EquilibriumTag::StableNode;
  double trace = 0.0;
  double det = 0.0;
};

// |trace| and |det| are compared against tol after scaling by the Frobenius
// norm of the Jacobian (squared for det).
inline constexpr double kDegeneracyTol = 1e-7;

EquilibriumClass classify(const Equilibrium& eq, const DimensionlessParams& p, double tol = kDegeneracyTol);

struct HopfResiduals {
  double trace_residual = 0.0;  // 2m - n + a(m-n)x2 - (c+bm+bn)x2^3
  double transversality = 0.0;  // n(2a x2 + 3) - 2m(a x2 + 3)
};

HopfResiduals hopf_residuals(const DimensionlessParams& p, double x2);

// G'(x) - n/p(x); positive everywhere on the grid rules out cycles.
double dulac_margin(double x, const DimensionlessParams& p);

inline constexpr int kDulacGridSize = 4096;

// Grid [x1/2, 1/c] with x1 the smallest positive equilibrium. Throws
// NoPositiveEquilibria when there is none; cycles are then absent trivially.
std::vector<double> dulac_grid(const DimensionlessParams& p, int size = kDulacGridSize);

// true only when the sufficient condition holds on the grid (with local
// refinement where the margin drops below 1e-3); false means inconclusive.
bool dulac_no_cycles(const DimensionlessParams& p, const std::vector<double>& grid);
bool dulac_no_cycles(const DimensionlessParams& p);

// Two positive equilibria and an unstable E2.
bool exists_stable_cycle_predicate(const DimensionlessParams& p);

}  // namespace bifurcato
