#pragma once

#include <vector>

#include "bifurcato/model.hpp"

namespace bifurcato {

// Depressed form z^3 + p z + q of the positive-equilibrium cubic
// K x^3 - n x^2 + a m n x + m n = 0 under x = z - theta/3.
struct ReducedCubic {
  double K = 0.0;  // c (n + 1) + b m n
  double theta = 0.0;
  double p1 = 0.0;
  double q1 = 0.0;
  double p = 0.0;
  double q = 0.0;
};

enum class EquilibriumKind { DiseaseFree, Endemic };

struct Equilibrium {
  double x = 0.0;
  double y = 0.0;
  int multiplicity = 1;
  EquilibriumKind kind = EquilibriumKind::DiseaseFree;
};

inline constexpr double kDoubleRootTol = 1e-8;
inline constexpr double kPositiveRootFloor = 1e-12;

ReducedCubic reduce(const DimensionlessParams& p);

double discriminant(const ReducedCubic& rc);
double discriminant(const DimensionlessParams& p);
// The expanded polynomial in (a,b,c,m,n); algebraically equal to the (p,q) form.
double discriminant_expanded(const DimensionlessParams& p);
// max(|p/3|^3, (q/2)^2, 1e-300)
double discriminant_scale(const ReducedCubic& rc);

// -1, 0, +1 with zero meaning |D| < tol * scale.
int discriminant_sign(const ReducedCubic& rc, double tol = kDoubleRootTol);

// Real roots of z^3 + p z + q, ascending; a near-double pair (inside the
// tolerance band) is returned once.
std::vector<double> depressed_cubic_roots(const ReducedCubic& rc, double tol = kDoubleRootTol);

// Cubic factor of the equilibrium condition (the x = 0 factor removed).
double equilibrium_cubic(double x, const DimensionlessParams& p);
double equilibrium_residual_scaled(double x, const DimensionlessParams& p);

// (0,0) followed by the positive equilibria in ascending x. The tolerance sets
// the relative band in which the discriminant counts as zero.
std::vector<Equilibrium> solve_equilibria(const DimensionlessParams& p, double tol = kDoubleRootTol);
std::vector<Equilibrium> positive_equilibria(const DimensionlessParams& p, double tol = kDoubleRootTol);

int root_multiplicity(double z0, const ReducedCubic& rc, double tol);

}  // namespace bifurcato
