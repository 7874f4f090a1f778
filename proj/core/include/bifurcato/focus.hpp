#pragma once

#include <array>
#include <vector>

#include "bifurcato/jet.hpp"
#include "bifurcato/model.hpp"

namespace bifurcato {

// Taylor data of the Lienard reduction about E2 = (x2, y2), in the local
// variable s = x - x2.
struct LienardJets {
  Jet p;        // c X^3 / D
  Jet G;        // 1/c - X - m D / (c X^2)
  Jet n_over_p;
  Jet g;        // (X - n G) / p, so that H' = g
  Jet H;        // H(0) = 0
  Jet scrG;     // G - int_0^s n/p, so scrG' = G' - n/p
};
LienardJets lienard_jets(const DimensionlessParams& p, double x2);

// Index k holds H^(k)(0) for k = 2..7; entries 0 and 1 are zero.
using HCoeffs = std::array<double, 8>;
HCoeffs lienard_h(const DimensionlessParams& p, double x2);
// Same values from the p and G derivative formulas.
HCoeffs lienard_h_closed_form(const DimensionlessParams& p, double x2);

// p(x2), p'(x2), ..., p^(5)(x2) from the rational closed forms.
std::array<double, 6> p_derivatives_closed(const DimensionlessParams& p, double x2);
// G(x2), G'(x2), ..., G^(7)(x2).
std::array<double, 8> G_derivatives_closed(const DimensionlessParams& p, double x2);

// Index k holds nu_k of theta(x) = -x + nu2 x^2 + ... for k = 2..6.
using NuCoeffs = std::array<double, 7>;
// Throws H2Zero.
NuCoeffs nu_coefficients(const HCoeffs& h);

enum class FocusStability { Stable, Unstable, Undetermined };
const char* focus_stability_name(FocusStability s);

inline constexpr double kFocalVanishTol = 1e-6;

struct FocusReport {
  double x2 = 0.0;
  HCoeffs h{};
  NuCoeffs nu{};
  // B[k] for k = 1..8; B[0] unused
  std::array<double, 9> B{};
  // Number of leading odd coefficients that vanish; -1 when B1..B7 all vanish.
  int order = 0;
  FocusStability stability = FocusStability::Undetermined;
};

// Throws H2Zero. B1 = 2 scrG'(x2) and the higher odd coefficients follow
// Han's formulas; B_{2k} = -((2k-1)/2) nu2 B_{2k-1}.
FocusReport focal_values(const DimensionlessParams& p, double x2, double vanish_tol = kFocalVanishTol);
// Uses the larger positive equilibrium; throws EquilibriumLost without two.
FocusReport focal_values_at_e2(const DimensionlessParams& p, double vanish_tol = kFocalVanishTol);

// Order and stability from B1, B3, B5, B7 under |B| < tol max(1, |B_next|).
void classify_focus(FocusReport& r, double vanish_tol);

// Coefficients of F(theta(x)) - F(x) with theta solved from H(theta) = H(x)
// by series Newton iteration; index k is the x^k coefficient. Also returns
// theta's coefficients. Used as an independent oracle.
struct FocalSeries {
  std::array<double, Jet::K + 1> difference{};
  std::array<double, Jet::K + 1> theta{};
};
FocalSeries focal_series(const DimensionlessParams& p, double x2);

// Larger positive equilibrium; throws EquilibriumLost when fewer than two.
double weak_focus_x2(const DimensionlessParams& p);

struct CodimJacobian {
  std::vector<std::vector<double>> matrix;  // rows: B indices, columns: parameters
  std::vector<double> values;               // B's at the base point
  double det = 0.0;
};

// Central differences with relative step 1e-5 and one Richardson refinement;
// x2 is re-solved at every perturbed point. Throws EquilibriumLost.
CodimJacobian codim_jacobian(const DimensionlessParams& p, const std::vector<ParamName>& which,
                             const std::vector<int>& B_list, double rel_step = 1e-5);

// Newton iteration driving the selected B's to zero over the selected
// parameters.
struct PolishResult {
  DimensionlessParams params;
  std::vector<double> residuals;
  int iterations = 0;
  bool converged = false;
};
PolishResult polish_weak_focus(const DimensionlessParams& p, const std::vector<ParamName>& which,
                               const std::vector<int>& B_list, double tol = 1e-12, int max_iter = 30);

}  // namespace bifurcato
