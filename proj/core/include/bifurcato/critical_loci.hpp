#pragma once

#include <optional>

#include "bifurcato/model.hpp"

namespace bifurcato {

enum class Regime { Codim2, Codim3 };

struct CriticalPoint {
  double x_star = 0.0;
  double y_star = 0.0;
  double n_star = 0.0;
  double c_star = 0.0;
  std::optional<double> b_star;
  Regime regime = Regime::Codim2;
};

// am + sqrt(a^2 m^2 + 3m), the location of any double positive equilibrium.
double x_star(double a, double m);

struct SnCritical {
  double x_star = 0.0;
  double n_star = 0.0;
  double c_star = 0.0;
  // -bmn x^3 + n x^2 - amn x - mn at n = n*; must be positive
  double condition = 0.0;
};

// Throws ConditionFailed when the quadratic for n* has no positive root.
SnCritical sn_critical(double a, double b, double m);

// c that makes x* a double equilibrium for the given n.
double sn_c_for_n(double a, double b, double m, double n);

// n* written as (-1 + sqrt(D ((1 - 4m) D + 4 x*^2)) / D) / 2 with D = D(x*);
// an independent route to sn_critical's n* used for cross-checks.
double n_star_notation(double a, double b, double m);

CriticalPoint codim2_point(double a, double b, double m);

// rho(b) = A b^2 + B b + C, the discriminant numerator as a quadratic in b.
struct RhoQuadratic {
  double A = 0.0, B = 0.0, C = 0.0;
  double operator()(double b) const { return (A * b + B) * b + C; }
  double scale() const;
};
RhoQuadratic rho_tilde(double a, double c, double m, double n);

struct BRoots {
  double b1 = 0.0;
  double b2 = 0.0;
};
// Throws ComplexRoots when the quadratic discriminant is negative.
BRoots b_roots(double a, double c, double m, double n);
BRoots b_roots_closed_form(double a, double c, double m, double n);

struct GammaThresholds {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
};
// gamma is ignored on input.
GammaThresholds gamma_thresholds(const DimensionalParams& p);
GammaThresholds gamma_thresholds_closed_form(const DimensionalParams& p);

enum class EradicationCase { BothNegative, Straddling, BothPositive, Degenerate };
const char* eradication_case_name(EradicationCase c);
EradicationCase eradication_case(const GammaThresholds& g);
// Whether gamma lies in the eradication set of its case.
bool eradication_predicted(double gamma, const GammaThresholds& g);

struct NormalFormCoeffs {
  double xi1 = 0.0, xi2 = 0.0, xi3 = 0.0, xi4 = 0.0;
  double xi5 = 0.0, xi6 = 0.0, xi7 = 0.0, xi8 = 0.0;
  double zeta = 0.0;
  double eta = 0.0;
  std::optional<double> chi;
  bool has_higher = false;  // xi5..xi8 filled
};

// Displayed closed forms; x_star must be the double equilibrium.
NormalFormCoeffs xi_coefficients(const DimensionlessParams& p, double x_star, bool higher = false);
// Same coefficients from Taylor jets of the vector field at (x*, x*/n).
NormalFormCoeffs xi_coefficients_jet(const DimensionlessParams& p, double x_star);

// The rational zeta and eta of the notation block.
double zeta_notation(const DimensionlessParams& p, double x_star);
double eta_notation(const DimensionlessParams& p, double x_star);

struct Bt3Critical {
  double x_star = 0.0;
  double vartheta = 0.0;  // a x*
  double c_star = 0.0;
  double n_star = 0.0;
  double b_star = 0.0;
};

// Throws DegenerateDenominator when 2ax*+3 <= 0 or the c* denominator vanishes.
Bt3Critical bt3_critical(double a, double m);

// b solving eta = 0 for given (a, c, m, n) at x*.
double b_for_eta_zero(double a, double c, double m, double n);

inline constexpr double kEtaZeroTol = 1e-6;

// xi-form chi; throws EtaNotZero unless |eta| < tol*max(1,|zeta|).
double chi(const DimensionlessParams& p, double x_star, double tol = kEtaZeroTol);
double chi_from_xi(const NormalFormCoeffs& xi, double n);
// Rational vartheta-form at a codim-3 point (valid where b = b*, c = c*, n = n*).
double chi_rational(double a, double m);
// hbar(x*) of the positivity argument
double hbar(double vartheta, double x_star);
// chi through the a_i -> c_i chain (c5 - c2 c3)
double chi_chain(const NormalFormCoeffs& xi, double n);

}  // namespace bifurcato
