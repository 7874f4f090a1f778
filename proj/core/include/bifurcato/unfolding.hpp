#pragma once

#include <array>
#include <string>
#include <vector>

#include "bifurcato/critical_loci.hpp"
#include "bifurcato/model.hpp"

namespace bifurcato {

// Labeled point cloud; 2-D samples leave the third coordinate at zero.
struct CurveSample {
  std::string label;
  int dim = 2;
  std::vector<std::array<double, 3>> points;
  std::string parameterization;
  // grid values for which no root was bracketed
  std::vector<double> skipped;
  bool truncated_asymptotic = false;
};

// 2-jets of mu1, mu2 in (eps1, eps2) = (c - c*, n - n*).
struct BT2Jet {
  double r1 = 0, r2 = 0, r3 = 0, r4 = 0, r5 = 0;
  double s1 = 0, s2 = 0, s3 = 0, s4 = 0, s5 = 0;
  double upsilon = 0;
  double zeta = 0, eta = 0;

  double mu1(double e1, double e2) const { return r1 * e1 + r2 * e2 + r3 * e1 * e1 + r4 * e1 * e2 + r5 * e2 * e2; }
  double mu2(double e1, double e2) const { return s1 * e1 + s2 * e2 + s3 * e1 * e1 + s4 * e1 * e2 + s5 * e2 * e2; }
  double linear_det() const { return r1 * s2 - r2 * s1; }
};

struct Bt2Base {
  DimensionlessParams params;  // c = c*, n = n*
  double x_star = 0.0;
};

// Base point from (a, b, m) via sn_critical.
Bt2Base bt2_base(double a, double b, double m);

// Throws ZetaEtaZero when zeta*eta vanishes.
BT2Jet bt2_jets(const Bt2Base& base);

// (2n*+1) x* eta^5 / (c* n*^2 zeta^4)
double bt2_linear_det_closed_form(const Bt2Base& base, const BT2Jet& jet);

// mu1, mu2 through the composed coordinate changes applied to the quadratic
// Taylor truncation at (eps1, eps2); agrees with the jets to second order.
std::array<double, 2> bt2_mu_transform(const Bt2Base& base, double e1, double e2);

// Default bracket window and scan resolution for the eps2 root search.
struct CurveSolveOptions {
  double lo = -0.5;
  double hi = 0.5;
  double scan_step = 1e-3;
  double bracket_width = 1e-12;
};

// Root of the curve equation for one eps1 nearest to eps2 = 0 with the side
// condition; returns false when none is bracketed.
bool bt2_hopf_eps2(const BT2Jet& jet, double e1, double& e2, const CurveSolveOptions& opt = {});
bool bt2_homoclinic_eps2(const BT2Jet& jet, double e1, double& e2, const CurveSolveOptions& opt = {});
bool bt2_sn_eps2(const BT2Jet& jet, double e1, double& e2, const CurveSolveOptions& opt = {});

// SN+ (eps1 < 0), SN- (eps1 > 0), Hopf, Homoclinic.
std::vector<CurveSample> bt2_curves(const BT2Jet& jet, const std::vector<double>& eps1_grid,
                                    const CurveSolveOptions& opt = {});

// Truncated codim-3 surfaces in (mu1, mu2, mu3).
std::array<double, 3> bt3_hopf_point(double mu1, double mu3);
std::array<double, 3> bt3_homoclinic_point(double mu1, double mu3);
std::array<double, 3> tangency_hom(double u);
std::array<double, 3> tangency_hopf(double u);
std::array<double, 3> snlc_point(double u, double v);

// mu1 <= 0 grid values are used; positive entries are skipped.
std::vector<CurveSample> bt3_surfaces(const std::vector<double>& mu1_grid, const std::vector<double>& mu3_grid,
                                      const std::vector<double>& u_grid, const std::vector<double>& v_grid);

struct Bt3Transversality {
  Bt3Critical point;
  double D = 0.0;  // 1 + a x* + b* x*^3
  double varsigma = 0.0;
  double nondegeneracy = 0.0;  // the vartheta, D polynomial
  double det_closed_form = 0.0;
  std::array<std::array<double, 3>, 3> linear{};  // d mu_i / d eps_j from the displayed first-order terms
  double det_linear = 0.0;
  bool nondegenerate = false;
};

inline constexpr double kNondegeneracyTol = 1e-10;

// Throws DegenerateUnfolding when the polynomial vanishes within tol.
Bt3Transversality bt3_transversality(double a, double m, double tol = kNondegeneracyTol);

}  // namespace bifurcato
