#include "bifurcato/critical_loci.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bifurcato/error.hpp"
#include "bifurcato/jet.hpp"

namespace bifurcato {

double x_star(double a, double m) { return a * m + std::sqrt(a * a * m * m + 3.0 * m); }

SnCritical sn_critical(double a, double b, double m) {
  SnCritical out;
  const double x = x_star(a, m);
  const double D = 1.0 + a * x + b * x * x * x;
  // D n^2 + D n + m D - x^2 = 0
  const double disc = D * D - 4.0 * D * (m * D - x * x);
  if (!(D > 0.0) || disc < 0.0) {
    std::ostringstream os;
    os << "no real n*: quadratic discriminant " << disc << " (D = " << D << ")";
    throw Error(ErrorKind::ConditionFailed, os.str());
  }
  const double n = (-D + std::sqrt(disc)) / (2.0 * D);
  if (!(n > 0.0)) {
    std::ostringstream os;
    os << "no positive n*: m D - x*^2 = " << m * D - x * x << " >= 0";
    throw Error(ErrorKind::ConditionFailed, os.str());
  }
  out.x_star = x;
  out.n_star = n;
  out.c_star = n * n * D / (x * x * x);
  out.condition = -b * m * n * x * x * x + n * x * x - a * m * n * x - m * n;
  return out;
}

double sn_c_for_n(double a, double b, double m, double n) {
  const double x = x_star(a, m);
  const double x3 = x * x * x;
  return (-b * m * n * x3 + n * x * x - a * m * n * x - m * n) / ((n + 1.0) * x3);
}

double n_star_notation(double a, double b, double m) {
  const double x = x_star(a, m);
  const double D = 1.0 + a * x + b * x * x * x;
  return 0.5 * (-1.0 + std::sqrt(D * ((1.0 - 4.0 * m) * D + 4.0 * x * x)) / D);
}

CriticalPoint codim2_point(double a, double b, double m) {
  const SnCritical sn = sn_critical(a, b, m);
  CriticalPoint cp;
  cp.x_star = sn.x_star;
  cp.y_star = sn.x_star / sn.n_star;
  cp.n_star = sn.n_star;
  cp.c_star = sn.c_star;
  cp.regime = Regime::Codim2;
  return cp;
}

double RhoQuadratic::scale() const { return std::max({std::abs(A), std::abs(B), std::abs(C), 1e-300}); }

RhoQuadratic rho_tilde(double a, double c, double m, double n) {
  const double m2 = m * m, m3 = m2 * m, n2 = n * n, a3 = a * a * a;
  RhoQuadratic q;
  q.A = 27.0 * m3 * n2;
  q.B = 4.0 * a3 * m3 * n2 + 18.0 * a * m2 * n2 + 54.0 * c * m2 * n * (n + 1.0);
  q.C = 27.0 * c * c * m * (n + 1.0) * (n + 1.0) + 2.0 * a * c * m * (2.0 * a * a * m + 9.0) * n * (n + 1.0) -
        (4.0 + a * a * m) * n2;
  return q;
}

BRoots b_roots(double a, double c, double m, double n) {
  const RhoQuadratic q = rho_tilde(a, c, m, n);
  const double disc = q.B * q.B - 4.0 * q.A * q.C;
  if (disc < 0.0) {
    std::ostringstream os;
    os << "rho(b) has no real roots (discriminant " << disc << ")";
    throw Error(ErrorKind::ComplexRoots, os.str());
  }
  // cancellation-free pair
  const double t = -0.5 * (q.B + std::copysign(std::sqrt(disc), q.B));
  double r1 = t / q.A;
  double r2 = (t != 0.0) ? q.C / t : -r1;
  if (r1 > r2) std::swap(r1, r2);
  return BRoots{r1, r2};
}

BRoots b_roots_closed_form(double a, double c, double m, double n) {
  const double m2 = m * m, m3 = m2 * m;
  const double common = 2.0 * a * a * a * m3 * n + 9.0 * a * m2 * n + 27.0 * c * m2 * (n + 1.0);
  const double rad = 2.0 * n * std::pow(m * (a * a * m + 3.0), 1.5);
  const double den = 27.0 * m3 * n;
  return BRoots{-(common + rad) / den, -(common - rad) / den};
}

namespace {

struct ThresholdScales {
  double s, a, c, m, n;
};

ThresholdScales threshold_scales(const DimensionalParams& p) {
  ThresholdScales t;
  t.s = std::sqrt(p.d * p.mu / (p.kappa * p.Lambda));
  t.a = p.beta * t.s;
  t.c = p.d / p.Lambda * t.s;
  t.m = (p.d + p.mu) / p.mu;
  t.n = (p.d + p.delta) / p.mu;
  return t;
}

}  // namespace

GammaThresholds gamma_thresholds(const DimensionalParams& p) {
  const ThresholdScales t = threshold_scales(p);
  const BRoots r = b_roots(t.a, t.c, t.m, t.n);
  const double k = p.kappa * p.Lambda / (p.d * p.mu * t.s);
  return GammaThresholds{r.b1 * k, r.b2 * k};
}

GammaThresholds gamma_thresholds_closed_form(const DimensionalParams& p) {
  const double be = p.beta, d = p.d, mu = p.mu, de = p.delta, ka = p.kappa, L = p.Lambda;
  const double lin = -mu * (2.0 * be * be * be / (27.0 * mu) + be * ka * L / (3.0 * d * mu * (d + mu)) +
                            ka * (d + de + mu) / (mu * (d + de) * (d + mu)));
  const double rad = 2.0 / 27.0 * std::pow((be * be * d * d + be * be * d * mu + 3.0 * ka * L) / (d * (d + mu)), 1.5);
  return GammaThresholds{lin - rad, lin + rad};
}

const char* eradication_case_name(EradicationCase c) {
  switch (c) {
    case EradicationCase::BothNegative: return "BothNegative";
    case EradicationCase::Straddling: return "Straddling";
    case EradicationCase::BothPositive: return "BothPositive";
    case EradicationCase::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

EradicationCase eradication_case(const GammaThresholds& g) {
  if (g.gamma1 < g.gamma2 && g.gamma2 < 0.0) return EradicationCase::BothNegative;
  if (g.gamma1 < 0.0 && 0.0 < g.gamma2) return EradicationCase::Straddling;
  if (0.0 < g.gamma1 && g.gamma1 < g.gamma2) return EradicationCase::BothPositive;
  return EradicationCase::Degenerate;
}

bool eradication_predicted(double gamma, const GammaThresholds& g) {
  if (!(gamma > 0.0)) return false;
  switch (eradication_case(g)) {
    case EradicationCase::BothNegative: return true;
    case EradicationCase::Straddling: return gamma > g.gamma2;
    case EradicationCase::BothPositive: return gamma < g.gamma1 || gamma > g.gamma2;
    case EradicationCase::Degenerate: return false;
  }
  return false;
}

NormalFormCoeffs xi_coefficients(const DimensionlessParams& p, double x, bool higher) {
  const double a = p.a, b = p.b, c = p.c, m = p.m, n = p.n;
  const double D = 1.0 + a * x + b * x * x * x;
  const double D2 = D * D, D3 = D2 * D, D4 = D3 * D;
  const double x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x, x6 = x5 * x, x7 = x6 * x, x8 = x7 * x,
               x9 = x8 * x;
  const double a2 = a * a, a3 = a2 * a, b2 = b * b, b3 = b2 * b, b4 = b3 * b;
  NormalFormCoeffs xi;
  xi.xi1 = n;
  xi.xi2 = -n * n;
  xi.xi3 = -x * (-2.0 * a2 * m * n - 6.0 * n + (9.0 * b * m * n + 12.0 * c * n + 6.0 * c) * x + 4.0 * a * c * n * x2 +
                 3.0 * b * n * x3) /
           (2.0 * n * D2);
  xi.xi4 = -c * x2 * (2.0 * a * x + 3.0) / D2;
  xi.zeta = xi.xi3 - xi.xi1 * xi.xi4 / xi.xi2;
  xi.eta = 2.0 * xi.xi3 - xi.xi1 * xi.xi4 / xi.xi2;
  if (!higher) return xi;

  xi.has_higher = true;
  xi.xi5 = -(x3 * (a2 * c * n + 13.0 * b * n) - a2 * m * n +
             x5 * (-4.0 * a * b2 * m * n - 7.0 * a * b * c * n - 4.0 * a * b * c) +
             x4 * (4.0 * a * b * n - 19.0 * b2 * m * n - 19.0 * b * c * n - 13.0 * b * c) +
             x2 * (-4.0 * a * b * m * n + 2.0 * a * c * n - a * c) + x * (a * n + 4.0 * b * m * n + 4.0 * c * n + c) -
             4.0 * b2 * n * x6 + x7 * (4.0 * b3 * m * n + 4.0 * b2 * c * n + 4.0 * b2 * c) - n) /
           (n * D3);
  xi.xi6 = -c * x * (a2 * x2 - 3.0 * a * b * x4 + 3.0 * a * x - 6.0 * b * x3 + 3.0) / D3;
  xi.xi7 = -(a3 * m * n + x5 * (-a2 * b2 * m * n - 5.0 * a2 * b * c * n - a2 * b * c - 35.0 * b2 * n) +
             x4 * (a2 * b * n + 5.0 * a * b2 * m * n - 14.0 * a * b * c * n) +
             x2 * (5.0 * a2 * b * m * n + a2 * c * n + a2 * c + 14.0 * b * n) +
             x * (-a2 * n - 5.0 * a * b * m * n - a * c * n - a * c) +
             x7 * (10.0 * a * b3 * m * n + 14.0 * a * b2 * c * n + 10.0 * a * b2 * c) +
             x6 * (-10.0 * a * b2 * n + 45.0 * b3 * m * n + 45.0 * b2 * c * n + 35.0 * b2 * c) + a * n +
             5.0 * b3 * n * x8 + x3 * (-30.0 * b2 * m * n - 30.0 * b * c * n - 14.0 * b * c) +
             x9 * (-5.0 * b4 * m * n - 5.0 * b3 * c * n - 5.0 * b3 * c) + b * m * n + c * n) /
           (n * D4);
  xi.xi8 = c * (2.0 * b * x3 * (2.0 * a2 * x2 + 7.0 * a * x + 8.0) - 2.0 * b2 * x6 * (2.0 * a * x + 5.0) - 1.0) / D4;
  return xi;
}

NormalFormCoeffs xi_coefficients_jet(const DimensionlessParams& p, double x_star) {
  // f(x* + s, y*) and df/dy = -c x^3 / D as jets in s
  const Jet X = Jet::variable(x_star);
  const Jet D = 1.0 + p.a * X + p.b * X * X * X;
  const Jet X3D = X * X * X / D;
  const double y_star = x_star / p.n;
  const Jet f = X3D * (1.0 - p.c * X - p.c * y_star) - p.m * X;
  const Jet fy = -p.c * X3D;
  NormalFormCoeffs xi;
  xi.xi1 = f[1];
  xi.xi2 = fy[0];
  xi.xi3 = f[2];
  xi.xi4 = fy[1];
  xi.xi5 = f[3];
  xi.xi6 = fy[2];
  xi.xi7 = f[4];
  xi.xi8 = fy[3];
  xi.zeta = xi.xi3 - xi.xi1 * xi.xi4 / xi.xi2;
  xi.eta = 2.0 * xi.xi3 - xi.xi1 * xi.xi4 / xi.xi2;
  xi.has_higher = true;
  return xi;
}

double zeta_notation(const DimensionlessParams& p, double x) {
  const double a = p.a, b = p.b, c = p.c, m = p.m, n = p.n;
  const double D = 1.0 + a * x + b * x * x * x;
  return -x *
         (-2.0 * a * a * m * n - 6.0 * n + (9.0 * b * m * n + 12.0 * c * n + 12.0 * c) * x +
          (4.0 * a * c + 4.0 * a * c * n) * x * x + 3.0 * b * n * x * x * x) /
         (2.0 * n * D * D);
}

double eta_notation(const DimensionlessParams& p, double x) {
  const double a = p.a, b = p.b, c = p.c, m = p.m, n = p.n;
  const double D = 1.0 + a * x + b * x * x * x;
  return -x *
         (-2.0 * a * a * m * n - 6.0 * n + (9.0 * b * m * n + 12.0 * c * n + 9.0 * c) * x +
          (2.0 * a * c + 4.0 * a * c * n) * x * x + 3.0 * b * n * x * x * x) /
         (n * D * D);
}

double b_for_eta_zero(double a, double c, double m, double n) {
  const double x = x_star(a, m);
  const double x2 = x * x;
  return (2.0 * a * a * m * n - 4.0 * a * c * n * x2 - 2.0 * a * c * x2 - 12.0 * c * n * x - 9.0 * c * x + 6.0 * n) /
         (9.0 * m * n * x + 3.0 * n * x2 * x);
}

Bt3Critical bt3_critical(double a, double m) {
  Bt3Critical out;
  const double x = x_star(a, m);
  const double th = a * x;
  if (!(2.0 * th + 3.0 > 0.0)) {
    std::ostringstream os;
    os << "2 a x* + 3 = " << 2.0 * th + 3.0 << " <= 0";
    throw Error(ErrorKind::DegenerateDenominator, os.str());
  }
  const double den =
      x * (m * (4.0 * th * th + 60.0 * th + 90.0) + 8.0 * th * th + 30.0 * th - 18.0 * x * x + 27.0);
  if (!(std::abs(den) > 1e-14 * std::max(1.0, x))) {
    throw Error(ErrorKind::DegenerateDenominator, "c* denominator vanishes");
  }
  out.x_star = x;
  out.vartheta = th;
  out.c_star = 4.0 * m * (th + 3.0) * (th + 3.0) / den;
  out.n_star = 2.0 * m * (th + 3.0) / (2.0 * th + 3.0);
  out.b_star = b_for_eta_zero(a, out.c_star, m, out.n_star);
  return out;
}

double chi_from_xi(const NormalFormCoeffs& xi, double n) {
  const double x3 = xi.xi3, x5 = xi.xi5, x6 = xi.xi6, x7 = xi.xi7, x8 = xi.xi8;
  const double n5 = n * n * n * n * n;
  const double x3_2 = x3 * x3;
  return -(3.0 * n * n * x5 * x5 + x3_2 * (8.0 * n * x5 + 6.0 * x6) + n * x3 * (4.0 * n * x7 + 3.0 * x8) +
           5.0 * n * x5 * x6 + 4.0 * x3_2 * x3_2 + 2.0 * x6 * x6) /
         (n5 * x3_2 * x3_2);
}

double chi_chain(const NormalFormCoeffs& xi, double n) {
  const double a1 = xi.xi3 - xi.xi1 * xi.xi4 / xi.xi2;
  const double a2 = xi.xi4 / xi.xi2;
  const double a3 = xi.xi5 - xi.xi1 * xi.xi6 / xi.xi2;
  const double a4 = xi.xi6 / xi.xi2;
  const double a5 = xi.xi7 - xi.xi1 * xi.xi8 / xi.xi2;
  const double a6 = xi.xi8 / xi.xi2;
  const double c2 = a3 / (n * a1 * a1);
  const double c3 = (a2 * a2 * n + 2.0 * a4 * n + 4.0 * a1 * a2 + 6.0 * a3) / (2.0 * a1 * a1 * n * n);
  const double c5 = (-a2 * a2 * a2 * n + a2 * (8.0 * a4 * n + 30.0 * a3) + 6.0 * (a6 * n + 4.0 * a5) +
                     a1 * (4.0 * a4 - 8.0 * a2 * a2)) /
                    (6.0 * a1 * a1 * a1 * n * n * n);
  return c5 - c2 * c3;
}

double chi(const DimensionlessParams& p, double x_star, double tol) {
  const NormalFormCoeffs xi = xi_coefficients(p, x_star, true);
  if (!(std::abs(xi.eta) < tol * std::max(1.0, std::abs(xi.zeta)))) {
    std::ostringstream os;
    os << "eta = " << xi.eta << " is not zero";
    throw Error(ErrorKind::EtaNotZero, os.str());
  }
  return chi_from_xi(xi, p.n);
}

double hbar(double th, double x) {
  const double t3 = th + 3.0, t23 = 2.0 * th + 3.0;
  const double t3_3 = t3 * t3 * t3;
  const double t23_2 = t23 * t23;
  return 32.0 * t3_3 * t3_3 * x * x * x * x +
         16.0 * t3_3 * t23_2 * (2.0 * th * th + 10.0 * th + 15.0) * x * x +
         t23_2 * t23_2 * (2.0 * th * th * th + 21.0 * th * th + 108.0 * th + 162.0);
}

double chi_rational(double a, double m) {
  const double x = x_star(a, m);
  const double th = a * x;
  const double x2 = x * x;
  const double psi = 16.0 * a * a * a * x2 * x + 4.0 * a * a * (x2 + 21.0) * x2 + 24.0 * a * (x2 + 6.0) * x +
                     9.0 * (4.0 * x2 + 9.0);
  const double t23 = 2.0 * th + 3.0;
  const double num = std::pow(t23, 10);
  const double den = 8.0 * std::pow(x, 10) * std::pow(th + 3.0, 7) * psi * psi;
  return num / den * hbar(th, x);
}

}  // namespace bifurcato
