#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "bifurcato/model.hpp"
#include "bifurcato/rng.hpp"

// Independent re-derivations used as test oracles. Nothing here calls the
// library's own solvers.
namespace oracle {

using bifurcato::DimensionlessParams;

inline bool rel_close(double a, double b, double rel, double abs_floor = 0.0) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + abs_floor;
}

// Random parameters satisfying the validity bound, spread over several decades.
inline DimensionlessParams random_params(bifurcato::Xoshiro256& rng) {
  DimensionlessParams p;
  p.b = std::exp(rng.uniform(std::log(0.01), std::log(5.0)));
  const double lo = -3.0 * std::cbrt(p.b / 4.0);
  p.a = rng.uniform(0.98 * lo, 3.0);
  p.c = std::exp(rng.uniform(std::log(0.005), std::log(1.0)));
  p.m = std::exp(rng.uniform(std::log(0.01), std::log(3.0)));
  p.n = std::exp(rng.uniform(std::log(0.01), std::log(3.0)));
  return p;
}

// Vector field written out from the model equations with the numerator and
// denominator kept separate.
inline std::array<double, 2> field(double x, double y, const DimensionlessParams& p) {
  const double num = x * x * x * (1.0 - p.c * x - p.c * y);
  const double den = 1.0 + x * (p.a + p.b * x * x);
  return {num / den - p.m * x, x - p.n * y};
}

// Central-difference Jacobian of oracle::field.
inline std::array<double, 4> fd_jacobian(double x, double y, const DimensionlessParams& p, double h = 1e-6) {
  const double hx = h * std::max(1.0, std::abs(x)), hy = h * std::max(1.0, std::abs(y));
  const auto fxp = field(x + hx, y, p), fxm = field(x - hx, y, p);
  const auto fyp = field(x, y + hy, p), fym = field(x, y - hy, p);
  return {(fxp[0] - fxm[0]) / (2 * hx), (fyp[0] - fym[0]) / (2 * hy), (fxp[1] - fxm[1]) / (2 * hx),
          (fyp[1] - fym[1]) / (2 * hy)};
}

// Roots of c3 x^3 + c2 x^2 + c1 x + c0 from the companion matrix.
inline std::vector<std::complex<double>> cubic_roots(double c3, double c2, double c1, double c0) {
  Eigen::Matrix3d C = Eigen::Matrix3d::Zero();
  C(0, 0) = -c2 / c3;
  C(0, 1) = -c1 / c3;
  C(0, 2) = -c0 / c3;
  C(1, 0) = 1.0;
  C(2, 1) = 1.0;
  Eigen::EigenSolver<Eigen::Matrix3d> es(C, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < 3; ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

// Equilibria off the origin satisfy x^2 (1 - c x (n+1)/n) = m (1 + a x + b x^3);
// multiplied by -n this is the cubic below.
inline std::array<double, 4> equilibrium_cubic(const DimensionlessParams& p) {
  return {p.c * (p.n + 1.0) + p.b * p.m * p.n, -p.n, p.a * p.m * p.n, p.m * p.n};
}

// Real roots (|Im| small) sorted ascending.
inline std::vector<double> real_equilibrium_roots(const DimensionlessParams& p, double imag_tol = 1e-7) {
  const auto c = equilibrium_cubic(p);
  std::vector<double> out;
  for (const auto& z : cubic_roots(c[0], c[1], c[2], c[3]))
    if (std::abs(z.imag()) <= imag_tol * std::max(1.0, std::abs(z))) out.push_back(z.real());
  std::sort(out.begin(), out.end());
  return out;
}

// Eigenvalues of a real 2x2 matrix.
inline std::array<std::complex<double>, 2> eig2(double a11, double a12, double a21, double a22) {
  const double tr = a11 + a22, det = a11 * a22 - a12 * a21;
  const std::complex<double> s = std::sqrt(std::complex<double>(tr * tr / 4.0 - det));
  return {tr / 2.0 + s, tr / 2.0 - s};
}

// Simpson quadrature of f over [lo, hi].
template <class F>
double simpson(F f, double lo, double hi, int n = 2000) {
  const double h = (hi - lo) / n;
  double s = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) s += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace oracle
