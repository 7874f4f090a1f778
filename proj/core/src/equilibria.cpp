#include "bifurcato/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bifurcato/error.hpp"

namespace bifurcato {

ReducedCubic reduce(const DimensionlessParams& p) {
  ReducedCubic rc;
  rc.K = p.c * (p.n + 1.0) + p.b * p.m * p.n;
  rc.theta = -p.n / rc.K;
  rc.p1 = p.a * p.m * p.n / rc.K;
  rc.q1 = p.m * p.n / rc.K;
  const double th = rc.theta;
  rc.p = rc.p1 - th * th / 3.0;
  rc.q = 2.0 * th * th * th / 27.0 - th * rc.p1 / 3.0 + rc.q1;
  return rc;
}

double discriminant(const ReducedCubic& rc) {
  const double p3 = rc.p / 3.0, q2 = rc.q / 2.0;
  return p3 * p3 * p3 + q2 * q2;
}

double discriminant(const DimensionlessParams& p) { return discriminant(reduce(p)); }

double discriminant_expanded(const DimensionlessParams& p) {
  const double a = p.a, b = p.b, c = p.c, m = p.m, n = p.n;
  const double K = c * (n + 1.0) + b * m * n;
  const double K2 = K * K;
  const double a2 = a * a, a3 = a2 * a, m2 = m * m, m3 = m2 * m, n2 = n * n;
  const double bracket = 2.0 * c * m * n * (n + 1.0) * (2.0 * a3 * m + 9.0 * a + 27.0 * b * m) +
                         n2 * (4.0 * a3 * b * m3 - a2 * m + 18.0 * a * b * m2 + 27.0 * b * b * m3 - 4.0) +
                         27.0 * c * c * m * (n + 1.0) * (n + 1.0);
  return m * n2 / (108.0 * K2 * K2) * bracket;
}

double discriminant_scale(const ReducedCubic& rc) {
  const double p3 = std::abs(rc.p / 3.0), q2 = rc.q / 2.0;
  return std::max({p3 * p3 * p3, q2 * q2, 1e-300});
}

int discriminant_sign(const ReducedCubic& rc, double tol) {
  const double D = discriminant(rc);
  if (std::abs(D) < tol * discriminant_scale(rc)) return 0;
  return D > 0.0 ? 1 : -1;
}

std::vector<double> depressed_cubic_roots(const ReducedCubic& rc, double tol) {
  const double p = rc.p, q = rc.q;
  const int sign = discriminant_sign(rc, tol);
  std::vector<double> z;
  if (sign > 0) {
    const double s = std::sqrt(discriminant(rc));
    z.push_back(std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s));
  } else if (sign == 0) {
    if (p >= 0.0) {
      z.push_back(0.0);  // p = q = 0 up to the band: triple root
    } else {
      // The double root sits at the critical point 3 z^2 + p = 0 with the sign of q.
      const double zd = std::copysign(std::sqrt(-p / 3.0), q);
      z.push_back(-2.0 * zd);
      z.push_back(zd);
    }
  } else {
    const double r = 2.0 * std::sqrt(-p / 3.0);
    double arg = 3.0 * q / (2.0 * p) * std::sqrt(-3.0 / p);
    arg = std::clamp(arg, -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) z.push_back(r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0));
  }
  std::sort(z.begin(), z.end());
  return z;
}

double equilibrium_cubic(double x, const DimensionlessParams& p) {
  const double K = p.c * (p.n + 1.0) + p.b * p.m * p.n;
  return ((K * x - p.n) * x + p.a * p.m * p.n) * x + p.m * p.n;
}

double equilibrium_residual_scaled(double x, const DimensionlessParams& p) {
  const double K = p.c * (p.n + 1.0) + p.b * p.m * p.n;
  const double ax = std::abs(x);
  const double scale = K * ax * ax * ax + p.n * ax * ax + std::abs(p.a * p.m * p.n) * ax + p.m * p.n;
  return std::abs(x * equilibrium_cubic(x, p)) / std::max(scale * std::max(ax, 1.0), 1e-300);
}

namespace {

double newton_polish(double x, const DimensionlessParams& p, bool on_derivative) {
  const double K = p.c * (p.n + 1.0) + p.b * p.m * p.n;
  for (int it = 0; it < 3; ++it) {
    double f, df;
    if (on_derivative) {
      f = (3.0 * K * x - 2.0 * p.n) * x + p.a * p.m * p.n;
      df = 6.0 * K * x - 2.0 * p.n;
    } else {
      f = equilibrium_cubic(x, p);
      df = (3.0 * K * x - 2.0 * p.n) * x + p.a * p.m * p.n;
    }
    if (df == 0.0 || !std::isfinite(df)) break;
    const double step = f / df;
    if (!std::isfinite(step)) break;
    x -= step;
    if (std::abs(step) <= 1e-16 * std::abs(x)) break;
  }
  return x;
}

}  // namespace

std::vector<Equilibrium> positive_equilibria(const DimensionlessParams& p, double tol) {
  const ReducedCubic rc = reduce(p);
  const int sign = discriminant_sign(rc, tol);
  const std::vector<double> z = depressed_cubic_roots(rc, tol);
  std::vector<Equilibrium> out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const bool is_double = sign == 0 && z.size() == 2 && std::abs(z[i]) < std::abs(z[1 - i]);
    double x = z[i] - rc.theta / 3.0;
    x = newton_polish(x, p, is_double);
    if (!(x > kPositiveRootFloor)) continue;
    Equilibrium e;
    e.x = x;
    e.y = x / p.n;
    e.multiplicity = (sign == 0) ? (z.size() == 1 ? 3 : (is_double ? 2 : 1)) : 1;
    e.kind = EquilibriumKind::Endemic;
    out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [](const Equilibrium& l, const Equilibrium& r) { return l.x < r.x; });
  return out;
}

std::vector<Equilibrium> solve_equilibria(const DimensionlessParams& p, double tol) {
  std::vector<Equilibrium> out;
  out.push_back(Equilibrium{0.0, 0.0, 1, EquilibriumKind::DiseaseFree});
  for (const auto& e : positive_equilibria(p, tol)) out.push_back(e);
  return out;
}

int root_multiplicity(double z0, const ReducedCubic& rc, double tol) {
  const double az = std::abs(z0);
  const double f = (z0 * z0 + rc.p) * z0 + rc.q;
  const double f_scale = std::max({az * az * az, std::abs(rc.p) * az, std::abs(rc.q), 1.0});
  if (std::abs(f) > tol * f_scale) throw Error(ErrorKind::NotARoot, "z0 is not a root of z^3 + p z + q");
  const double f1 = 3.0 * z0 * z0 + rc.p;
  const double f1_scale = std::max({3.0 * az * az, std::abs(rc.p), 1.0});
  if (std::abs(f1) > tol * f1_scale) return 1;
  const double f2 = 6.0 * z0;
  if (std::abs(f2) > tol * std::max(6.0 * az, 1.0)) return 2;
  return 3;
}

}  // namespace bifurcato
