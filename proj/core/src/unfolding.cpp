#include "bifurcato/unfolding.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include <boost/math/tools/roots.hpp>

#include "bifurcato/error.hpp"

namespace bifurcato {

Bt2Base bt2_base(double a, double b, double m) {
  const SnCritical sn = sn_critical(a, b, m);
  Bt2Base base;
  base.params = DimensionlessParams{a, b, sn.c_star, m, sn.n_star};
  base.x_star = sn.x_star;
  return base;
}

BT2Jet bt2_jets(const Bt2Base& base) {
  const double a = base.params.a, b = base.params.b, c = base.params.c, n = base.params.n;
  const double x = base.x_star;
  const NormalFormCoeffs xi = xi_coefficients(base.params, x);
  const double z = xi.zeta, e = xi.eta;
  if (!(std::abs(z * e) > 1e-14)) {
    std::ostringstream os;
    os << "zeta*eta = " << z * e;
    throw Error(ErrorKind::ZetaEtaZero, os.str());
  }
  const double x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x, x6 = x5 * x;
  const double D = 1.0 + a * x + b * x3;
  const double D2 = D * D, D3 = D2 * D, D4 = D3 * D;
  const double n2 = n * n, n3 = n2 * n, n4 = n3 * n;
  const double c2 = c * c;
  const double z2 = z * z, z3 = z2 * z, z4 = z3 * z;
  const double e2 = e * e, e3 = e2 * e, e4 = e3 * e;
  const double t = 2.0 * a * x + 3.0;  // 2ax*+3

  BT2Jet J;
  J.zeta = z;
  J.eta = e;
  const double U = x2 / (n * D3) *
                   (x2 * (3.0 * a * a * n + a * a) + x4 * (-a * b * n - 3.0 * a * b) + x * (8.0 * a * n + 3.0 * a) +
                    x3 * (-3.0 * b * n - 6.0 * b) + 6.0 * n + 3.0);
  J.upsilon = U;

  J.r1 = -(n + 1.0) * x * e4 / (c * n * z3);
  J.r2 = x * e4 / (n2 * z3);
  J.r3 = e3 / (4.0 * c2 * z4 * n2 * D2) *
         (n2 * (e * (43.0 * a * a * x2 - 2.0 * a * x * (b * x3 - 65.0) - b * b * x6 - 2.0 * b * x3 + 98.0) +
                4.0 * c * U * x * (8.0 * z - 3.0 * e) * D2) +
          n4 * (-(32.0 * z * t * D -
                  e * (95.0 * a * a * x2 + 10.0 * a * x * (5.0 * b * x3 + 26.0) - b * b * x6 + 76.0 * b * x3 + 176.0))) +
          2.0 * c * n * x * (2.0 * U * (8.0 * z - 3.0 * e) * D2 + e * x2 * (13.0 * a * x - b * x3 + 20.0)) -
          2.0 * n3 * t * (16.0 * z * D - e * (35.0 * a * x + 13.0 * b * x3 + 46.0)) + 14.0 * c * e * x3 * t);
  J.r4 = e3 / (2.0 * c * z4 * n3 * D3) *
         ((-c * e * x * D *
               (x2 * (2.0 * n * (a * a * U + 19.0) + 63.0) + 4.0 * a * b * U * n * x4 +
                x3 * (a * (25.0 * n + 42.0) + 4.0 * b * U * n) + 4.0 * a * U * n * x + 2.0 * b * b * U * n * x6 -
                b * n * x5 + 2.0 * U * n) +
           c * t *
               (4.0 * n2 *
                    (x2 * (2.0 * a * a * U + 3.0) + 4.0 * a * b * U * x4 + 2.0 * x3 * (a + 2.0 * b * U) +
                     4.0 * a * U * x + 2.0 * b * b * U * x6 + 2.0 * U) +
                n * x2 * (a * x * (8.0 - 27.0 * e * x) - 5.0 * b * e * x4 - 38.0 * e * x + 12.0) -
                11.0 * e * x3 * t) +
           e * n * D3 * (2.0 * e * n * x + n + 3.0 * e * x) - 8.0 * c * n2 * x2 * t * t));
  J.r5 = -e3 / (4.0 * z4 * x * n4 * D2) *
         (e * n * x * D2 * (n + 6.0 * e * x) - 28.0 * c * e * x4 * t + n2 * t * t * (8.0 * n - 11.0 * e * x));

  J.s1 = e * (e * x * (-2.0 - a * x + b * x3) + t * (n2 - e * n * x)) / (2.0 * c * z2 * x * D);
  J.s2 = e * (e * x * (e - 2.0 * z) - n * (2.0 * z + e)) / (2.0 * z2 * n2);
  J.s3 = t / (2.0 * c * z3 * n * D4) *
         ((e * (n * x * (3.0 * a * x - b * x3 + 5.0) + 2.0 * x * (a * x - b * x3 + 2.0)) - n2 * t) *
          (-c * U * x * D + e * (n * x + x) * (3.0 * a * x + b * x3 + 4.0) + n2 * t));
  J.s4 = -1.0 / (4.0 * c * z3 * n4 * D4) *
         (-c * n2 * x * t * t *
              (c * (2.0 * U * n * D + e * x * (4.0 * a * U * x + 4.0 * b * U * x3 + 4.0 * U + 7.0 * x2)) -
               2.0 * e2 * x * (n * (9.0 * a * x + b * x3 + 13.0) + 8.0 * a * x + 12.0)) +
          c2 * e * x2 * t *
              (6.0 * U * n2 * D2 + n * x2 * (2.0 * a * x * (4.0 - 3.0 * e * x) - 8.0 * b * e * x4 - 5.0 * e * x + 12.0) +
               2.0 * e * x3 * t) -
          c * e2 * n * x2 * t * D2 * (n * (e * x + 14.0) + 2.0 * e * x) + 2.0 * e3 * n3 * D4 +
          c * n4 * t * t * t * (3.0 * n + 2.0 * e * x));
  J.s5 = 1.0 / (4.0 * z3 * n4 * D4) *
         (-c * e2 * x2 * t * D2 * (13.0 * n + 2.0 * e * x) + c * e * n * x * t * t * D * (7.0 * n + 2.0 * e * x) +
          3.0 * e3 * n2 * D4 - c * n * t * t * t * (n2 - 4.0 * e2 * x2));
  return J;
}

double bt2_linear_det_closed_form(const Bt2Base& base, const BT2Jet& jet) {
  const double n = base.params.n, c = base.params.c, x = base.x_star;
  const double z = jet.zeta, e = jet.eta;
  return (2.0 * n + 1.0) * x * std::pow(e, 5) / (c * n * n * std::pow(z, 4));
}

std::array<double, 2> bt2_mu_transform(const Bt2Base& base, double e1, double e2) {
  const double a = base.params.a, b = base.params.b, c = base.params.c, m = base.params.m, n = base.params.n;
  const double x = base.x_star;
  const double x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  const double D = 1.0 + a * x + b * x3;
  const double D2 = D * D, D3 = D2 * D;
  const double d1 = -n * (n + 1.0) * e1 * x / c;
  const double d2 = n - e1 * x3 / (n * D2) * (b * n * x3 + 3.0 * a * n * x + 2.0 * a * x + 4.0 * n + 3.0);
  const double d3 = -(1.0 + e1 / c) * n * n;
  const double d4 = -(x2 * e1 / (n * D3)) *
                        (-a * b * (n + 3.0) * x4 - 3.0 * b * (n + 2.0) * x3 + a * a * (3.0 * n + 1.0) * x2 +
                         a * (8.0 * n + 3.0) * x + 6.0 * n + 3.0) -
                    x / (2.0 * n * D2) *
                        (-2.0 * a * a * m * n - 6.0 * n + (9.0 * b * m * n + 12.0 * c * n + 6.0 * c) * x +
                         4.0 * a * c * n * x2 + 3.0 * b * n * x3);
  const double d5 = -x2 * (2.0 * a * x + 3.0) * (c + e1) / D2;
  const double d6 = -e2 / n * x;
  const double d7 = -(n + e2);
  const double g1_ = -d1 * d7 + d3 * d6;
  const double g2_ = d3 - d2 * d7 + d5 * d6;
  const double g3_ = d2 + d7 - d1 * d5 / d3;
  const double g4_ = d5 - d4 * d7;
  const double g5_ = 2.0 * d4 - d2 * d5 / d3 + d1 * d5 * d5 / (d3 * d3);
  const double g6_ = d5 / d3;
  const double f1 = g1_;
  const double f2 = g2_ - 2.0 * g1_ * g6_;
  const double f3 = g3_;
  const double f4 = g4_ - 2.0 * g2_ * g6_ + g1_ * g6_ * g6_;
  const double f5 = g5_ - g3_ * g6_;
  const double g1 = f1 - f2 * f2 / (4.0 * f4);
  const double g2 = f3 - f2 * f5 / (2.0 * f4);
  const double g3 = f4;
  const double g4 = f5;
  return {g1 * std::pow(g4, 4) / (g3 * g3 * g3), g2 * g4 / g3};
}

namespace {

// Roots of f on [lo, hi] by sign scan and TOMS 748; the root nearest zero
// satisfying accept() wins.
bool nearest_root(const std::function<double(double)>& f, const std::function<bool(double)>& accept,
                  const CurveSolveOptions& opt, double& root) {
  const int steps = static_cast<int>(std::ceil((opt.hi - opt.lo) / opt.scan_step));
  bool found = false;
  double best = 0.0;
  double x0 = opt.lo, f0 = f(x0);
  for (int i = 1; i <= steps; ++i) {
    const double x1 = std::min(opt.lo + i * opt.scan_step, opt.hi);
    const double f1 = f(x1);
    double r = std::numeric_limits<double>::quiet_NaN();
    if (f0 == 0.0) {
      r = x0;
    } else if (f0 * f1 < 0.0) {
      std::uintmax_t iters = 200;
      const double width = opt.bracket_width;
      auto tol = [width](double l, double h) { return std::abs(h - l) <= width; };
      const auto br = boost::math::tools::toms748_solve(f, x0, x1, f0, f1, tol, iters);
      r = 0.5 * (br.first + br.second);
    }
    if (std::isfinite(r) && accept(r) && (!found || std::abs(r) < std::abs(best))) {
      best = r;
      found = true;
    }
    x0 = x1;
    f0 = f1;
  }
  if (found) root = best;
  return found;
}

}  // namespace

bool bt2_hopf_eps2(const BT2Jet& jet, double e1, double& e2, const CurveSolveOptions& opt) {
  auto f = [&](double t) {
    const double m2 = jet.mu2(e1, t);
    return jet.mu1(e1, t) + m2 * m2;
  };
  return nearest_root(f, [&](double t) { return jet.mu2(e1, t) > 0.0; }, opt, e2);
}

bool bt2_homoclinic_eps2(const BT2Jet& jet, double e1, double& e2, const CurveSolveOptions& opt) {
  auto f = [&](double t) {
    const double m2 = jet.mu2(e1, t);
    return jet.mu1(e1, t) + 49.0 / 25.0 * m2 * m2;
  };
  return nearest_root(f, [&](double t) { return jet.mu2(e1, t) > 0.0; }, opt, e2);
}

bool bt2_sn_eps2(const BT2Jet& jet, double e1, double& e2, const CurveSolveOptions& opt) {
  auto f = [&](double t) { return jet.mu1(e1, t); };
  return nearest_root(f, [&](double t) { return jet.mu2(e1, t) != 0.0; }, opt, e2);
}

std::vector<CurveSample> bt2_curves(const BT2Jet& jet, const std::vector<double>& eps1_grid,
                                    const CurveSolveOptions& opt) {
  CurveSample snp{"SN+", 2, {}, "eps1 < 0, j2 mu1 = 0", {}, false};
  CurveSample snm{"SN-", 2, {}, "eps1 > 0, j2 mu1 = 0", {}, false};
  CurveSample hopf{"Hopf", 2, {}, "j2 mu1 = -(j2 mu2)^2, j2 mu2 > 0", {}, false};
  CurveSample hom{"Homoclinic", 2, {}, "j2 mu1 = -(49/25)(j2 mu2)^2, j2 mu2 > 0", {}, false};
  std::vector<double> grid = eps1_grid;
  std::sort(grid.begin(), grid.end());
  for (double e1 : grid) {
    double e2 = 0.0;
    if (e1 != 0.0) {
      CurveSample& sn = e1 < 0.0 ? snp : snm;
      if (bt2_sn_eps2(jet, e1, e2, opt)) {
        sn.points.push_back({e1, e2, 0.0});
      } else {
        sn.skipped.push_back(e1);
      }
    }
    if (bt2_hopf_eps2(jet, e1, e2, opt)) {
      hopf.points.push_back({e1, e2, 0.0});
    } else {
      hopf.skipped.push_back(e1);
    }
    if (bt2_homoclinic_eps2(jet, e1, e2, opt)) {
      hom.points.push_back({e1, e2, 0.0});
    } else {
      hom.skipped.push_back(e1);
    }
  }
  return {snp, snm, hopf, hom};
}

std::array<double, 3> bt3_hopf_point(double mu1, double mu3) {
  const double s = std::sqrt(-mu1);
  return {mu1, mu3 * s + s * s * s, mu3};
}

std::array<double, 3> bt3_homoclinic_point(double mu1, double mu3) {
  const double s = std::sqrt(-mu1);
  return {mu1, 5.0 / 7.0 * mu3 * s + 103.0 / 77.0 * s * s * s, mu3};
}

std::array<double, 3> tangency_hom(double u) { return {-u * u, 4.0 * u * u * u, 3.0 * u}; }

std::array<double, 3> tangency_hopf(double u) { return {-u * u, -4.0 / 11.0 * u * u * u, -15.0 / 11.0 * u}; }

std::array<double, 3> snlc_point(double u, double v) {
  const double u2 = u * u, v2 = v * v, v3 = v2 * v;
  return {-u2, u * (u2 * (74.0 * v3 - 111.0 * v2 + 33.0) + 3025.0 * (v - 1.0) * v2) / 11.0,
          v2 * (241.0 * u2 * (2.0 * v - 3.0) + 21175.0 * (v - 1.0)) / 55.0 + 2.0 * u2};
}

std::vector<CurveSample> bt3_surfaces(const std::vector<double>& mu1_grid, const std::vector<double>& mu3_grid,
                                      const std::vector<double>& u_grid, const std::vector<double>& v_grid) {
  CurveSample hopf{"Hopf", 3, {}, "mu2 = mu3 (-mu1)^(1/2) + (-mu1)^(3/2) over (mu1, mu3)", {}, true};
  CurveSample hom{"Homoclinic", 3, {}, "mu2 = (5/7) mu3 (-mu1)^(1/2) + (103/77)(-mu1)^(3/2) over (mu1, mu3)", {}, true};
  CurveSample snlc{"SNlc", 3, {}, "Hermite surface over (u, v)", {}, false};
  CurveSample th{"TangencyHom", 3, {}, "(-u^2, 4u^3, 3u)", {}, false};
  CurveSample tp{"TangencyHopf", 3, {}, "(-u^2, -4u^3/11, -15u/11)", {}, false};
  for (double mu1 : mu1_grid) {
    if (mu1 > 0.0) continue;
    for (double mu3 : mu3_grid) {
      hopf.points.push_back(bt3_hopf_point(mu1, mu3));
      hom.points.push_back(bt3_homoclinic_point(mu1, mu3));
    }
  }
  for (double u : u_grid) {
    th.points.push_back(tangency_hom(u));
    tp.points.push_back(tangency_hopf(u));
    for (double v : v_grid) snlc.points.push_back(snlc_point(u, v));
  }
  return {hopf, hom, snlc, th, tp};
}

Bt3Transversality bt3_transversality(double a, double m, double tol) {
  Bt3Transversality out;
  out.point = bt3_critical(a, m);
  const double x = out.point.x_star, th = out.point.vartheta;
  const double b = out.point.b_star, c = out.point.c_star, n = out.point.n_star;
  const double D = 1.0 + a * x + b * x * x * x;
  out.D = D;
  const double t3 = th + 3.0, t23 = 2.0 * th + 3.0;
  const double D2 = D * D, D3 = D2 * D, D4 = D3 * D;
  const double n3 = n * n * n;
  const double x2 = x * x;

  const double t23_2 = t23 * t23, t23_4 = t23_2 * t23_2;
  out.nondegeneracy = 12.0 * (th + 1.0) * t23_4 + 3.0 * th * D4 - 3.0 * th * D3 + t23_2 * (32.0 * th + 69.0) * D2 -
                      t23_2 * (82.0 * th * th + 240.0 * th + 171.0) * D;

  const double lam = t23_2 - (4.0 * th + 9.0) * D;
  const double root = std::sqrt(t23 * lam * lam / (t3 * t3 * D3 * x));
  out.varsigma = -2.0 * std::sqrt(2.0) * th * (5.0 * th + 12.0) / (t3 * t23_2 * D * x * root);
  const double vs45 = std::pow(std::abs(out.varsigma), 0.8);
  out.det_closed_form = vs45 * std::pow(t23, 6) * lam / (16.0 * std::pow(t3, 7) * D4) * out.nondegeneracy;

  // first-order coefficients of mu1, mu2, mu3
  const double S = t3 * m * n / (D * x);
  const double S12 = std::sqrt(S), S32 = S * S12, S52 = S32 * S;
  const double Q = t23 * t23_2 + 3.0 * D2 * (2.0 * t3 + (th + 4.0) * n) - t23 * D * (7.0 * th + 2.0 * t3 * n + 15.0);
  const double mu2_e2 =
      n * (x2 * Q - (2.0 * th * th + 9.0 * th + 9.0) * D2 * m * (n + 1.0)) / (t23 * D3 * (n + 1.0) * x * S32);
  auto& L = out.linear;
  L[0] = {t23_2 * m * (n + 1.0) * x / (t3 * n), -D * x2 / (m * t3), 0.0};
  L[1] = {-(m * (c * t23 * m * x * Q + t3 * D3 * n3)) / (c * D4 * x * S32), mu2_e2, -n3 / (c * S12)};
  const double w = (th + 4.0) * D - t3 * t23;
  const double mu3_e1 =
      -m * n / (2.0 * c * t23 * std::pow(D, 6) * x2 * S52) *
      (t3 * D2 * (2.0 * c * t3 * t23 * t23_2 * m * m * n + D * n3 * x * w) +
       c * t23 * m * Q * (2.0 * t3 * t23 * D * m * (2.0 * th + D + 3.0) + x2 * w));
  const double mu3_e3 = -n / (2.0 * c * t23 * D4 * x * S32) *
                        (4.0 * c * t3 * t23_2 * m * m * m * (6.0 * (2.0 * th * th + 5.0 * th + 3.0) - (11.0 * th + 15.0) * D) +
                         D2 * n3 * x * (-2.0 * th * th - 9.0 * th + (th + 4.0) * D - 9.0));
  // the display repeats eps1 on the middle term; its coefficient is the
  // eps2 coefficient of mu2, so it is read as eps2
  L[2] = {mu3_e1, mu2_e2, mu3_e3};
  out.det_linear = L[0][0] * (L[1][1] * L[2][2] - L[1][2] * L[2][1]) -
                   L[0][1] * (L[1][0] * L[2][2] - L[1][2] * L[2][0]) +
                   L[0][2] * (L[1][0] * L[2][1] - L[1][1] * L[2][0]);

  const double scale = 12.0 * std::abs(th + 1.0) * t23_4 + 3.0 * std::abs(th) * (D4 + D3) +
                       t23_2 * std::abs(32.0 * th + 69.0) * D2 +
                       t23_2 * std::abs(82.0 * th * th + 240.0 * th + 171.0) * std::abs(D);
  out.nondegenerate = std::abs(out.nondegeneracy) > tol * std::max(scale, 1e-300);
  if (!out.nondegenerate) {
    std::ostringstream os;
    os << "nondegeneracy polynomial " << out.nondegeneracy << " vanishes";
    throw Error(ErrorKind::DegenerateUnfolding, os.str());
  }
  return out;
}

}  // namespace bifurcato
