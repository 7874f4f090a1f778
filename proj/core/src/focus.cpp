#include "bifurcato/focus.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bifurcato/equilibria.hpp"
#include "bifurcato/error.hpp"

namespace bifurcato {

LienardJets lienard_jets(const DimensionlessParams& p, double x2) {
  const Jet X = Jet::variable(x2);
  const Jet D = 1.0 + p.a * X + p.b * X * X * X;
  LienardJets j;
  j.p = p.c * X * X * X / D;
  j.G = 1.0 / p.c - X - p.m * D / (p.c * X * X);
  j.n_over_p = p.n / j.p;
  j.g = (X - p.n * j.G) / j.p;
  j.H = j.g.integral();
  j.scrG = j.G - j.n_over_p.integral();
  return j;
}

HCoeffs lienard_h(const DimensionlessParams& p, double x2) {
  const Jet H = lienard_jets(p, x2).H;
  HCoeffs h{};
  for (int k = 2; k <= 7; ++k) h[k] = H.derivative(k);
  return h;
}

std::array<double, 6> p_derivatives_closed(const DimensionlessParams& p, double x2) {
  const double a = p.a, b = p.b, c = p.c, x = x2;
  const double x2_ = x * x, x3 = x2_ * x, x4 = x3 * x, x5 = x4 * x, x6 = x5 * x, x7 = x6 * x, x9 = x6 * x3;
  const double a2 = a * a, a3 = a2 * a, b2 = b * b, b3 = b2 * b;
  const double D = 1.0 + a * x + b * x3;
  std::array<double, 6> d{};
  d[0] = c * x3 / D;
  d[1] = c * x2_ * (2.0 * a * x + 3.0) / (D * D);
  d[2] = 2.0 * c * x * (a2 * x2_ + 3.0 * a * x - 3.0 * a * b * x4 - 6.0 * b * x3 + 3.0) / std::pow(D, 3);
  d[3] = 6.0 * c *
         (-2.0 * b * x3 * (2.0 * a2 * x2_ + 7.0 * a * x + 8.0) + 2.0 * x6 * b2 * (2.0 * a * x + 5.0) + 1.0) /
         std::pow(D, 4);
  d[4] = -24.0 * c / std::pow(D, 5) *
         (a3 * b * x5 + 5.0 * a2 * b * x4 * (1.0 - 2.0 * b * x3) +
          a * (5.0 * b3 * x9 - 40.0 * b2 * x6 + 10.0 * b * x3 + 1.0) +
          3.0 * b * x2_ * (5.0 * b2 * x6 - 17.0 * b * x3 + 5.0));
  d[5] = 120.0 * c / std::pow(D, 6) *
         (6.0 * a3 * b2 * x7 + a2 * (1.0 - 20.0 * b3 * x9 + 33.0 * b2 * x6) +
          6.0 * a * b * x2_ * (b3 * x9 - 15.0 * b2 * x6 + 12.0 * b * x3 + 1.0) +
          3.0 * b * x * (7.0 * b3 * x9 - 42.0 * b2 * x6 + 30.0 * b * x3 - 2.0));
  return d;
}

std::array<double, 8> G_derivatives_closed(const DimensionlessParams& p, double x2) {
  const double a = p.a, b = p.b, c = p.c, m = p.m, x = x2;
  std::array<double, 8> d{};
  d[0] = G_fun(x, p);
  d[1] = (-c * x * x * x + m * (a * x - b * x * x * x + 2.0)) / (c * x * x * x);
  // G^(k) = (-1)^(k+1) k! m (a x + k + 1) / (c x^(k+2)) for k >= 2
  double fact = 1.0;
  for (int k = 2; k <= 7; ++k) {
    fact *= k;
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;
    d[k] = sign * fact * m * (a * x + k + 1.0) / (c * std::pow(x, k + 2));
  }
  return d;
}

HCoeffs lienard_h_closed_form(const DimensionlessParams& p, double x2) {
  const auto P = p_derivatives_closed(p, x2);
  const auto G = G_derivatives_closed(p, x2);
  const double n = p.n;
  const double P0 = P[0], P1 = P[1], P2 = P[2], P3 = P[3], P4 = P[4], P5 = P[5];
  const double Q2 = P0 * P0, Q3 = Q2 * P0, Q4 = Q3 * P0, Q5 = Q4 * P0, Q6 = Q5 * P0;
  const double w = 1.0 / n - G[1];
  HCoeffs h{};
  h[2] = (1.0 - n * G[1]) / P0;
  h[3] = 2.0 * P1 * (n * G[1] - 1.0) / Q2 - n * G[2] / P0;
  h[4] = -n * G[3] / P0 + 3.0 * n * G[2] * P1 / Q2 + w * (6.0 * n * P1 * P1 / Q3 - 3.0 * n * P2 / Q2);
  h[5] = -n * G[4] / P0 + 4.0 * n * G[3] * P1 / Q2 + 6.0 * n * G[2] * P2 / Q2 - 12.0 * n * G[2] * P1 * P1 / Q3 +
         w * (-4.0 * n * P3 / Q2 - 24.0 * n * std::pow(P1, 3) / Q4 + 24.0 * n * P1 * P2 / Q3);
  h[6] = -n * G[5] / P0 + 5.0 * n * G[4] * P1 / Q2 + G[3] * (10.0 * n * P2 / Q2 - 20.0 * n * P1 * P1 / Q3) +
         G[2] * (10.0 * n * P3 / Q2 + 60.0 * n * std::pow(P1, 3) / Q4 - 60.0 * n * P1 * P2 / Q3) +
         w * (-5.0 * n * P4 / Q2 + 30.0 * n * P2 * P2 / Q3 + 120.0 * n * std::pow(P1, 4) / Q5 +
              40.0 * n * P3 * P1 / Q3 - 180.0 * n * P1 * P1 * P2 / Q4);
  h[7] = -n * G[6] / P0 + 6.0 * n * G[5] * P1 / Q2 + G[4] * (15.0 * n * P2 / Q2 - 30.0 * n * P1 * P1 / Q3) +
         G[3] * (20.0 * n * P3 / Q2 + 120.0 * n * std::pow(P1, 3) / Q4 - 120.0 * n * P1 * P2 / Q3) +
         G[2] * (15.0 * n * P4 / Q2 - 90.0 * n * P2 * P2 / Q3 - 360.0 * n * std::pow(P1, 4) / Q5 -
                 120.0 * n * P3 * P1 / Q3 + 540.0 * n * P1 * P1 * P2 / Q4) +
         w * (-6.0 * n * P5 / Q2 - 720.0 * n * std::pow(P1, 5) / Q6 + 60.0 * n * P4 * P1 / Q3 +
              120.0 * n * P3 * P2 / Q3 - 360.0 * n * P3 * P1 * P1 / Q4 + 1440.0 * n * std::pow(P1, 3) * P2 / Q5 -
              540.0 * n * P1 * P2 * P2 / Q4);
  return h;
}

NuCoeffs nu_coefficients(const HCoeffs& h) {
  const double h2 = h[2], h3 = h[3], h4 = h[4], h5 = h[5], h6 = h[6], h7 = h[7];
  if (h2 == 0.0 || !std::isfinite(h2)) throw Error(ErrorKind::H2Zero, "H''(0) = 0");
  NuCoeffs nu{};
  const double v = -h3 / (3.0 * h2);
  const double v2 = v * v, v3 = v2 * v, v4 = v3 * v, v5 = v4 * v;
  nu[2] = v;
  nu[3] = -v2;
  nu[4] = (h5 + 10.0 * h4 * v) / (-60.0 * h2) + 2.0 * v3;
  nu[5] = h4 * v2 / (2.0 * h2) + h5 * v / (20.0 * h2) - 4.0 * v4;
  nu[6] = -19.0 * h4 * v3 / (12.0 * h2) - 11.0 * h5 * v2 / (60.0 * h2) +
          (70.0 * h4 * h4 - 21.0 * h2 * h6) * v / (2520.0 * h2 * h2) + (7.0 * h4 * h5 - h2 * h7) / (2520.0 * h2 * h2) +
          9.0 * v5;
  return nu;
}

const char* focus_stability_name(FocusStability s) {
  switch (s) {
    case FocusStability::Stable: return "Stable";
    case FocusStability::Unstable: return "Unstable";
    case FocusStability::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

void classify_focus(FocusReport& r, double vanish_tol) {
  const std::array<double, 4> odd = {r.B[1], r.B[3], r.B[5], r.B[7]};
  r.order = -1;
  r.stability = FocusStability::Undetermined;
  for (int k = 0; k < 4; ++k) {
    const double next = (k + 1 < 4) ? std::abs(odd[k + 1]) : 0.0;
    if (std::abs(odd[k]) < vanish_tol * std::max(1.0, next)) continue;
    r.order = k;
    r.stability = odd[k] > 0.0 ? FocusStability::Unstable : FocusStability::Stable;
    return;
  }
}

FocusReport focal_values(const DimensionlessParams& p, double x2, double vanish_tol) {
  const LienardJets j = lienard_jets(p, x2);
  FocusReport r;
  r.x2 = x2;
  for (int k = 2; k <= 7; ++k) r.h[k] = j.H.derivative(k);
  r.nu = nu_coefficients(r.h);

  std::array<double, 8> S{};  // scrG^(k)(x2)
  for (int k = 1; k <= 7; ++k) S[k] = j.scrG.derivative(k);
  const double h2 = r.h[2], h4 = r.h[4], h5 = r.h[5], h6 = r.h[6], h7 = r.h[7];
  const double v = r.nu[2], v3 = v * v * v;

  auto& B = r.B;
  B[1] = 2.0 * S[1];
  B[3] = S[3] + 3.0 * S[2] * v;
  B[5] = (S[5] + 10.0 * v * S[4] - (h5 + 10.0 * h4 * v) / h2 * S[2]) / 60.0;
  B[7] = (S[7] + 21.0 * v * S[6] - 7.0 * (90.0 * h2 * v3 + 10.0 * h4 * v + h5) / h2 * S[4] +
          (630.0 * h2 * h4 * v3 + (70.0 * h4 * h4 - 21.0 * h2 * h6) * v + 7.0 * h4 * h5 - h2 * h7) / (h2 * h2) * S[2]) /
         2520.0;
  for (int k = 1; k <= 4; ++k) B[2 * k] = -((2.0 * k - 1.0) / 2.0) * v * B[2 * k - 1];
  classify_focus(r, vanish_tol);
  return r;
}

double weak_focus_x2(const DimensionlessParams& p) {
  const auto eq = positive_equilibria(p);
  if (eq.size() < 2) throw Error(ErrorKind::EquilibriumLost, "fewer than two positive equilibria");
  return eq.back().x;
}

FocusReport focal_values_at_e2(const DimensionlessParams& p, double vanish_tol) {
  return focal_values(p, weak_focus_x2(p), vanish_tol);
}

FocalSeries focal_series(const DimensionlessParams& p, double x2) {
  const LienardJets j = lienard_jets(p, x2);
  const Jet F = j.scrG[0] - j.scrG;
  const Jet Hp = j.H.diff();
  Jet th;
  th[1] = -1.0;
  for (int it = 0; it < Jet::K + 2; ++it) {
    const Jet res = compose(j.H, th) - j.H;
    const Jet slope = compose(Hp, th);
    th -= res.shift_down() / slope.shift_down();
    th[0] = 0.0;
    th[1] = -1.0;
  }
  const Jet diff = compose(F, th) - F;
  FocalSeries out;
  for (int k = 0; k <= Jet::K; ++k) {
    out.difference[k] = diff[k];
    out.theta[k] = th[k];
  }
  return out;
}

namespace {

std::vector<double> selected_B(const DimensionlessParams& p, const std::vector<int>& B_list) {
  const FocusReport r = focal_values_at_e2(p);
  std::vector<double> out;
  out.reserve(B_list.size());
  for (int k : B_list) out.push_back(r.B[k]);
  return out;
}

void check_selection(const std::vector<ParamName>& which, const std::vector<int>& B_list) {
  if (which.size() != B_list.size() || which.empty())
    throw std::invalid_argument("codim Jacobian needs as many parameters as focal indices");
  for (int k : B_list)
    if (k < 1 || k > 8) throw std::invalid_argument("focal index outside 1..8");
}

double determinant(const std::vector<std::vector<double>>& M) {
  const Eigen::Index n = static_cast<Eigen::Index>(M.size());
  Eigen::MatrixXd A(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) A(i, j) = M[i][j];
  return A.determinant();
}

}  // namespace

CodimJacobian codim_jacobian(const DimensionlessParams& p, const std::vector<ParamName>& which,
                             const std::vector<int>& B_list, double rel_step) {
  check_selection(which, B_list);
  const std::size_t k = which.size();
  CodimJacobian out;
  out.values = selected_B(p, B_list);
  out.matrix.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t col = 0; col < k; ++col) {
    const double v0 = param_value(p, which[col]);
    const double h = rel_step * std::max(std::abs(v0), 1e-3);
    auto central = [&](double step) {
      DimensionlessParams plus = p, minus = p;
      param_ref(plus, which[col]) = v0 + step;
      param_ref(minus, which[col]) = v0 - step;
      const auto fp = selected_B(plus, B_list);
      const auto fm = selected_B(minus, B_list);
      std::vector<double> d(k);
      for (std::size_t row = 0; row < k; ++row) d[row] = (fp[row] - fm[row]) / (2.0 * step);
      return d;
    };
    const auto d1 = central(h);
    const auto d2 = central(h / 2.0);
    for (std::size_t row = 0; row < k; ++row) out.matrix[row][col] = (4.0 * d2[row] - d1[row]) / 3.0;
  }
  out.det = determinant(out.matrix);
  return out;
}

PolishResult polish_weak_focus(const DimensionlessParams& p, const std::vector<ParamName>& which,
                               const std::vector<int>& B_list, double tol, int max_iter) {
  check_selection(which, B_list);
  const Eigen::Index k = static_cast<Eigen::Index>(which.size());
  PolishResult out;
  out.params = p;
  out.residuals = selected_B(p, B_list);
  auto norm = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double e : v) s = std::max(s, std::abs(e));
    return s;
  };
  for (int it = 0; it < max_iter; ++it) {
    if (norm(out.residuals) < tol) {
      out.converged = true;
      break;
    }
    const CodimJacobian J = codim_jacobian(out.params, which, B_list);
    Eigen::MatrixXd A(k, k);
    Eigen::VectorXd r(k);
    for (Eigen::Index i = 0; i < k; ++i) {
      r(i) = out.residuals[i];
      for (Eigen::Index j = 0; j < k; ++j) A(i, j) = J.matrix[i][j];
    }
    const Eigen::VectorXd step = A.fullPivLu().solve(r);
    // Backtrack while the residual grows or the equilibrium pair is lost.
    double lambda = 1.0;
    bool accepted = false;
    for (int half = 0; half < 20 && !accepted; ++half, lambda *= 0.5) {
      DimensionlessParams trial = out.params;
      for (Eigen::Index j = 0; j < k; ++j) param_ref(trial, which[j]) -= lambda * step(j);
      try {
        validate(trial);
        auto res = selected_B(trial, B_list);
        if (norm(res) < norm(out.residuals) || half == 19) {
          out.params = trial;
          out.residuals = std::move(res);
          accepted = true;
        }
      } catch (const Error&) {
      }
    }
    out.iterations = it + 1;
    if (!accepted) break;
  }
  if (norm(out.residuals) < tol) out.converged = true;
  return out;
}

}  // namespace bifurcato
