#include "bifurcato/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bifurcato/jet.hpp"

namespace bifurcato {

CurveSample cusp_curve(const std::vector<double>& z_grid) {
  CurveSample c;
  c.label = "cusp";
  c.dim = 2;
  c.parameterization = "(-3 z^2, 2 z^3)";
  c.points.reserve(z_grid.size());
  for (double z : z_grid) c.points.push_back({-3.0 * z * z, 2.0 * z * z * z, 0.0});
  return c;
}

double cusp_implicit(double p, double q) {
  const double a = p / 3.0, b = q / 2.0;
  return a * a * a + b * b;
}

Vec3 bs_surface(double r, double mu3) {
  const double r2 = r * r, r4 = r2 * r2, r6 = r4 * r2;
  return {mu3 * r4 - 2.0 * r6, 3.0 * r4 - 2.0 * mu3 * r2, mu3};
}

Vec3 bs_partial_r(double r, double mu3) {
  const double r3 = r * r * r, r5 = r3 * r * r;
  return {4.0 * mu3 * r3 - 12.0 * r5, 12.0 * r3 - 4.0 * mu3 * r, 0.0};
}

Vec3 bs_partial_mu3(double r, double /*mu3*/) {
  const double r2 = r * r;
  return {r2 * r2, -2.0 * r2, 1.0};
}

Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

double dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Vec3 bs_unit_normal(double r) {
  const double r2 = r * r, r4 = r2 * r2;
  const double s = std::sqrt(r4 * r4 + r4 + 1.0);
  return {1.0 / s, r2 / s, r4 / s};
}

Vec3 bs_surface_s(double s, double mu3) { return {mu3 * s * s - 2.0 * s * s * s, 3.0 * s * s - 2.0 * mu3 * s, mu3}; }

Vec3 swallowtail_point(double u, double v) {
  const double u2 = u * u;
  return {3.0 * u2 * u2 + u2 * v, 4.0 * u2 * u + 2.0 * u * v, v};
}

Vec3 critical_value_curve(double r) {
  const double r2 = r * r, r4 = r2 * r2;
  return {r4 * r2, -3.0 * r4, 3.0 * r2};
}

bool singular_set(double r, double mu3, double tol) { return std::abs(r * (3.0 * r * r - mu3)) < tol; }

const char* front_class_name(FrontClass c) {
  switch (c) {
    case FrontClass::Regular: return "Regular";
    case FrontClass::CuspidalEdge: return "CuspidalEdge";
    case FrontClass::Swallowtail: return "Swallowtail";
    case FrontClass::OtherSingular: return "OtherSingular";
  }
  return "Regular";
}

FrontClass front_classify_closed(double r, double mu3, double tol) {
  if (!singular_set(r, mu3, tol)) return FrontClass::Regular;
  if (std::abs(r) < tol) return std::abs(mu3) < tol ? FrontClass::Swallowtail : FrontClass::OtherSingular;
  return FrontClass::CuspidalEdge;
}

namespace {

// det(dBS/dr, dBS/dmu3, n) with n = (1, r^2, r^4), built from the partials so
// that it can be evaluated on jets.
template <class T>
T area_element(const T& r, const T& mu) {
  const T r2 = r * r, r3 = r2 * r, r4 = r3 * r, r5 = r4 * r;
  const T a0 = 4.0 * mu * r3 - 12.0 * r5;
  const T a1 = 12.0 * r3 - 4.0 * mu * r;
  const T b0 = r4;
  const T b1 = -2.0 * r2;
  // a = (a0, a1, 0), b = (b0, b1, 1)
  const T c0 = a1;
  const T c1 = -1.0 * a0;
  const T c2 = a0 * b1 - a1 * b0;
  return c0 + c1 * r2 + c2 * r4;
}

using Vec2 = std::array<double, 2>;

Vec2 area_gradient(double r, double mu) {
  const Jet jr = area_element(Jet::variable(r), Jet::constant(mu));
  const Jet jm = area_element(Jet::constant(r), Jet::variable(mu));
  return {jr[1], jm[1]};
}

double norm2(const Vec2& v) { return std::hypot(v[0], v[1]); }

// Newton projection onto the zero set of the area element.
Vec2 project_to_singular(Vec2 q) {
  for (int it = 0; it < 30; ++it) {
    const double f = area_element(q[0], q[1]);
    const Vec2 g = area_gradient(q[0], q[1]);
    const double gg = g[0] * g[0] + g[1] * g[1];
    if (gg == 0.0) break;
    const Vec2 step = {f * g[0] / gg, f * g[1] / gg};
    q = {q[0] - step[0], q[1] - step[1]};
    if (norm2(step) < 1e-18) break;
  }
  return q;
}

bool is_front_point(double r, double mu3, double tol) {
  // (BS, nu) immersion: the lifted partials must span a plane.
  const Vec3 br = bs_partial_r(r, mu3), bm = bs_partial_mu3(r, mu3);
  const Vec3 n = {1.0, r * r, r * r * r * r};
  const double nn = std::sqrt(dot(n, n));
  const Vec3 nu = {n[0] / nn, n[1] / nn, n[2] / nn};
  const Vec3 dn = {0.0, 2.0 * r, 4.0 * r * r * r};
  const double proj = dot(nu, dn);
  const Vec3 dnu = {(dn[0] - proj * nu[0]) / nn, (dn[1] - proj * nu[1]) / nn, (dn[2] - proj * nu[2]) / nn};
  const std::array<double, 6> v1 = {br[0], br[1], br[2], dnu[0], dnu[1], dnu[2]};
  const std::array<double, 6> v2 = {bm[0], bm[1], bm[2], 0.0, 0.0, 0.0};
  double a = 0.0, b = 0.0, c = 0.0;
  for (int i = 0; i < 6; ++i) {
    a += v1[i] * v1[i];
    b += v2[i] * v2[i];
    c += v1[i] * v2[i];
  }
  return std::sqrt(std::max(0.0, a * b - c * c)) > tol;
}

// Singular direction with its first component scaled to 1 when possible.
Vec2 singular_direction(double r, double mu3) {
  const Vec2 g = area_gradient(r, mu3);
  Vec2 d = {-g[1], g[0]};
  if (std::abs(d[0]) > 1e-300) return {1.0, d[1] / d[0]};
  const double n = norm2(d);
  return n > 0.0 ? Vec2{d[0] / n, d[1] / n} : Vec2{0.0, 0.0};
}

// det(gamma', eta) with eta = (1, 0)
double det_with_null(const Vec2& gp) { return -gp[1]; }

}  // namespace

FrontNumeric front_classify_numeric(double r, double mu3, double tol, double step) {
  FrontNumeric out;
  const Vec3 cr = cross(bs_partial_r(r, mu3), bs_partial_mu3(r, mu3));
  out.singular = std::sqrt(dot(cr, cr)) < tol;
  out.front = is_front_point(r, mu3, tol);
  if (!out.singular) {
    out.cls = FrontClass::Regular;
    return out;
  }

  const Vec2 g = area_gradient(r, mu3);
  Vec2 gamma{};
  bool have_branch = false;
  if (out.front) {
    gamma = singular_direction(r, mu3);
    have_branch = true;
  } else if (norm2(g) <= tol) {
    // Degenerate point: branches of the singular set follow the null cone of
    // the Hessian; keep those along which the map is a front.
    const Jet jr = area_element(Jet::variable(r), Jet::constant(mu3));
    const Jet jm = area_element(Jet::constant(r), Jet::variable(mu3));
    const double hrr = jr.derivative(2), hmm = jm.derivative(2);
    const double hrm = (area_gradient(r, mu3 + step)[0] - area_gradient(r, mu3 - step)[0]) / (2.0 * step);
    const double tr = 0.5 * (hrr + hmm);
    const double disc = std::sqrt(std::max(0.0, 0.25 * (hrr - hmm) * (hrr - hmm) + hrm * hrm));
    const double l1 = tr - disc, l2 = tr + disc;
    std::vector<Vec2> dirs;
    if (l1 < 0.0 && l2 > 0.0) {
      // eigenvectors of [[hrr, hrm], [hrm, hmm]]
      Vec2 e1 = std::abs(hrm) > 0.0 ? Vec2{hrm, l1 - hrr} : (hrr < hmm ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0});
      const double n1 = norm2(e1);
      e1 = {e1[0] / n1, e1[1] / n1};
      const Vec2 e2 = {-e1[1], e1[0]};
      const double phi = std::atan(std::sqrt(-l1 / l2));
      for (double sgn : {1.0, -1.0})
        dirs.push_back({std::cos(phi) * e1[0] + sgn * std::sin(phi) * e2[0],
                        std::cos(phi) * e1[1] + sgn * std::sin(phi) * e2[1]});
    }
    const double probe = 1e-3;
    for (const Vec2& d : dirs) {
      for (double sgn : {1.0, -1.0}) {
        Vec2 q = {r + sgn * probe * d[0], mu3 + sgn * probe * d[1]};
        if (q[0] < 0.0) continue;
        q = project_to_singular(q);
        if (!is_front_point(q[0], q[1], tol)) continue;
        gamma = std::abs(d[0]) > tol ? Vec2{1.0, d[1] / d[0]} : d;
        have_branch = true;
      }
    }
  }
  if (!have_branch) {
    out.cls = FrontClass::OtherSingular;
    return out;
  }
  out.gamma_prime = gamma;
  const double gn = norm2(gamma);
  out.proportional = std::abs(det_with_null({gamma[0] / gn, gamma[1] / gn})) < tol;
  if (!out.proportional) {
    out.cls = FrontClass::CuspidalEdge;
    return out;
  }
  // d/dt det(gamma'(t), eta(t)) at t = 0 along the singular curve
  const Vec2 qp = project_to_singular({r + step * gamma[0], mu3 + step * gamma[1]});
  const Vec2 qm = project_to_singular({r - step * gamma[0], mu3 - step * gamma[1]});
  out.det_derivative =
      (det_with_null(singular_direction(qp[0], qp[1])) - det_with_null(singular_direction(qm[0], qm[1]))) /
      (2.0 * step);
  out.cls = std::abs(out.det_derivative) > tol ? FrontClass::Swallowtail : FrontClass::OtherSingular;
  return out;
}

FrontPoint front_classify(double r, double mu3, double tol) {
  FrontPoint fp;
  fp.r = r;
  fp.mu3 = mu3;
  fp.image = bs_surface(r, mu3);
  fp.cls = front_classify_closed(r, mu3, tol);
  fp.numeric_cls = front_classify_numeric(r, mu3, tol).cls;
  fp.agree = fp.cls == fp.numeric_cls;
  return fp;
}

std::array<double, 4> potential_derivatives(double r, const Vec3& mu) {
  const double r2 = r * r, r3 = r2 * r, r4 = r3 * r, r5 = r4 * r, r6 = r5 * r, r7 = r6 * r;
  return {mu[0] * r + mu[1] * r3 + mu[2] * r5 - r7, mu[0] + 3.0 * mu[1] * r2 + 5.0 * mu[2] * r4 - 7.0 * r6,
          6.0 * mu[1] * r + 20.0 * mu[2] * r3 - 42.0 * r5, 6.0 * mu[1] + 60.0 * mu[2] * r2 - 210.0 * r4};
}

int potential_degeneracy(double r, const Vec3& mu, double tol) {
  const double r2 = r * r, r3 = r2 * r, r4 = r3 * r, r5 = r4 * r, r6 = r5 * r, r7 = r6 * r;
  const auto v = potential_derivatives(r, mu);
  const std::array<double, 4> scale = {
      std::abs(mu[0] * r) + std::abs(mu[1] * r3) + std::abs(mu[2] * r5) + r7,
      std::abs(mu[0]) + 3.0 * std::abs(mu[1]) * r2 + 5.0 * std::abs(mu[2]) * r4 + 7.0 * r6,
      6.0 * std::abs(mu[1]) * r + 20.0 * std::abs(mu[2]) * r3 + 42.0 * r5,
      6.0 * std::abs(mu[1]) + 60.0 * std::abs(mu[2]) * r2 + 210.0 * r4};
  int k = 0;
  for (int j = 0; j < 4; ++j) {
    if (std::abs(v[j]) >= tol * std::max(1.0, scale[j])) break;
    k = j + 1;
  }
  return k;
}

double radial_rhs(double r, const Vec3& mu) { return potential_derivatives(r, mu)[0]; }

Mesh mesh_grid(const std::string& label, const std::function<Vec3(double, double)>& f, double u0, double u1,
               std::size_t nu, double v0, double v1, std::size_t nv) {
  Mesh m;
  m.label = label;
  nu = std::max<std::size_t>(nu, 2);
  nv = std::max<std::size_t>(nv, 2);
  m.vertices.reserve(nu * nv);
  for (std::size_t i = 0; i < nu; ++i) {
    const double u = u0 + (u1 - u0) * static_cast<double>(i) / static_cast<double>(nu - 1);
    for (std::size_t j = 0; j < nv; ++j) {
      const double v = v0 + (v1 - v0) * static_cast<double>(j) / static_cast<double>(nv - 1);
      m.vertices.push_back(f(u, v));
    }
  }
  m.triangles.reserve(2 * (nu - 1) * (nv - 1));
  for (std::size_t i = 0; i + 1 < nu; ++i) {
    for (std::size_t j = 0; j + 1 < nv; ++j) {
      const std::size_t a = i * nv + j, b = a + 1, c = a + nv, d = c + 1;
      m.triangles.push_back({a, c, d});
      m.triangles.push_back({a, d, b});
    }
  }
  return m;
}

namespace {

struct PieceSpec {
  std::string label;
  std::string parameterization;
  std::function<Vec3(double, double)> f;
  double u0, u1, v0, v1;
};

std::vector<PieceSpec> unfolding_pieces(const SurfaceGrid& g) {
  const double E = g.extent;
  const double h2 = E / static_cast<double>(std::max<std::size_t>(g.nu, 2));
  const double h3 = E / static_cast<double>(std::max<std::size_t>(g.nv, 2));
  const double rmax = std::sqrt(E);
  return {
      {"H-", "mu1 = 0, mu2 < 0 (supercritical Hopf); (mu2, mu3)",
       [](double a, double b) { return Vec3{0.0, a, b}; }, -E, -h2, -E, E},
      {"H+", "mu1 = 0, mu2 > 0 (subcritical Hopf); (mu2, mu3)", [](double a, double b) { return Vec3{0.0, a, b}; },
       h2, E, -E, E},
      {"SNlc+", "BS(r, mu3), mu3 > 0", [](double r, double m) { return bs_surface(r, m); }, 0.0, rmax, h3, E},
      {"SNlc-", "BS(r, mu3), mu3 < 0", [](double r, double m) { return bs_surface(r, m); }, 0.0, rmax, -E, -h3},
      {"BS_s", "(mu3 s^2 - 2 s^3, 3 s^2 - 2 mu3 s, mu3), s in R",
       [](double s, double m) { return bs_surface_s(s, m); }, -E, E, -E, E},
      {"SW", "(3u^4 + u^2 v, 4u^3 + 2uv, v)", [](double u, double v) { return swallowtail_point(u, v); }, -rmax, rmax,
       -E, E},
  };
}

}  // namespace

std::vector<CurveSample> hopf_unfolding_surfaces(const SurfaceGrid& grid) {
  std::vector<CurveSample> out;
  for (const auto& piece : unfolding_pieces(grid)) {
    const Mesh m = mesh_grid(piece.label, piece.f, piece.u0, piece.u1, grid.nu, piece.v0, piece.v1, grid.nv);
    CurveSample c;
    c.label = piece.label;
    c.dim = 3;
    c.parameterization = piece.parameterization;
    c.points = m.vertices;
    out.push_back(std::move(c));
  }
  CurveSample C;
  C.label = "C";
  C.dim = 3;
  C.parameterization = "(r^6, -3 r^4, 3 r^2)";
  const double rmax = std::sqrt(grid.extent);
  const std::size_t n = std::max<std::size_t>(grid.nu, 2);
  for (std::size_t i = 0; i < n; ++i)
    C.points.push_back(critical_value_curve(rmax * static_cast<double>(i) / static_cast<double>(n - 1)));
  out.push_back(std::move(C));
  return out;
}

std::vector<Mesh> hopf_unfolding_meshes(const SurfaceGrid& grid) {
  std::vector<Mesh> out;
  for (const auto& piece : unfolding_pieces(grid))
    out.push_back(mesh_grid(piece.label, piece.f, piece.u0, piece.u1, grid.nu, piece.v0, piece.v1, grid.nv));
  return out;
}

double hausdorff(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
  auto directed = [](const std::vector<Vec3>& from, const std::vector<Vec3>& to) {
    double worst = 0.0;
    for (const auto& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to) {
        const double d = std::hypot(p[0] - q[0], p[1] - q[1], p[2] - q[2]);
        best = std::min(best, d);
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace bifurcato
