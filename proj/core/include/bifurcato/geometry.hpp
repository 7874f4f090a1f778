#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bifurcato/unfolding.hpp"

namespace bifurcato {

using Vec3 = std::array<double, 3>;

// (-3 z^2, 2 z^3) for each z.
CurveSample cusp_curve(const std::vector<double>& z_grid);
// (p/3)^3 + (q/2)^2
double cusp_implicit(double p, double q);

// BS(r, mu3) = (mu3 r^4 - 2 r^6, 3 r^4 - 2 mu3 r^2, mu3)
Vec3 bs_surface(double r, double mu3);
Vec3 bs_partial_r(double r, double mu3);
Vec3 bs_partial_mu3(double r, double mu3);
Vec3 cross(const Vec3& u, const Vec3& v);
double dot(const Vec3& u, const Vec3& v);
// (1, r^2, r^4) / sqrt(r^8 + r^4 + 1)
Vec3 bs_unit_normal(double r);
// The same surface in s = r^2, defined for every real s.
Vec3 bs_surface_s(double s, double mu3);
// The swallowtail (3u^4 + u^2 v, 4u^3 + 2uv, v).
Vec3 swallowtail_point(double u, double v);
// C(r) = (r^6, -3 r^4, 3 r^2)
Vec3 critical_value_curve(double r);

inline constexpr double kFrontTol = 1e-9;

// r (3 r^2 - mu3) = 0 within tol.
bool singular_set(double r, double mu3, double tol = kFrontTol);

// Singular points on the line r = 0 away from the origin are singular only
// because of the r -> r^2 parametrization; the lifted map is not a front
// there, so they are neither cuspidal edges nor swallowtails.
enum class FrontClass { Regular, CuspidalEdge, Swallowtail, OtherSingular };
const char* front_class_name(FrontClass c);

FrontClass front_classify_closed(double r, double mu3, double tol = kFrontTol);

// Numeric criterion: singular set from the area element, singular direction
// from its gradient (Hessian cone where the gradient vanishes), null direction
// (1, 0), and a central difference of det(gamma', eta) along the singular curve.
struct FrontNumeric {
  bool singular = false;
  bool front = false;  // (BS, nu) is an immersion at the point
  std::array<double, 2> gamma_prime{};
  std::array<double, 2> eta{1.0, 0.0};
  bool proportional = false;
  double det_derivative = 0.0;
  FrontClass cls = FrontClass::Regular;
};
FrontNumeric front_classify_numeric(double r, double mu3, double tol = kFrontTol, double step = 1e-6);

struct FrontPoint {
  double r = 0.0;
  double mu3 = 0.0;
  Vec3 image{};
  FrontClass cls = FrontClass::Regular;
  FrontClass numeric_cls = FrontClass::Regular;
  bool agree = true;
};
FrontPoint front_classify(double r, double mu3, double tol = kFrontTol);

// v'(r), ..., v''''(r) for v(r) = mu1 r^2/2 + mu2 r^4/4 + mu3 r^6/6 - r^8/8.
std::array<double, 4> potential_derivatives(double r, const Vec3& mu);
// Largest j in 0..4 with v' = ... = v^(j) = 0 within tol (relative to the
// size of the terms in each derivative).
int potential_degeneracy(double r, const Vec3& mu, double tol = kFrontTol);
// mu1 r + mu2 r^3 + mu3 r^5 - r^7
double radial_rhs(double r, const Vec3& mu);

// Structured quad mesh with each cell split along its diagonal.
struct Mesh {
  std::string label;
  std::vector<Vec3> vertices;
  std::vector<std::array<std::size_t, 3>> triangles;
};
Mesh mesh_grid(const std::string& label, const std::function<Vec3(double, double)>& f, double u0, double u1,
               std::size_t nu, double v0, double v1, std::size_t nv);

struct SurfaceGrid {
  std::size_t nu = 200;
  std::size_t nv = 200;
  double extent = 1.0;  // half-width of the mu-box
};

// H- (mu1 = 0, mu2 < 0, supercritical), H+ (subcritical), the SNlc pieces of
// BS for mu3 > 0 and mu3 < 0, the curve C, the s-surface over s in R and the
// swallowtail SW for context.
std::vector<CurveSample> hopf_unfolding_surfaces(const SurfaceGrid& grid = {});
std::vector<Mesh> hopf_unfolding_meshes(const SurfaceGrid& grid = {});

// Symmetric Hausdorff distance between two point sets (brute force).
double hausdorff(const std::vector<Vec3>& a, const std::vector<Vec3>& b);

}  // namespace bifurcato
