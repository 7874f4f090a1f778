#include <doctest.h>

#include <cmath>
#include <set>

#include "bifurcato/geometry.hpp"
#include "bifurcato/rng.hpp"

using namespace bifurcato;

namespace {

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("cusp curve lies on the cusp") {
  std::vector<double> z;
  for (int i = 0; i <= 50; ++i) z.push_back(-2.0 + 4.0 * i / 50);
  const auto c = cusp_curve(z);
  REQUIRE(c.points.size() == z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    CHECK(c.points[i][0] == doctest::Approx(-3 * z[i] * z[i]));
    CHECK(std::abs(cusp_implicit(c.points[i][0], c.points[i][1])) < 1e-12 * std::max(1.0, std::pow(z[i], 6)));
  }
}

TEST_CASE("surface partials and normal") {
  Xoshiro256 rng(81);
  for (int i = 0; i < 100; ++i) {
    const double r = rng.uniform(-1.5, 1.5), mu3 = rng.uniform(-2.0, 2.0), h = 1e-6;
    const Vec3 pr = bs_partial_r(r, mu3), pm = bs_partial_mu3(r, mu3);
    const Vec3 a = bs_surface(r + h, mu3), b = bs_surface(r - h, mu3);
    for (int k = 0; k < 3; ++k) CHECK(pr[k] == doctest::Approx((a[k] - b[k]) / (2 * h)).epsilon(1e-6));
    const Vec3 c = bs_surface(r, mu3 + h), d = bs_surface(r, mu3 - h);
    for (int k = 0; k < 3; ++k) CHECK(pm[k] == doctest::Approx((c[k] - d[k]) / (2 * h)).epsilon(1e-6));

    const Vec3 nu = bs_unit_normal(r);
    CHECK(norm(nu) == doctest::Approx(1.0));
    CHECK(std::abs(dot(nu, pr)) < 1e-12 * std::max(1.0, norm(pr)));
    CHECK(std::abs(dot(nu, pm)) < 1e-12);
    // where the parametrization is regular the normal is the normalized cross product
    const Vec3 x = cross(pr, pm);
    if (norm(x) > 1e-3) CHECK(std::abs(std::abs(dot(x, nu)) - norm(x)) < 1e-9 * norm(x));
  }
}

TEST_CASE("closed-form and numeric front classification agree") {
  int singular = 0;
  auto check = [&](double r, double mu3) {
    const auto fp = front_classify(r, mu3);
    CHECK(fp.agree);
    CHECK(fp.cls == fp.numeric_cls);
    if (fp.cls != FrontClass::Regular) ++singular;
  };
  for (int i = 0; i < 200; ++i)
    for (int j = 0; j < 200; ++j) check(-1.0 + 2.0 * i / 199, -1.0 + 2.0 * j / 199);
  // points exactly on the singular locus
  for (int i = 0; i <= 100; ++i) {
    const double r = -1.0 + 2.0 * i / 100;
    check(r, 3 * r * r);
    check(0.0, r);
  }
  CHECK(singular > 100);
}

TEST_CASE("singular locus") {
  CHECK(front_classify_closed(0.0, 0.0) == FrontClass::Swallowtail);
  CHECK(front_classify_closed(0.0, 0.7) == FrontClass::OtherSingular);
  CHECK(front_classify_closed(0.5, 0.2) == FrontClass::Regular);
  for (double r : {-0.9, -0.3, 0.2, 0.8}) {
    CHECK(singular_set(r, 3 * r * r));
    CHECK(front_classify_closed(r, 3 * r * r) == FrontClass::CuspidalEdge);
    // cuspidal edges map onto C
    const Vec3 a = bs_surface(r, 3 * r * r), b = critical_value_curve(r);
    for (int k = 0; k < 3; ++k) CHECK(a[k] == doctest::Approx(b[k]));
  }
}

TEST_CASE("potential degeneracy") {
  // v' = v'' = 0 on BS, v''' = 0 in addition on C, all four at the origin
  CHECK(potential_degeneracy(1.0, Vec3{-2.0, 3.0, 0.0}) == 2);
  CHECK(potential_degeneracy(1.0, critical_value_curve(1.0)) == 3);
  CHECK(potential_degeneracy(0.0, Vec3{0.0, 0.0, 1.0}) == 4);
  CHECK(potential_degeneracy(0.7, Vec3{0.3, 0.1, 0.2}) == 0);
  Xoshiro256 rng(82);
  for (int i = 0; i < 50; ++i) {
    const double r = rng.uniform(-1.0, 1.0), mu3 = rng.uniform(-1.0, 1.0);
    CHECK(potential_degeneracy(r, bs_surface(r, mu3)) >= 2);
    const Vec3 mu{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    CHECK(potential_derivatives(r, mu)[0] == doctest::Approx(radial_rhs(r, mu)));
  }
}

TEST_CASE("meshes") {
  const auto m = mesh_grid("plane", [](double u, double v) { return Vec3{u, v, 0.0}; }, 0, 1, 5, 0, 1, 4);
  CHECK(m.vertices.size() == 20);
  CHECK(m.triangles.size() == 2 * 4 * 3);
  for (const auto& t : m.triangles)
    for (auto idx : t) CHECK(idx < m.vertices.size());

  const auto surfaces = hopf_unfolding_surfaces(SurfaceGrid{20, 20, 1.0});
  std::set<std::string> labels;
  for (const auto& s : surfaces) labels.insert(s.label);
  for (const char* want : {"H-", "H+", "SNlc+", "SNlc-", "BS_s", "SW", "C"}) CHECK(labels.count(want) == 1);
  const auto meshes = hopf_unfolding_meshes(SurfaceGrid{20, 20, 1.0});
  CHECK_FALSE(meshes.empty());
}

TEST_CASE("Hausdorff distance") {
  std::vector<Vec3> bs, bss;
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; j <= 20; ++j) {
      const double r = -1.0 + 2.0 * i / 40, mu3 = -1.0 + 2.0 * j / 20;
      bs.push_back(bs_surface(r, mu3));
      bss.push_back(bs_surface_s(r * r, mu3));
    }
  CHECK(hausdorff(bs, bss) < 1e-12);
  CHECK(hausdorff({Vec3{0, 0, 0}}, {Vec3{0, 0, 0}, Vec3{3, 4, 0}}) == doctest::Approx(5.0));
}

}  // TEST_SUITE
