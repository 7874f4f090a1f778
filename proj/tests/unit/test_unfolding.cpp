#include <doctest.h>

#include <cmath>

#include "bifurcato/critical_loci.hpp"
#include "bifurcato/error.hpp"
#include "bifurcato/unfolding.hpp"
#include "bifurcato/rng.hpp"
#include "../oracles.hpp"
#include "../published.hpp"

using namespace bifurcato;

TEST_SUITE("unfolding") {

TEST_CASE("linear determinant matches the closed form") {
  const auto base = bt2_base(published::fig8_a, published::fig8_b, published::fig8_m);
  const auto jet = bt2_jets(base);
  CHECK(jet.linear_det() == doctest::Approx(-429.8668).epsilon(1e-6));
  CHECK(oracle::rel_close(jet.linear_det(), bt2_linear_det_closed_form(base, jet), 1e-8));

  Xoshiro256 rng(51);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 30; ++i) {
    try {
      const auto b = bt2_base(rng.uniform(-1.0, 1.0), rng.uniform(0.2, 2.0), rng.uniform(0.05, 0.6));
      if (!(b.params.c > 0.0 && b.params.n > 0.0)) continue;
      const auto j = bt2_jets(b);
      CHECK(oracle::rel_close(j.linear_det(), bt2_linear_det_closed_form(b, j), 1e-8));
      ++checked;
    } catch (const Error&) {
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("jets match derivatives of the composed transform") {
  Xoshiro256 rng(52);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 20; ++i) {
    Bt2Base base;
    BT2Jet jet;
    try {
      base = bt2_base(rng.uniform(-1.0, 1.0), rng.uniform(0.2, 2.0), rng.uniform(0.05, 0.6));
      if (!(base.params.c > 0.0 && base.params.n > 0.0)) continue;
      jet = bt2_jets(base);
    } catch (const Error&) {
      continue;
    }
    auto T = [&](double e1, double e2) { return bt2_mu_transform(base, e1, e2); };
    const auto z = T(0, 0);
    CHECK(std::abs(z[0]) < 1e-12);
    CHECK(std::abs(z[1]) < 1e-12);
    // first order with a small step, second order with central second differences
    double h = 1e-6;
    auto p10 = T(h, 0), m10 = T(-h, 0), p01 = T(0, h), m01 = T(0, -h);
    CHECK(oracle::rel_close((p10[0] - m10[0]) / (2 * h), jet.r1, 1e-5, 1e-6));
    CHECK(oracle::rel_close((p01[0] - m01[0]) / (2 * h), jet.r2, 1e-5, 1e-6));
    CHECK(oracle::rel_close((p10[1] - m10[1]) / (2 * h), jet.s1, 1e-5, 1e-6));
    CHECK(oracle::rel_close((p01[1] - m01[1]) / (2 * h), jet.s2, 1e-5, 1e-6));
    h = 1e-5;
    p10 = T(h, 0), m10 = T(-h, 0), p01 = T(0, h), m01 = T(0, -h);
    const auto pp = T(h, h), pm = T(h, -h), mp = T(-h, h), mm = T(-h, -h);
    for (int k = 0; k < 2; ++k) {
      const double d11 = (p10[k] - 2 * z[k] + m10[k]) / (2 * h * h);
      const double d22 = (p01[k] - 2 * z[k] + m01[k]) / (2 * h * h);
      const double d12 = (pp[k] - pm[k] - mp[k] + mm[k]) / (4 * h * h);
      const double scale = k == 0 ? std::abs(jet.r3) + std::abs(jet.r4) + std::abs(jet.r5)
                                  : std::abs(jet.s3) + std::abs(jet.s4) + std::abs(jet.s5);
      CHECK(std::abs(d11 - (k == 0 ? jet.r3 : jet.s3)) <= 1e-3 * scale);
      CHECK(std::abs(d12 - (k == 0 ? jet.r4 : jet.s4)) <= 1e-3 * scale);
      CHECK(std::abs(d22 - (k == 0 ? jet.r5 : jet.s5)) <= 1e-3 * scale);
    }
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("curve points satisfy their defining equations") {
  const auto base = bt2_base(published::fig8_a, published::fig8_b, published::fig8_m);
  const auto jet = bt2_jets(base);
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(-0.1 + 0.005 * i);
  const auto curves = bt2_curves(jet, grid);
  REQUIRE(curves.size() == 4);
  for (const auto& c : curves) {
    CHECK_FALSE(c.points.empty());
    for (const auto& q : c.points) {
      const double m1 = jet.mu1(q[0], q[1]), m2 = jet.mu2(q[0], q[1]);
      if (c.label == "Hopf") {
        CHECK(std::abs(m1 + m2 * m2) < 1e-10);
        CHECK(m2 > 0.0);
      } else if (c.label == "Homoclinic") {
        CHECK(std::abs(m1 + 49.0 / 25.0 * m2 * m2) < 1e-10);
        CHECK(m2 > 0.0);
      } else {
        CHECK(std::abs(m1) < 1e-10);
        CHECK((c.label == "SN+" ? q[0] < 0.0 : q[0] > 0.0));
      }
    }
  }
}

TEST_CASE("codim-3 surfaces") {
  const auto t1 = tangency_hom(1.0);
  CHECK(t1[0] == -1.0);
  CHECK(t1[1] == 4.0);
  CHECK(t1[2] == 3.0);
  const auto t2 = tangency_hopf(1.0);
  CHECK(t2[0] == -1.0);
  CHECK(t2[1] == doctest::Approx(-4.0 / 11.0));
  CHECK(t2[2] == doctest::Approx(-15.0 / 11.0));

  const auto s = snlc_point(1.0, 1.0);
  CHECK(s[0] == -1.0);
  CHECK(s[1] == doctest::Approx(-4.0 / 11.0));
  CHECK(s[2] == doctest::Approx(-241.0 / 55.0 + 2.0));

  // the first two coordinates of the transcribed surface follow the Hopf tangency curve at v = 1
  for (double u = -2.0; u <= 2.0; u += 0.25) {
    const auto a = snlc_point(u, 1.0), b = tangency_hopf(u);
    CHECK(a[0] == doctest::Approx(b[0]));
    CHECK(a[1] == doctest::Approx(b[1]));
  }

  const auto h = bt3_hopf_point(-4.0, 0.5);
  CHECK(h[1] == doctest::Approx(0.5 * 2.0 + 8.0));
  const auto hl = bt3_homoclinic_point(-4.0, 0.5);
  CHECK(hl[1] == doctest::Approx(5.0 / 7.0 * 0.5 * 2.0 + 103.0 / 77.0 * 8.0));

  const auto surf = bt3_surfaces({-1.0, -0.5, 0.0, 0.5}, {-1.0, 1.0}, {0.5, 1.0}, {0.0, 0.5, 1.0});
  REQUIRE(surf.size() == 5);
  CHECK(surf[0].points.size() == 3 * 2);  // positive mu1 dropped
  CHECK(surf[2].points.size() == 2 * 3);
}

TEST_CASE("codim-3 transversality") {
  const auto& q = published::fig7b;
  const auto T = bt3_transversality(q.a, q.m);
  CHECK(T.nondegenerate);
  CHECK(T.varsigma == doctest::Approx(11.573).epsilon(1e-4));
  CHECK(T.det_linear == doctest::Approx(0.0365568).epsilon(1e-5));
  // the sign is stable under small perturbations of (a, m)
  Xoshiro256 rng(53);
  for (int i = 0; i < 20; ++i) {
    const auto P = bt3_transversality(q.a * (1 + rng.uniform(-1e-3, 1e-3)), q.m * (1 + rng.uniform(-1e-3, 1e-3)));
    CHECK(std::signbit(P.varsigma) == std::signbit(T.varsigma));
    CHECK(std::signbit(P.det_linear) == std::signbit(T.det_linear));
  }
}

}  // TEST_SUITE
