#include <doctest.h>

#include <cmath>

#include "bifurcato/error.hpp"
#include "bifurcato/model.hpp"
#include "bifurcato/rng.hpp"
#include "../oracles.hpp"
#include "../published.hpp"

using namespace bifurcato;

TEST_SUITE("model") {

TEST_CASE("validate accepts the caption set and a = 0, rejects the bound") {
  CHECK_NOTHROW(validate(DimensionlessParams{-1.5, 1.0, 0.3, 0.5, 0.427}));
  CHECK_NOTHROW(validate(DimensionlessParams{0.0, 1.0, 0.3, 0.5, 0.427}));
  CHECK(a_lower_bound(1.0) == doctest::Approx(-1.8899).epsilon(1e-4));
  try {
    validate(DimensionlessParams{-1.9, 1.0, 0.3, 0.5, 0.427});
    FAIL("expected ConstraintViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConstraintViolation);
    CHECK(std::string(e.what()).find("a > -3 (b/4)^(1/3)") != std::string::npos);
  }
  // the bound itself is rejected
  CHECK_THROWS_AS(validate(DimensionlessParams{a_lower_bound(1.0), 1.0, 0.3, 0.5, 0.4}), Error);
  CHECK_THROWS_AS(validate(DimensionlessParams{0.0, 0.0, 0.3, 0.5, 0.4}), Error);
  CHECK_THROWS_AS(validate(DimensionlessParams{0.0, 1.0, -0.3, 0.5, 0.4}), Error);
}

TEST_CASE("nondimensionalize: unit parameters and a reference evaluation") {
  const auto q = nondimensionalize(DimensionalParams{1, 1, 1, 1, 1, 0, 1});
  CHECK(q.a == 0.0);
  CHECK(q.b == 1.0);
  CHECK(q.c == 1.0);
  CHECK(q.m == 2.0);
  CHECK(q.n == 2.0);

  const DimensionalParams d{1.0, 0.1, 0.2, 0.1, 0.5, 0.3, 0.4};
  const auto r = nondimensionalize(d);
  // evaluated by hand: s = sqrt(0.02 / 0.5) = 0.2
  CHECK(r.a == doctest::Approx(0.3 * 0.2).epsilon(1e-12));
  CHECK(r.b == doctest::Approx(0.02 * 0.4 / 0.5 * 0.2).epsilon(1e-12));
  CHECK(r.c == doctest::Approx(0.1 * 0.2).epsilon(1e-12));
  CHECK(r.m == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(r.n == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("nondimensionalize preserves the denominator bound") {
  Xoshiro256 rng(11);
  for (int i = 0; i < 100; ++i) {
    DimensionalParams d;
    d.Lambda = rng.uniform(0.1, 5);
    d.d = rng.uniform(0.01, 1);
    d.mu = rng.uniform(0.01, 1);
    d.delta = rng.uniform(0.01, 1);
    d.kappa = rng.uniform(0.1, 5);
    d.gamma = rng.uniform(0.1, 5);
    const double eps = rng.uniform(1e-6, 0.5);
    d.beta = -3.0 * std::cbrt(d.gamma / 4.0) + eps;
    const auto q = nondimensionalize(d);
    CHECK(q.a > a_lower_bound(q.b));
    CHECK(q.m > 1.0);
  }
}

TEST_CASE("incidence and its monotonicity") {
  DimensionalParams d{1, 1, 1, 1, 1, 0, 1};
  CHECK(incidence(0.0, d) == 0.0);
  CHECK(incidence(1.0, d) == doctest::Approx(0.5));
  d.kappa = 2.0;
  d.gamma = 0.5;
  d.beta = 0.3;
  CHECK(incidence(1e6, d) == doctest::Approx(d.kappa / d.gamma).epsilon(1e-4));

  d.beta = 1.0;
  CHECK(monotonicity_class(d).kind == Monotonicity::Increasing);
  CHECK_FALSE(monotonicity_class(d).extremum.has_value());
  d.beta = -1.0;
  d.gamma = 1.0;
  REQUIRE(monotonicity_class(d).extremum.has_value());
  CHECK(*monotonicity_class(d).extremum == doctest::Approx(1.5));
  d.beta = -0.5;
  const auto mc = monotonicity_class(d);
  CHECK(mc.kind == Monotonicity::IncreasingDecreasing);
  CHECK(*mc.extremum == doctest::Approx(3.0));
  auto slope = [&](double I) { return (incidence(I + 1e-6, d) - incidence(I - 1e-6, d)) / 2e-6; };
  CHECK(slope(2.99) > 0.0);
  CHECK(slope(3.01) < 0.0);
}

TEST_CASE("vector field: origin, caption equilibrium, second evaluation path") {
  const auto f0 = vector_field({0, 0}, published::fig5a);
  CHECK(f0[0] == 0.0);
  CHECK(f0[1] == 0.0);
  const auto fs = vector_field({0.686141, 1.60704}, published::fig5a);
  CHECK(std::abs(fs[0]) < 1e-6);
  CHECK(std::abs(fs[1]) < 1e-5);  // y* is quoted to 6 significant digits

  Xoshiro256 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto p = oracle::random_params(rng);
    const double x = rng.uniform(0, 1.0 / p.c), y = rng.uniform(0, 1.0 / p.c);
    const auto a = vector_field({x, y}, p);
    const auto b = oracle::field(x, y, p);
    CHECK(oracle::rel_close(a[0], b[0], 1e-13, 1e-300));
    CHECK(oracle::rel_close(a[1], b[1], 1e-14, 1e-300));
  }
}

TEST_CASE("vector field rejects a nonpositive denominator") {
  const DimensionlessParams p{-1.5, 1.0, 0.3, 0.5, 0.4};
  // D(-1) = 1 + 1.5 - 1 > 0, D(-2) = 1 + 3 - 8 < 0
  try {
    vector_field({-2.0, 0.0}, p);
    FAIL("expected DenominatorNonpositive");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DenominatorNonpositive);
  }
}

TEST_CASE("jacobian: origin and finite differences at 100 random states") {
  const auto J0 = jacobian({0, 0}, published::ex51);
  CHECK(J0.a11 == doctest::Approx(-published::ex51.m));
  CHECK(J0.a12 == 0.0);
  CHECK(J0.a21 == 1.0);
  CHECK(J0.a22 == doctest::Approx(-published::ex51.n));

  Xoshiro256 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const auto p = oracle::random_params(rng);
    const double x = rng.uniform(0.01, 1.0 / p.c), y = rng.uniform(0, 1.0 / p.c);
    const auto J = jacobian({x, y}, p);
    const auto F = oracle::fd_jacobian(x, y, p);
    const double scale = std::max({std::abs(F[0]), std::abs(F[1]), 1e-3});
    CHECK(std::abs(J.a11 - F[0]) <= 1e-6 * scale);
    CHECK(std::abs(J.a12 - F[1]) <= 1e-6 * scale);
    CHECK(J.a21 == 1.0);
    CHECK(J.a22 == -p.n);
  }
}

TEST_CASE("nullcline jacobian agrees with the exact one at equilibria") {
  for (const auto& p : {published::ex51, published::ex52}) {
    const auto roots = oracle::real_equilibrium_roots(p);
    for (double x : roots) {
      if (x <= 0) continue;
      const State s{x, x / p.n};
      const auto A = jacobian(s, p), B = jacobian_on_nullcline(s, p);
      CHECK(A.a11 == doctest::Approx(B.a11).epsilon(1e-8));
      CHECK(A.a12 == doctest::Approx(B.a12).epsilon(1e-8));
    }
  }
}

TEST_CASE("denominator lower bound and trapping boundary") {
  Xoshiro256 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto p = oracle::random_params(rng);
    const double bound = p.a < 0 ? 1.0 + (2.0 * p.a / 3.0) * std::sqrt(-p.a / (3.0 * p.b)) : 1.0;
    CHECK(bound > 0.0);
    for (int k = 0; k <= 50; ++k) {
      const double x = 5.0 * k / 50.0;
      CHECK(denom(x, p) >= bound - 1e-12);
    }
  }
  // on x + y = 1/c the infection term vanishes, so d(x+y)/dt = -m x + x - n y;
  // it is nonpositive when m >= 1 (the nondimensionalized regime)
  Xoshiro256 r2(6);
  for (int i = 0; i < 100; ++i) {
    auto p = oracle::random_params(r2);
    p.m = 1.0 + r2.uniform(0, 2);
    for (int k = 0; k <= 20; ++k) {
      const double x = k / 20.0 / p.c, y = 1.0 / p.c - x;
      const auto f = vector_field({x, y}, p);
      CHECK(f[0] + f[1] <= 1e-12);
    }
  }
}

TEST_CASE("parameter names") {
  DimensionlessParams p = published::ex51;
  CHECK(param_from_string("n") == ParamName::n);
  CHECK(std::string(param_name(ParamName::c)) == "c");
  param_ref(p, ParamName::a) = 0.5;
  CHECK(param_value(p, ParamName::a) == 0.5);
  CHECK_THROWS_AS(param_from_string("q"), std::invalid_argument);
}

}
