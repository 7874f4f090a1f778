#include <doctest.h>

#include <cmath>

#include "bifurcato/dynamics.hpp"
#include "bifurcato/equilibria.hpp"
#include "bifurcato/error.hpp"
#include "bifurcato/rng.hpp"
#include "../oracles.hpp"
#include "../published.hpp"

using namespace bifurcato;

namespace {

// Classical RK4 with a fixed step on the oracle field.
std::array<double, 2> rk4(double x, double y, const DimensionlessParams& p, double t_end, double h) {
  const int steps = static_cast<int>(std::round(t_end / h));
  for (int i = 0; i < steps; ++i) {
    const auto k1 = oracle::field(x, y, p);
    const auto k2 = oracle::field(x + h / 2 * k1[0], y + h / 2 * k1[1], p);
    const auto k3 = oracle::field(x + h / 2 * k2[0], y + h / 2 * k2[1], p);
    const auto k4 = oracle::field(x + h * k3[0], y + h * k3[1], p);
    x += h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
    y += h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);
  }
  return {x, y};
}

const DimensionlessParams generic{0.3, 1.2, 0.05, 0.03, 0.07};

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("trajectory matches a fixed-step oracle") {
  const auto tr = integrate(State{2.0, 10.0}, generic, 20.0);
  const auto want = rk4(2.0, 10.0, generic, 20.0, 1e-3);
  CHECK(tr.t.back() == doctest::Approx(20.0));
  CHECK(tr.x.back() == doctest::Approx(want[0]).epsilon(1e-8));
  CHECK(tr.y.back() == doctest::Approx(want[1]).epsilon(1e-8));
  CHECK_FALSE(tr.started_outside);
}

TEST_CASE("tolerance refinement converges") {
  IntegratorOptions loose, tight;
  loose.rtol = 1e-7;
  loose.atol = 1e-9;
  tight.rtol = 1e-12;
  tight.atol = 1e-14;
  const auto a = integrate(State{1.0, 5.0}, generic, 50.0, loose);
  const auto b = integrate(State{1.0, 5.0}, generic, 50.0, tight);
  CHECK(std::abs(a.x.back() - b.x.back()) < 1e-5);
  CHECK(b.stats.steps > a.stats.steps);
}

TEST_CASE("equilibria are fixed") {
  for (const auto& e : solve_equilibria(published::ex51)) {
    const auto tr = integrate(State{e.x, e.y}, published::ex51, 50.0);
    CHECK(std::abs(tr.x.back() - e.x) < 1e-8 * std::max(1.0, e.x));
    CHECK(std::abs(tr.y.back() - e.y) < 1e-8 * std::max(1.0, e.y));
  }
}

TEST_CASE("dense output and reversal") {
  IntegratorOptions o;
  o.sample_dt = 0.5;
  const auto tr = integrate(State{1.0, 5.0}, generic, 10.0, o);
  REQUIRE(tr.t.size() == 21);
  for (std::size_t i = 0; i < tr.t.size(); ++i) CHECK(tr.t[i] == doctest::Approx(0.5 * i));

  IntegratorOptions back;
  back.backward = true;
  const auto rev = integrate(State{tr.x.back(), tr.y.back()}, generic, 10.0, back);
  CHECK(rev.x.back() == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(rev.y.back() == doctest::Approx(5.0).epsilon(1e-7));
}

TEST_CASE("invariant region flag") {
  CHECK(in_invariant_region(State{0.1, 0.1}, generic));
  CHECK_FALSE(in_invariant_region(State{-0.1, 0.1}, generic));
  CHECK_FALSE(in_invariant_region(State{10.0, 15.0}, generic));
  CHECK(integrate(State{10.0, 15.0}, generic, 1.0).started_outside);
}

TEST_CASE("winding numbers") {
  std::vector<State> circle;
  for (int i = 0; i < 100; ++i) {
    const double t = 2 * M_PI * i / 100;
    circle.push_back(State{std::cos(t), std::sin(t)});
  }
  CHECK(winding_number(circle, 0.0, 0.0) == 1);
  CHECK(winding_number(circle, 3.0, 0.0) == 0);
  std::vector<State> reversed(circle.rbegin(), circle.rend());
  CHECK(winding_number(reversed, 0.0, 0.0) == -1);
}

TEST_CASE("limit cycle of the order-2 example") {
  const auto& p = published::ex51;
  const auto cycles = find_limit_cycles(p, section_x_limit(p), 200);
  REQUIRE(cycles.size() == 1);
  const auto& c = cycles[0];
  CHECK(c.x0 == doctest::Approx(0.419893).epsilon(1e-5));
  CHECK(c.period == doctest::Approx(95.37).epsilon(1e-3));
  CHECK(c.stability == CycleStability::SemiStable);
  CHECK(std::abs(c.winding) == 1);
  // the forward and reversed return maps are inverses of each other
  CHECK(c.slope * c.slope_backward == doctest::Approx(1.0).epsilon(1e-4));

  const auto sec = section_for(p);
  const auto r = poincare_return(c.x0, p, sec, Direction::Forward);
  CHECK(std::abs(r.x1 - c.x0) < 1e-7);
  CHECK(r.T == doctest::Approx(c.period).epsilon(1e-6));
}

TEST_CASE("limit cycle of the order-3 example") {
  const auto cycles = find_limit_cycles(published::ex52, 3.2, 200);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].x0 == doctest::Approx(1.416934).epsilon(1e-5));
  CHECK(cycles[0].stability == CycleStability::SemiStable);
}

TEST_CASE("no equilibrium, no cycles") {
  const DimensionlessParams p{0.0, 1.0, 0.9, 2.0, 2.0};
  CHECK(find_limit_cycles(p, 1.0, 20).empty());
  CHECK_THROWS_AS(section_for(p), Error);
}

TEST_CASE("orbits beyond the cycle do not return") {
  CHECK_THROWS_AS(poincare_return(0.9, published::ex51, Direction::Forward), Error);
}

TEST_CASE("global stability without endemic equilibria") {
  Xoshiro256 rng(71);
  int sets = 0;
  while (sets < 3) {
    DimensionlessParams p = oracle::random_params(rng);
    p.m = std::max(p.m, 1.05);
    if (discriminant(p) <= 0.0) continue;
    ++sets;
    for (int k = 0; k < 20; ++k) {
      const double x = rng.uniform(0.0, 1.0 / p.c);
      const double y = rng.uniform(0.0, 1.0 / p.c - x);
      // slowest linear rate at the origin is min(m, n)
      const auto tr = integrate(State{x, y}, p, 40.0 / std::min(p.m, p.n) + 50.0);
      CHECK(std::hypot(tr.x.back(), tr.y.back()) < 1e-6);
    }
  }
}

}  // TEST_SUITE
