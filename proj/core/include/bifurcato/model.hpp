#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace bifurcato {

struct DimensionalParams {
  double Lambda = 1.0;  // recruitment
  double d = 1.0;       // natural death
  double mu = 1.0;      // recovery
  double delta = 1.0;   // immunity loss
  double kappa = 1.0;   // infection rate
  double beta = 0.0;
  double gamma = 1.0;   // psychological inhibition
};

struct DimensionlessParams {
  double a = 0.0;
  double b = 1.0;
  double c = 1.0;
  double m = 2.0;
  double n = 2.0;
};

enum class ParamName { a, b, c, m, n };

// Throws std::invalid_argument for names other than a, b, c, m, n.
ParamName param_from_string(std::string_view name);
const char* param_name(ParamName name);
double& param_ref(DimensionlessParams& p, ParamName name);
double param_value(const DimensionlessParams& p, ParamName name);

struct State {
  double x = 0.0;
  double y = 0.0;
};

struct Mat2 {
  double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;
  double trace() const { return a11 + a22; }
  double det() const { return a11 * a22 - a12 * a21; }
  double frobenius() const;
};

// Lower bound -3 (b/4)^(1/3) for a; the bound itself is rejected.
double a_lower_bound(double b);

// Throws Error(ConstraintViolation) naming the violated inequality.
const DimensionlessParams& validate(const DimensionlessParams& p);
const DimensionalParams& validate(const DimensionalParams& p);

DimensionlessParams nondimensionalize(const DimensionalParams& p);

double incidence(double I, const DimensionalParams& p);

enum class Monotonicity { Increasing, IncreasingDecreasing };
struct MonotonicityInfo {
  Monotonicity kind = Monotonicity::Increasing;
  std::optional<double> extremum;
};
MonotonicityInfo monotonicity_class(const DimensionalParams& p);

// D = 1 + a x + b x^3
double denom(double x, const DimensionlessParams& p);

std::array<double, 2> vector_field(const State& s, const DimensionlessParams& p);
Mat2 jacobian(const State& s, const DimensionlessParams& p);

// Simplified Jacobian that substitutes x^3 (1 - c x - c y) / D = m x. Only valid
// on the x-nullcline, in particular at equilibria.
Mat2 jacobian_on_nullcline(const State& s, const DimensionlessParams& p);

// p(x) = c x^3 / D and G(x) = 1/c - x - m D / (c x^2); the prey-isocline form
// used by the Hopf and focal-value analysis.
double p_fun(double x, const DimensionlessParams& p);
double G_fun(double x, const DimensionlessParams& p);

}  // namespace bifurcato
