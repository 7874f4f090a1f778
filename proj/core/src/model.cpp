#include "bifurcato/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "bifurcato/error.hpp"

namespace bifurcato {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    std::ostringstream os;
    os << name << " > 0 violated (" << name << " = " << v << ")";
    throw Error(ErrorKind::ConstraintViolation, os.str());
  }
}

void check_denominator(double D, double x) {
  if (!(D > 0.0)) {
    std::ostringstream os;
    os << "1 + a x + b x^3 = " << D << " at x = " << x;
    throw Error(ErrorKind::DenominatorNonpositive, os.str());
  }
}

}  // namespace

ParamName param_from_string(std::string_view name) {
  if (name == "a") return ParamName::a;
  if (name == "b") return ParamName::b;
  if (name == "c") return ParamName::c;
  if (name == "m") return ParamName::m;
  if (name == "n") return ParamName::n;
  throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
}

const char* param_name(ParamName name) {
  switch (name) {
    case ParamName::a: return "a";
    case ParamName::b: return "b";
    case ParamName::c: return "c";
    case ParamName::m: return "m";
    case ParamName::n: return "n";
  }
  return "?";
}

double& param_ref(DimensionlessParams& p, ParamName name) {
  switch (name) {
    case ParamName::a: return p.a;
    case ParamName::b: return p.b;
    case ParamName::c: return p.c;
    case ParamName::m: return p.m;
    case ParamName::n: return p.n;
  }
  return p.a;
}

double param_value(const DimensionlessParams& p, ParamName name) {
  DimensionlessParams q = p;
  return param_ref(q, name);
}

double Mat2::frobenius() const {
  return std::sqrt(a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22);
}

double a_lower_bound(double b) { return -3.0 * std::cbrt(b / 4.0); }

const DimensionlessParams& validate(const DimensionlessParams& p) {
  require_positive(p.b, "b");
  require_positive(p.c, "c");
  require_positive(p.m, "m");
  require_positive(p.n, "n");
  if (!std::isfinite(p.a) || !(p.a > a_lower_bound(p.b))) {
    std::ostringstream os;
    os << "a > -3 (b/4)^(1/3) violated (a = " << p.a << ", bound = " << a_lower_bound(p.b) << ")";
    throw Error(ErrorKind::ConstraintViolation, os.str());
  }
  return p;
}

const DimensionalParams& validate(const DimensionalParams& p) {
  require_positive(p.Lambda, "Lambda");
  require_positive(p.d, "d");
  require_positive(p.mu, "mu");
  require_positive(p.delta, "delta");
  require_positive(p.kappa, "kappa");
  require_positive(p.gamma, "gamma");
  const double bound = -3.0 * std::cbrt(p.gamma / 4.0);
  if (!std::isfinite(p.beta) || !(p.beta > bound)) {
    std::ostringstream os;
    os << "beta > -3 (gamma/4)^(1/3) violated (beta = " << p.beta << ", bound = " << bound << ")";
    throw Error(ErrorKind::ConstraintViolation, os.str());
  }
  return p;
}

DimensionlessParams nondimensionalize(const DimensionalParams& p) {
  validate(p);
  const double s = std::sqrt(p.d * p.mu / (p.kappa * p.Lambda));
  DimensionlessParams q;
  q.a = p.beta * s;
  q.b = p.d * p.mu * p.gamma / (p.kappa * p.Lambda) * s;
  q.c = p.d / p.Lambda * s;
  q.m = (p.d + p.mu) / p.mu;
  q.n = (p.d + p.delta) / p.mu;
  validate(q);
  return q;
}

double incidence(double I, const DimensionalParams& p) {
  const double I3 = I * I * I;
  return p.kappa * I3 / (1.0 + p.beta * I + p.gamma * I3);
}

MonotonicityInfo monotonicity_class(const DimensionalParams& p) {
  // g'(I) has numerator kappa I^2 (3 + 2 beta I)
  MonotonicityInfo info;
  if (p.beta < 0.0) {
    info.kind = Monotonicity::IncreasingDecreasing;
    info.extremum = -3.0 / (2.0 * p.beta);
  }
  return info;
}

double denom(double x, const DimensionlessParams& p) { return 1.0 + p.a * x + p.b * x * x * x; }

std::array<double, 2> vector_field(const State& s, const DimensionlessParams& p) {
  const double x = s.x;
  const double D = denom(x, p);
  check_denominator(D, x);
  const double x3 = x * x * x;
  return {x3 / D * (1.0 - p.c * x - p.c * s.y) - p.m * x, x - p.n * s.y};
}

Mat2 jacobian(const State& s, const DimensionlessParams& p) {
  const double x = s.x, y = s.y;
  const double D = denom(x, p);
  check_denominator(D, x);
  const double x2 = x * x, x3 = x2 * x;
  const double D2 = D * D;
  // d/dx [x^3 (1 - c x - c y) / D] over the common denominator D^2
  const double num = (3.0 * x2 - 4.0 * p.c * x3 - 3.0 * p.c * x2 * y) * D -
                     x3 * (1.0 - p.c * x - p.c * y) * (p.a + 3.0 * p.b * x2);
  Mat2 J;
  J.a11 = num / D2 - p.m;
  J.a12 = -p.c * x3 / D;
  J.a21 = 1.0;
  J.a22 = -p.n;
  return J;
}

Mat2 jacobian_on_nullcline(const State& s, const DimensionlessParams& p) {
  const double x = s.x, y = s.y;
  const double D = denom(x, p);
  check_denominator(D, x);
  const double x2 = x * x, x3 = x2 * x;
  Mat2 J;
  J.a11 = (-2.0 * p.a * p.m * x - 4.0 * (p.b * p.m + p.c) * x3 - 3.0 * p.c * x2 * y - p.m + 3.0 * x2) / D;
  J.a12 = -p.c * x3 / D;
  J.a21 = 1.0;
  J.a22 = -p.n;
  return J;
}

double p_fun(double x, const DimensionlessParams& p) { return p.c * x * x * x / denom(x, p); }

double G_fun(double x, const DimensionlessParams& p) {
  return 1.0 / p.c - x - p.m * denom(x, p) / (p.c * x * x);
}

}  // namespace bifurcato
