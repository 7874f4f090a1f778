#include "bifurcato/jet.hpp"

#include <stdexcept>

namespace bifurcato {

Jet Jet::constant(double v) {
  Jet j;
  j.c_[0] = v;
  return j;
}

Jet Jet::variable(double x0) {
  Jet j;
  j.c_[0] = x0;
  j.c_[1] = 1.0;
  return j;
}

double Jet::derivative(int k) const {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f * (*this)[k];
}

Jet& Jet::operator+=(const Jet& o) {
  for (int k = 0; k <= K; ++k) c_[k] += o.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  for (int k = 0; k <= K; ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet& Jet::operator*=(const Jet& o) {
  std::array<double, K + 1> r{};
  for (int i = 0; i <= K; ++i) {
    if (c_[i] == 0.0) continue;
    for (int j = 0; i + j <= K; ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = r;
  return *this;
}

Jet& Jet::operator/=(const Jet& o) {
  if (o.c_[0] == 0.0) throw std::domain_error("jet division by a series with zero constant term");
  std::array<double, K + 1> r{};
  for (int k = 0; k <= K; ++k) {
    double s = c_[k];
    for (int j = 1; j <= k; ++j) s -= o.c_[j] * r[k - j];
    r[k] = s / o.c_[0];
  }
  c_ = r;
  return *this;
}

Jet Jet::operator-() const {
  Jet r;
  for (int k = 0; k <= K; ++k) r.c_[k] = -c_[k];
  return r;
}

Jet Jet::reciprocal() const { return Jet::constant(1.0) / *this; }

Jet Jet::diff() const {
  Jet r;
  for (int k = 0; k < K; ++k) r.c_[k] = (k + 1) * c_[k + 1];
  return r;
}

Jet Jet::integral() const {
  Jet r;
  for (int k = 0; k < K; ++k) r.c_[k + 1] = c_[k] / (k + 1);
  return r;
}

Jet Jet::shift_down() const {
  Jet r;
  for (int k = 0; k < K; ++k) r.c_[k] = c_[k + 1];
  return r;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator*(Jet a, const Jet& b) { return a *= b; }
Jet operator/(Jet a, const Jet& b) { return a /= b; }
Jet operator+(Jet a, double b) { a[0] += b; return a; }
Jet operator+(double a, Jet b) { b[0] += a; return b; }
Jet operator-(Jet a, double b) { a[0] -= b; return a; }
Jet operator-(double a, const Jet& b) { Jet r = -b; r[0] += a; return r; }
Jet operator*(Jet a, double b) {
  for (int k = 0; k <= Jet::K; ++k) a[k] *= b;
  return a;
}
Jet operator*(double a, Jet b) { return b * a; }
Jet operator/(Jet a, double b) {
  for (int k = 0; k <= Jet::K; ++k) a[k] /= b;
  return a;
}
Jet operator/(double a, const Jet& b) { return Jet::constant(a) / b; }

Jet compose(const Jet& f, const Jet& g) {
  if (g[0] != 0.0) throw std::domain_error("compose requires g(0) = 0");
  // Horner in g
  Jet r = Jet::constant(f[Jet::K]);
  for (int k = Jet::K - 1; k >= 0; --k) {
    r *= g;
    r[0] += f[k];
  }
  return r;
}

}  // namespace bifurcato
