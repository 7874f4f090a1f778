#pragma once

#include <array>
#include <cstddef>

namespace bifurcato {

// Truncated Taylor series c0 + c1 s + ... + cK s^K about an expansion point.
class Jet {
 public:
  static constexpr int K = 10;

  Jet() { c_.fill(0.0); }
  static Jet constant(double v);
  // The independent variable x = x0 + s.
  static Jet variable(double x0);

  double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  double& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

  // k-th derivative at the expansion point: k! c_k
  double derivative(int k) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet operator-() const;

  // 1/this; requires c0 != 0
  Jet reciprocal() const;
  // d/ds
  Jet diff() const;
  // antiderivative vanishing at s = 0
  Jet integral() const;
  // this(s) / s; requires c0 == 0 (c0 is dropped)
  Jet shift_down() const;

 private:
  std::array<double, K + 1> c_;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(Jet a, const Jet& b);
Jet operator/(Jet a, const Jet& b);
Jet operator+(Jet a, double b);
Jet operator+(double a, Jet b);
Jet operator-(Jet a, double b);
Jet operator-(double a, const Jet& b);
Jet operator*(Jet a, double b);
Jet operator*(double a, Jet b);
Jet operator/(Jet a, double b);
Jet operator/(double a, const Jet& b);

// f(g(s)) for g with g(0) = 0.
Jet compose(const Jet& f, const Jet& g);

}  // namespace bifurcato
