#pragma once

#include <map>
#include <utility>

#include "hwforms/mesh.hpp"

namespace hwforms {

/// Polynomial in (x, y) stored as exponent pair -> coefficient.
class Polynomial {
public:
  using Exponent = std::pair<int, int>;

  Polynomial() = default;
  static Polynomial constant(double c);
  static Polynomial monomial(double c, int px, int py);

  double operator()(double x, double y) const;
  double operator()(const Vec2& p) const { return (*this)(p.x(), p.y()); }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(double s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return *this * -1.0; }

  Polynomial dx() const;
  Polynomial dy() const;

  /// Total degree of the highest non-negligible term; -1 for the zero polynomial.
  int degree(double tol = 1e-14) const;
  bool is_zero(double tol = 1e-14) const { return degree(tol) < 0; }

  const std::map<Exponent, double>& terms() const { return terms_; }

private:
  std::map<Exponent, double> terms_;
};

/// p dx + q dy.
struct PolyOneForm {
  Polynomial p;
  Polynomial q;
};

/// c dx∧dy.
struct PolyTwoForm {
  Polynomial c;
};

PolyOneForm d(const Polynomial& f);
PolyTwoForm d(const PolyOneForm& w);

/// Koszul operator: contraction with X = x - base. Lowers form degree by one,
/// raises polynomial degree by one.
Polynomial koszul(const PolyOneForm& w, const Vec2& base = Vec2::Zero());
PolyOneForm koszul(const PolyTwoForm& w, const Vec2& base = Vec2::Zero());

/// Barycentric coordinates on the reference triangle (0,0), (1,0), (0,1).
Polynomial reference_lambda(int i);

/// λⁱdλʲ - λʲdλⁱ on the reference triangle.
PolyOneForm reference_whitney(int i, int j);

}  // namespace hwforms
