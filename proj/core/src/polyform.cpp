#include "hwforms/polyform.hpp"

#include <cmath>

#include "hwforms/errors.hpp"

namespace hwforms {

Polynomial Polynomial::constant(double c) { return monomial(c, 0, 0); }

Polynomial Polynomial::monomial(double c, int px, int py) {
  Polynomial p;
  if (c != 0.0) p.terms_[{px, py}] = c;
  return p;
}

double Polynomial::operator()(double x, double y) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) s += c * std::pow(x, e.first) * std::pow(y, e.second);
  return s;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) terms_[e] += c;
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) terms_[e] -= c;
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) r += Polynomial::monomial(ca * cb, ea.first + eb.first, ea.second + eb.second);
  return r;
}

Polynomial Polynomial::dx() const {
  Polynomial r;
  for (const auto& [e, c] : terms_)
    if (e.first > 0) r += monomial(c * e.first, e.first - 1, e.second);
  return r;
}

Polynomial Polynomial::dy() const {
  Polynomial r;
  for (const auto& [e, c] : terms_)
    if (e.second > 0) r += monomial(c * e.second, e.first, e.second - 1);
  return r;
}

int Polynomial::degree(double tol) const {
  int deg = -1;
  for (const auto& [e, c] : terms_)
    if (std::abs(c) > tol) deg = std::max(deg, e.first + e.second);
  return deg;
}

PolyOneForm d(const Polynomial& f) { return {f.dx(), f.dy()}; }

PolyTwoForm d(const PolyOneForm& w) { return {w.q.dx() - w.p.dy()}; }

Polynomial koszul(const PolyOneForm& w, const Vec2& base) {
  const Polynomial X = Polynomial::monomial(1.0, 1, 0) - Polynomial::constant(base.x());
  const Polynomial Y = Polynomial::monomial(1.0, 0, 1) - Polynomial::constant(base.y());
  return w.p * X + w.q * Y;
}

PolyOneForm koszul(const PolyTwoForm& w, const Vec2& base) {
  // (dx∧dy)(X, ·) = X¹ dy - X² dx
  const Polynomial X = Polynomial::monomial(1.0, 1, 0) - Polynomial::constant(base.x());
  const Polynomial Y = Polynomial::monomial(1.0, 0, 1) - Polynomial::constant(base.y());
  return {-(w.c * Y), w.c * X};
}

Polynomial reference_lambda(int i) {
  switch (i) {
    case 0: return Polynomial::constant(1.0) - Polynomial::monomial(1.0, 1, 0) - Polynomial::monomial(1.0, 0, 1);
    case 1: return Polynomial::monomial(1.0, 1, 0);
    case 2: return Polynomial::monomial(1.0, 0, 1);
    default: throw Error("barycentric index out of range");
  }
}

PolyOneForm reference_whitney(int i, int j) {
  const Polynomial li = reference_lambda(i);
  const Polynomial lj = reference_lambda(j);
  const PolyOneForm dli = d(li);
  const PolyOneForm dlj = d(lj);
  return {li * dlj.p - lj * dli.p, li * dlj.q - lj * dli.q};
}

}  // namespace hwforms
