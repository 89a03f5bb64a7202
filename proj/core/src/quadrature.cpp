#include "hwforms/quadrature.hpp"

#include <cmath>
#include <string>

#include "hwforms/errors.hpp"

namespace hwforms {

namespace {

void add_s3(QuadratureRule& q, double w) {
  q.points.emplace_back(1.0 / 3, 1.0 / 3, 1.0 / 3);
  q.weights.push_back(w);
}

void add_s21(QuadratureRule& q, double a, double w) {
  const double b = 1.0 - 2.0 * a;
  for (const Barycentric& p : {Barycentric{a, a, b}, Barycentric{a, b, a}, Barycentric{b, a, a}}) {
    q.points.push_back(p);
    q.weights.push_back(w);
  }
}

void add_s111(QuadratureRule& q, double a, double b, double w) {
  const double c = 1.0 - a - b;
  for (const Barycentric& p : {Barycentric{a, b, c}, Barycentric{a, c, b}, Barycentric{b, a, c},
                               Barycentric{b, c, a}, Barycentric{c, a, b}, Barycentric{c, b, a}}) {
    q.points.push_back(p);
    q.weights.push_back(w);
  }
}

// Dunavant rules; orbit parameters recomputed to 25 digits from the moment equations.
QuadratureRule make_degree1() {
  QuadratureRule q;
  q.degree = 1;
  add_s3(q, 1.0);
  return q;
}

QuadratureRule make_degree2() {
  QuadratureRule q;
  q.degree = 2;
  add_s21(q, 1.0 / 6, 1.0 / 3);
  return q;
}

QuadratureRule make_degree4() {
  QuadratureRule q;
  q.degree = 4;
  add_s21(q, 0.4459484909159648863183293, 0.2233815896780114656950070);
  add_s21(q, 0.09157621350977074345957146, 0.1099517436553218676383263);
  return q;
}

QuadratureRule make_degree5() {
  QuadratureRule q;
  q.degree = 5;
  const double s15 = std::sqrt(15.0);
  add_s3(q, 9.0 / 40);
  add_s21(q, (6.0 - s15) / 21, (155.0 - s15) / 1200);
  add_s21(q, (6.0 + s15) / 21, (155.0 + s15) / 1200);
  return q;
}

QuadratureRule make_degree6() {
  QuadratureRule q;
  q.degree = 6;
  add_s21(q, 0.2492867451709104212916386, 0.1167862757263793660252896);
  add_s21(q, 0.06308901449150222834033160, 0.05084490637020681692093681);
  add_s111(q, 0.05314504984481694735324967, 0.3103524510337844054166077, 0.08285107561837357519355346);
  return q;
}

}  // namespace

const QuadratureRule& quadrature(int degree) {
  static const QuadratureRule rules[] = {make_degree1(), make_degree2(), make_degree4(), make_degree5(),
                                         make_degree6()};
  switch (degree) {
    case 1: return rules[0];
    case 2: return rules[1];
    case 3:  // no positive-weight 4-point rule; the 6-point degree-4 rule covers it
    case 4: return rules[2];
    case 5: return rules[3];
    case 6: return rules[4];
    default: throw Error("unsupported quadrature degree " + std::to_string(degree) + " (supported: 1..6)");
  }
}

}  // namespace hwforms
