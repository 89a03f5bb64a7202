#include "hwforms/exterior.hpp"

#include <string>

#include <Eigen/LU>

#include "hwforms/errors.hpp"

namespace hwforms {

namespace {

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Barycentric barycentric(const ElementGeometry& geom, const Vec2& point) {
  const Vec2 l12 = geom.T.partialPivLu().solve(point - geom.vertex_coords[0]);
  return {1.0 - l12.x() - l12.y(), l12.x(), l12.y()};
}

Vec2 to_cartesian(const ElementGeometry& geom, const Barycentric& bary) {
  return bary[0] * geom.vertex_coords[0] + bary[1] * geom.vertex_coords[1] + bary[2] * geom.vertex_coords[2];
}

ConstantOneForm whitney_basis(const ElementGeometry& geom, int edge, const Barycentric& bary) {
  if (edge < 0 || edge > 2) throw Error("Whitney edge index out of range: " + std::to_string(edge));
  const auto [i, j] = kLocalEdges[edge];
  return bary[i] * geom.grad_lambda[j] - bary[j] * geom.grad_lambda[i];
}

ConstantOneForm p1lambda1_basis(const ElementGeometry& geom, int index, const Barycentric& bary) {
  if (index < 0 || index > 5) throw Error("P1Lambda1 index out of range: " + std::to_string(index));
  const auto [i, j] = kP1Lambda1Pairs[index];
  return bary[i] * geom.grad_lambda[j];
}

std::array<ConstantOneForm, 3> whitney_values(const ElementGeometry& geom, const Barycentric& bary) {
  std::array<ConstantOneForm, 3> out;
  for (int e = 0; e < 3; ++e) {
    const auto [i, j] = kLocalEdges[e];
    out[e] = bary[i] * geom.grad_lambda[j] - bary[j] * geom.grad_lambda[i];
  }
  return out;
}

std::array<ConstantOneForm, 6> p1lambda1_values(const ElementGeometry& geom, const Barycentric& bary) {
  std::array<ConstantOneForm, 6> out;
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kP1Lambda1Pairs[k];
    out[k] = bary[i] * geom.grad_lambda[j];
  }
  return out;
}

double exterior_derivative_whitney(std::span<const double, 3> coeffs, const ElementGeometry& geom) {
  double d = 0.0;
  for (int e = 0; e < 3; ++e) {
    const auto [i, j] = kLocalEdges[e];
    d += coeffs[e] * 2.0 * wedge11(geom.grad_lambda[i], geom.grad_lambda[j]);
  }
  return d;
}

double exterior_derivative_p1lambda1(std::span<const double, 6> coeffs, const ElementGeometry& geom) {
  double d = 0.0;
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kP1Lambda1Pairs[k];
    d += coeffs[k] * wedge11(geom.grad_lambda[i], geom.grad_lambda[j]);
  }
  return d;
}

SpaceDimensions space_dimensions(int r, int k, int m) {
  if (r < 1 || m < 0 || k < 0 || k > m)
    throw Error("space_dimensions: need r >= 1 and 0 <= k <= m (got r=" + std::to_string(r) +
                ", k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")");
  return {binomial(r + m, m) * binomial(m, k), binomial(r + k - 1, k) * binomial(m + r, m - k)};
}

}  // namespace hwforms
