#pragma once

#include <vector>

#include "hwforms/exterior.hpp"

namespace hwforms {

/// Symmetric triangle rule. Weights sum to one; multiply by the element area.
struct QuadratureRule {
  int degree = 0;
  std::vector<Barycentric> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

/// Rule exact for polynomials of total degree <= `degree`, degree in 1..6.
/// All rules have positive weights and interior points.
const QuadratureRule& quadrature(int degree);

inline constexpr int kDefaultQuadratureDegree = 4;

}  // namespace hwforms
