#pragma once

#include <array>
#include <span>

#include "hwforms/mesh.hpp"

namespace hwforms {

/// Constant 1-form a₁ dx¹ + a₂ dx² in the fixed Cartesian co-frame.
using ConstantOneForm = Vec2;

/// Barycentric point (λ⁰, λ¹, λ²).
using Barycentric = Eigen::Vector3d;

/// Local P₁Λ¹ basis λⁱdλʲ, ordered by (i, j) as below. Consecutive pairs share an edge.
inline constexpr std::array<std::array<int, 2>, 6> kP1Lambda1Pairs{{{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}, {0, 2}}};

Barycentric barycentric(const ElementGeometry& geom, const Vec2& point);
Vec2 to_cartesian(const ElementGeometry& geom, const Barycentric& bary);

/// Whitney form λⁱdλʲ - λʲdλⁱ of local edge kLocalEdges[edge] evaluated at `bary`.
ConstantOneForm whitney_basis(const ElementGeometry& geom, int edge, const Barycentric& bary);

/// λⁱdλʲ for (i, j) = kP1Lambda1Pairs[index].
ConstantOneForm p1lambda1_basis(const ElementGeometry& geom, int index, const Barycentric& bary);

/// All three Whitney / all six P₁Λ¹ basis values at one point.
std::array<ConstantOneForm, 3> whitney_values(const ElementGeometry& geom, const Barycentric& bary);
std::array<ConstantOneForm, 6> p1lambda1_values(const ElementGeometry& geom, const Barycentric& bary);

/// Coefficient of dx¹∧dx² in a∧b.
inline double wedge11(const ConstantOneForm& a, const ConstantOneForm& b) { return a.x() * b.y() - a.y() * b.x(); }

/// ⋆(c dx¹∧dx²) for the Euclidean metric and standard orientation.
inline double hodge_star_2form(double coefficient) { return coefficient; }

/// d of Σ cₑ φₑ over the Whitney basis; constant on the element.
double exterior_derivative_whitney(std::span<const double, 3> coeffs, const ElementGeometry& geom);

/// d of Σ cₖ λⁱdλʲ over the P₁Λ¹ basis; d(λⁱdλʲ) = dλⁱ∧dλʲ, so the result is constant.
double exterior_derivative_p1lambda1(std::span<const double, 6> coeffs, const ElementGeometry& geom);

struct SpaceDimensions {
  long full = 0;     // dim P_r Λᵏ(ℝᵐ)
  long trimmed = 0;  // dim P_r⁻ Λᵏ(ℝᵐ)
};

/// Dimensions of the full and trimmed polynomial form spaces on an m-simplex.
/// Requires r >= 1 and 0 <= k <= m.
SpaceDimensions space_dimensions(int r, int k, int m);

}  // namespace hwforms
