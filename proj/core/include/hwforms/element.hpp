#pragma once

#include "hwforms/dof_layout.hpp"
#include "hwforms/material.hpp"
#include "hwforms/quadrature.hpp"

namespace hwforms {

/// Fields of one element evaluated at a point: θ¹, θ², t¹, t², dφ¹, dφ².
struct PointFields {
  ConstantOneForm theta1, theta2, t1, t2, dphi1, dphi2;
};

PointFields evaluate_fields(const ElementGeometry& geom, const LocalVector& local_state, const Barycentric& bary);

/// Coefficient of dx¹∧dx² in the coupling integrand
///   (t¹⊗θ² + t²⊗θ¹) ∧̇ (E₁⊗(θ¹ - dφ¹) + E₂⊗(θ² - dφ²)),
/// where (α⊗a)∧̇(v⊗b) = α(v) a∧b and E_j is the Cartesian frame, so tⁱ(E_j) is
/// the j-th component of tⁱ.
double coupling_density(const PointFields& f);

/// What element_evaluate should compute.
enum class ElementOutput { Value, Residual, Tangent };

struct ElementContribution {
  double value = 0.0;
  LocalVector residual = LocalVector::Zero();
  LocalMatrix tangent = LocalMatrix::Zero();
};

/// Element part of the discrete mixed functional
///   ∫ W(θ¹, θ²) dA - ∫ coupling_density dA
/// and its exact first and second derivatives in the local unknowns. Boundary
/// loads are handled by the assembler. Throws NonPositiveJacobian if any
/// quadrature point has J <= 0.
ElementContribution element_evaluate(const ElementGeometry& geom, const LocalVector& local_state,
                                     const NeoHookeanParams& params, const QuadratureRule& quad,
                                     ElementOutput output);

double element_functional(const ElementGeometry& geom, const LocalVector& local_state,
                          const NeoHookeanParams& params, const QuadratureRule& quad);
LocalVector element_residual(const ElementGeometry& geom, const LocalVector& local_state,
                             const NeoHookeanParams& params, const QuadratureRule& quad);
LocalMatrix element_tangent(const ElementGeometry& geom, const LocalVector& local_state,
                            const NeoHookeanParams& params, const QuadratureRule& quad);

/// Smallest J over the quadrature points (no admissibility check).
double element_min_jacobian(const ElementGeometry& geom, const LocalVector& local_state, const QuadratureRule& quad);

}  // namespace hwforms
