#pragma once

#include <span>

#include <Eigen/Core>

#include "hwforms/exterior.hpp"

namespace hwforms {

/// W(θ¹,θ²) = μ/2 (I₁ - 2) - μ ln J + κ/2 (ln J)².
struct NeoHookeanParams {
  double mu = 1.0;
  double kappa = 1.0;

  /// Throws ConfigError unless mu > 0 and kappa > 0.
  void validate() const;
};

/// Deformation 1-forms at a point together with their invariants.
/// I₁ = |θ¹|² + |θ²|² and J = ⋆(θ¹∧θ²); J may have any sign here.
struct PointKinematics {
  ConstantOneForm theta1 = ConstantOneForm::UnitX();
  ConstantOneForm theta2 = ConstantOneForm::UnitY();
  double I1 = 2.0;
  double J = 1.0;

  static PointKinematics from_forms(const ConstantOneForm& theta1, const ConstantOneForm& theta2);
};

/// C = Σᵢ θⁱ⊗θⁱ.
Mat2 right_cauchy_green(const PointKinematics& kin);

using Vec4 = Eigen::Matrix<double, 4, 1>;
using Mat4 = Eigen::Matrix<double, 4, 4>;
using Vec12 = Eigen::Matrix<double, 12, 1>;
using Mat12 = Eigen::Matrix<double, 12, 12>;

/// W and its derivatives with respect to the stacked components
/// (θ¹₁, θ¹₂, θ²₁, θ²₂).
struct PointEnergy {
  double value = 0.0;
  Vec4 gradient = Vec4::Zero();
  Mat4 hessian = Mat4::Zero();
};

/// Throws NonPositiveJacobian when kin.J <= 0.
double energy_density(const NeoHookeanParams& params, const PointKinematics& kin);
PointEnergy energy_pointwise(const NeoHookeanParams& params, const PointKinematics& kin);

/// Derivatives with respect to P₁Λ¹ coefficients: entries 0..5 belong to θ¹,
/// 6..11 to θ², both expanded over the same six basis values.
Vec12 energy_gradient(const NeoHookeanParams& params, const PointKinematics& kin,
                      std::span<const ConstantOneForm, 6> basis_values);
Mat12 energy_hessian(const NeoHookeanParams& params, const PointKinematics& kin,
                     std::span<const ConstantOneForm, 6> basis_values);

/// P = t¹⊗θ² + t²⊗θ¹ with P(a, b) = t¹_a θ²_b + t²_a θ¹_b.
Mat2 piola_stress(const PointKinematics& kin, const ConstantOneForm& t1, const ConstantOneForm& t2);

}  // namespace hwforms
