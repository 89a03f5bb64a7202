#include "hwforms/material.hpp"

#include <cmath>

#include "hwforms/errors.hpp"

namespace hwforms {

namespace {

Vec4 stacked(const PointKinematics& kin) { return {kin.theta1.x(), kin.theta1.y(), kin.theta2.x(), kin.theta2.y()}; }

Vec4 jacobian_gradient(const Vec4& f) { return {f[3], -f[2], -f[1], f[0]}; }

Mat4 jacobian_hessian() {
  Mat4 h = Mat4::Zero();
  h(0, 3) = h(3, 0) = 1.0;
  h(1, 2) = h(2, 1) = -1.0;
  return h;
}

/// Maps the 12 coefficients to the stacked point components.
Eigen::Matrix<double, 4, 12> basis_map(std::span<const ConstantOneForm, 6> psi) {
  Eigen::Matrix<double, 4, 12> B = Eigen::Matrix<double, 4, 12>::Zero();
  for (int k = 0; k < 6; ++k) {
    B.block<2, 1>(0, k) = psi[k];
    B.block<2, 1>(2, 6 + k) = psi[k];
  }
  return B;
}

void require_positive(double J) {
  if (!(J > 0.0)) throw NonPositiveJacobian(J);
}

}  // namespace

void NeoHookeanParams::validate() const {
  if (!(mu > 0.0)) throw ConfigError("material: mu must be > 0");
  if (!(kappa > 0.0)) throw ConfigError("material: kappa must be > 0");
}

PointKinematics PointKinematics::from_forms(const ConstantOneForm& theta1, const ConstantOneForm& theta2) {
  return {theta1, theta2, theta1.squaredNorm() + theta2.squaredNorm(), hodge_star_2form(wedge11(theta1, theta2))};
}

Mat2 right_cauchy_green(const PointKinematics& kin) {
  return kin.theta1 * kin.theta1.transpose() + kin.theta2 * kin.theta2.transpose();
}

double energy_density(const NeoHookeanParams& p, const PointKinematics& kin) {
  require_positive(kin.J);
  const double lnJ = std::log(kin.J);
  return 0.5 * p.mu * (kin.I1 - 2.0) - p.mu * lnJ + 0.5 * p.kappa * lnJ * lnJ;
}

PointEnergy energy_pointwise(const NeoHookeanParams& p, const PointKinematics& kin) {
  require_positive(kin.J);
  const double J = kin.J;
  const double lnJ = std::log(J);
  const Vec4 f = stacked(kin);
  const Vec4 gJ = jacobian_gradient(f);

  PointEnergy out;
  out.value = 0.5 * p.mu * (kin.I1 - 2.0) - p.mu * lnJ + 0.5 * p.kappa * lnJ * lnJ;
  // D I₁ = 2θ, so the μ/2 prefactor leaves μθ.
  const double dW_dJ = (p.kappa * lnJ - p.mu) / J;
  out.gradient = p.mu * f + dW_dJ * gJ;
  // d/dJ[(κ ln J - μ)/J] = (μ + κ - κ ln J)/J²; the volumetric modulus is κ throughout.
  const double d2W_dJ2 = (p.mu + p.kappa - p.kappa * lnJ) / (J * J);
  out.hessian = p.mu * Mat4::Identity() + d2W_dJ2 * gJ * gJ.transpose() + dW_dJ * jacobian_hessian();
  return out;
}

Vec12 energy_gradient(const NeoHookeanParams& params, const PointKinematics& kin,
                      std::span<const ConstantOneForm, 6> basis_values) {
  const auto B = basis_map(basis_values);
  return B.transpose() * energy_pointwise(params, kin).gradient;
}

Mat12 energy_hessian(const NeoHookeanParams& params, const PointKinematics& kin,
                     std::span<const ConstantOneForm, 6> basis_values) {
  const auto B = basis_map(basis_values);
  return B.transpose() * energy_pointwise(params, kin).hessian * B;
}

Mat2 piola_stress(const PointKinematics& kin, const ConstantOneForm& t1, const ConstantOneForm& t2) {
  return t1 * kin.theta2.transpose() + t2 * kin.theta1.transpose();
}

}  // namespace hwforms
