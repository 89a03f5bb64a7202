#include "hwforms/element.hpp"

#include <algorithm>
#include <limits>

namespace hwforms {

namespace {

// Pointwise field vector v = (θ¹, θ², t¹, t², dφ¹, dφ²), two components each.
constexpr int kVTheta1 = 0;
constexpr int kVTheta2 = 2;
constexpr int kVT1 = 4;
constexpr int kVT2 = 6;
constexpr int kVG1 = 8;
constexpr int kVG2 = 10;
constexpr int kNumFields = 12;

using FieldVector = Eigen::Matrix<double, kNumFields, 1>;
using FieldMatrix = Eigen::Matrix<double, kNumFields, kNumFields>;
using FieldMap = Eigen::Matrix<double, kNumFields, local::kSize>;

/// s · v[a] · v[b] · v[c]
struct CubicTerm {
  double s;
  int a, b, c;
};

/// The coupling density is a sum of sixteen cubic monomials in v:
///   Σ_j t¹_j (θ² ∧ (θʲ - dφʲ)) + t²_j (θ¹ ∧ (θʲ - dφʲ)).
std::array<CubicTerm, 16> make_coupling_terms() {
  std::array<CubicTerm, 16> terms{};
  int n = 0;
  const int theta[2] = {kVTheta1, kVTheta2};
  const int grad[2] = {kVG1, kVG2};
  // (multiplier, wedge partner): t¹ pairs with θ², t² with θ¹.
  const std::array<std::array<int, 2>, 2> pairs{{{kVT1, kVTheta2}, {kVT2, kVTheta1}}};
  for (int j = 0; j < 2; ++j) {
    for (const auto& [t, a] : pairs) {
      const int tj = t + j;
      // a ∧ b = a_x b_y - a_y b_x with b = θʲ - dφʲ
      terms[n++] = {+1.0, tj, a + 0, theta[j] + 1};
      terms[n++] = {-1.0, tj, a + 0, grad[j] + 1};
      terms[n++] = {-1.0, tj, a + 1, theta[j] + 0};
      terms[n++] = {+1.0, tj, a + 1, grad[j] + 0};
    }
  }
  return terms;
}

const std::array<CubicTerm, 16>& coupling_terms() {
  static const auto terms = make_coupling_terms();
  return terms;
}

FieldMap field_map(const ElementGeometry& geom, const Barycentric& bary) {
  FieldMap B = FieldMap::Zero();
  const auto psi = p1lambda1_values(geom, bary);
  const auto phi = whitney_values(geom, bary);
  for (int k = 0; k < 6; ++k) {
    B.block<2, 1>(kVTheta1, local::kTheta1 + k) = psi[k];
    B.block<2, 1>(kVTheta2, local::kTheta2 + k) = psi[k];
  }
  for (int e = 0; e < 3; ++e) {
    B.block<2, 1>(kVT1, local::kT1 + e) = phi[e];
    B.block<2, 1>(kVT2, local::kT2 + e) = phi[e];
  }
  for (int v = 0; v < 3; ++v) {
    B.block<2, 1>(kVG1, local::kPhi1 + v) = geom.grad_lambda[v];
    B.block<2, 1>(kVG2, local::kPhi2 + v) = geom.grad_lambda[v];
  }
  return B;
}

}  // namespace

PointFields evaluate_fields(const ElementGeometry& geom, const LocalVector& u, const Barycentric& bary) {
  const FieldVector v = field_map(geom, bary) * u;
  return {v.segment<2>(kVTheta1), v.segment<2>(kVTheta2), v.segment<2>(kVT1),
          v.segment<2>(kVT2),     v.segment<2>(kVG1),     v.segment<2>(kVG2)};
}

double coupling_density(const PointFields& f) {
  double c = 0.0;
  const ConstantOneForm eta[2] = {f.theta1 - f.dphi1, f.theta2 - f.dphi2};
  for (int j = 0; j < 2; ++j) c += f.t1[j] * wedge11(f.theta2, eta[j]) + f.t2[j] * wedge11(f.theta1, eta[j]);
  return c;
}

ElementContribution element_evaluate(const ElementGeometry& geom, const LocalVector& u,
                                     const NeoHookeanParams& params, const QuadratureRule& quad,
                                     ElementOutput output) {
  ElementContribution out;
  const bool want_grad = output != ElementOutput::Value;
  const bool want_hess = output == ElementOutput::Tangent;

  for (std::size_t q = 0; q < quad.size(); ++q) {
    const double w = quad.weights[q] * geom.area;
    const FieldMap B = field_map(geom, quad.points[q]);
    const FieldVector v = B * u;

    const auto kin = PointKinematics::from_forms(v.segment<2>(kVTheta1), v.segment<2>(kVTheta2));
    const PointEnergy W = energy_pointwise(params, kin);

    // Integrand f(v) = W(θ) - coupling(v).
    double f = W.value;
    FieldVector g = FieldVector::Zero();
    FieldMatrix H = FieldMatrix::Zero();
    g.segment<4>(kVTheta1) = W.gradient;
    H.block<4, 4>(kVTheta1, kVTheta1) = W.hessian;
    for (const auto& [s, a, b, c] : coupling_terms()) {
      f -= s * v[a] * v[b] * v[c];
      if (!want_grad) continue;
      g[a] -= s * v[b] * v[c];
      g[b] -= s * v[a] * v[c];
      g[c] -= s * v[a] * v[b];
      if (!want_hess) continue;
      H(a, b) -= s * v[c];
      H(b, a) -= s * v[c];
      H(a, c) -= s * v[b];
      H(c, a) -= s * v[b];
      H(b, c) -= s * v[a];
      H(c, b) -= s * v[a];
    }

    out.value += w * f;
    if (want_grad) out.residual.noalias() += w * (B.transpose() * g);
    if (want_hess) out.tangent.noalias() += w * (B.transpose() * H * B);
  }
  // Bᵀ H B is symmetric only up to rounding.
  if (want_hess) out.tangent = 0.5 * (out.tangent + out.tangent.transpose()).eval();
  return out;
}

double element_functional(const ElementGeometry& geom, const LocalVector& u, const NeoHookeanParams& params,
                          const QuadratureRule& quad) {
  return element_evaluate(geom, u, params, quad, ElementOutput::Value).value;
}

LocalVector element_residual(const ElementGeometry& geom, const LocalVector& u, const NeoHookeanParams& params,
                             const QuadratureRule& quad) {
  return element_evaluate(geom, u, params, quad, ElementOutput::Residual).residual;
}

LocalMatrix element_tangent(const ElementGeometry& geom, const LocalVector& u, const NeoHookeanParams& params,
                            const QuadratureRule& quad) {
  return element_evaluate(geom, u, params, quad, ElementOutput::Tangent).tangent;
}

double element_min_jacobian(const ElementGeometry& geom, const LocalVector& u, const QuadratureRule& quad) {
  double jmin = std::numeric_limits<double>::infinity();
  for (const auto& bary : quad.points) {
    const auto psi = p1lambda1_values(geom, bary);
    ConstantOneForm th1 = ConstantOneForm::Zero(), th2 = ConstantOneForm::Zero();
    for (int k = 0; k < 6; ++k) {
      th1 += u[local::kTheta1 + k] * psi[k];
      th2 += u[local::kTheta2 + k] * psi[k];
    }
    jmin = std::min(jmin, wedge11(th1, th2));
  }
  return jmin;
}

}  // namespace hwforms
