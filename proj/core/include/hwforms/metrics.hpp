#pragma once

#include <vector>

#include "hwforms/assembly.hpp"

namespace hwforms {

/// Global post-processing integrals of a state.
struct FieldIntegrals {
  /// ∫ |θ¹|² + |θ²|² dA
  double theta_norm = 0.0;
  /// ∫ ‖P‖_F dA with P = t¹⊗θ² + t²⊗θ¹
  double piola_norm = 0.0;
  double min_jacobian = 0.0;
  double max_jacobian = 0.0;
};

/// Element averages used for cell output.
struct ElementAverages {
  std::vector<double> piola_norm;
  std::vector<double> jacobian;
};

FieldIntegrals field_integrals(const SimplicialMesh2D& mesh, const DofLayout& layout, const MixedState& state,
                               int quadrature_degree = kDefaultQuadratureDegree);

ElementAverages element_averages(const SimplicialMesh2D& mesh, const DofLayout& layout, const MixedState& state,
                                 int quadrature_degree = kDefaultQuadratureDegree);

/// φ(X_v) - X_v.
Vec2 displacement(const SimplicialMesh2D& mesh, const MixedState& state, int vertex);

}  // namespace hwforms
