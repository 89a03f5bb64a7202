#pragma once

#include <vector>

#include <Eigen/SparseCore>

#include "hwforms/dof_layout.hpp"
#include "hwforms/element.hpp"

namespace hwforms {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Prescribed deformed position of one φ unknown at full load.
struct DirichletValue {
  int dof = -1;
  double value = 0.0;
};

/// Dead traction per unit reference length, constant along a boundary edge.
struct NeumannLoad {
  int edge = -1;
  Vec2 traction = Vec2::Zero();
};

/// θ and t carry no boundary conditions; only φ unknowns can be prescribed.
struct BoundaryConditions {
  std::vector<DirichletValue> dirichlet;
  std::vector<NeumannLoad> neumann;
};

/// Checks that every Dirichlet dof is a φ unknown and every Neumann edge is on the boundary.
void validate(const BoundaryConditions& bcs, const SimplicialMesh2D& mesh, const DofLayout& layout);

struct AssemblyOptions {
  double load_factor = 1.0;
  bool tangent = true;
  /// Element loop threads. 1 gives bitwise reproducible output.
  int threads = 1;
};

/// Functional value, residual 𝓡 and tangent 𝓚 over all unknowns (before Dirichlet elimination).
struct AssembledSystem {
  double value = 0.0;
  Eigen::VectorXd residual;
  SparseMatrix tangent;
};

/// Assembles the discrete mixed functional
///   Σ_T [∫ W dA - ∫ coupling dA] - Σ_{Neumann edges} ∫ t̄·φ dL.
/// Geometry and the sparsity pattern are computed once per instance.
class Assembler {
public:
  Assembler(const SimplicialMesh2D& mesh, const DofLayout& layout, NeoHookeanParams params,
            int quadrature_degree = kDefaultQuadratureDegree);

  /// Throws NonPositiveJacobian (with element id) on inadmissible states and
  /// Error on size mismatch.
  AssembledSystem assemble(const MixedState& state, const BoundaryConditions& bcs,
                           const AssemblyOptions& options = {}) const;

  /// Neumann load vector f such that the boundary term is -s fᵀφ.
  Eigen::VectorXd external_load(const BoundaryConditions& bcs, double load_factor = 1.0) const;

  /// Smallest quadrature-point J over the mesh.
  double min_jacobian(const MixedState& state) const;

  const SimplicialMesh2D& mesh() const { return mesh_; }
  const DofLayout& layout() const { return layout_; }
  const NeoHookeanParams& params() const { return params_; }
  const QuadratureRule& quadrature_rule() const { return quad_; }
  const std::vector<ElementGeometry>& geometries() const { return geometries_; }

private:
  void build_pattern();

  const SimplicialMesh2D& mesh_;
  const DofLayout& layout_;
  NeoHookeanParams params_;
  const QuadratureRule& quad_;
  std::vector<ElementGeometry> geometries_;
  SparseMatrix pattern_;
  std::vector<std::array<int, local::kSize * local::kSize>> value_slots_;
};

/// One-shot convenience wrapper around Assembler.
AssembledSystem assemble(const SimplicialMesh2D& mesh, const DofLayout& layout, const MixedState& state,
                         const NeoHookeanParams& params, const BoundaryConditions& bcs,
                         int quadrature_degree = kDefaultQuadratureDegree, const AssemblyOptions& options = {});

/// Sets prescribed φ unknowns to X + s (value - X).
void apply_dirichlet(const SimplicialMesh2D& mesh, const DofLayout& layout, const BoundaryConditions& bcs,
                     double load_factor, MixedState& state);

/// Row/column deletion of prescribed unknowns.
class DirichletReduction {
public:
  DirichletReduction(int total, const BoundaryConditions& bcs);

  int num_free() const { return static_cast<int>(free_.size()); }
  const std::vector<int>& free_dofs() const { return free_; }
  bool is_constrained(int dof) const { return full_to_free_[dof] < 0; }

  Eigen::VectorXd restrict(const Eigen::VectorXd& full) const;
  SparseMatrix restrict(const SparseMatrix& full) const;
  /// Scatter a free-dof vector into a full-size vector with zeros on constrained dofs.
  Eigen::VectorXd prolong(const Eigen::VectorXd& reduced) const;

private:
  std::vector<int> free_;
  std::vector<int> full_to_free_;
};

/// Per-element compatibility diagnostic.
struct CompatibilityResidual {
  /// (∫ |θ¹ - dφ¹|² + |θ² - dφ²|² dA)^½
  double theta_minus_dphi = 0.0;
  /// |(dθ¹, dθ²)|, the coefficients of dx¹∧dx² (constant per element).
  double dtheta = 0.0;
};

std::vector<CompatibilityResidual> compatibility_residual(const SimplicialMesh2D& mesh, const DofLayout& layout,
                                                          const MixedState& state,
                                                          int quadrature_degree = kDefaultQuadratureDegree);

}  // namespace hwforms
