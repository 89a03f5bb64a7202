#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "hwforms/mesh.hpp"

namespace hwforms {

/// Global unknown blocks, in storage order.
enum class Block : int { Theta1 = 0, Theta2 = 1, T1 = 2, T2 = 3, Phi1 = 4, Phi2 = 5 };
inline constexpr int kNumBlocks = 6;

/// Local element layout: 6 + 6 P₁Λ¹ coefficients, 3 + 3 Whitney coefficients, 3 + 3 nodal values.
namespace local {
inline constexpr int kTheta1 = 0;
inline constexpr int kTheta2 = 6;
inline constexpr int kT1 = 12;
inline constexpr int kT2 = 15;
inline constexpr int kPhi1 = 18;
inline constexpr int kPhi2 = 21;
inline constexpr int kSize = 24;
}  // namespace local

using LocalVector = Eigen::Matrix<double, local::kSize, 1>;
using LocalMatrix = Eigen::Matrix<double, local::kSize, local::kSize>;

/// Maps element-local unknowns to global ones.
///
/// θ blocks carry two unknowns per edge (lo, hi): slot 0 multiplies λ_lo dλ_hi and
/// slot 1 multiplies λ_hi dλ_lo. These are intrinsic to the edge, so their sign is
/// always +1. Whitney unknowns are attached to the low->high orientation and pick
/// up the element's edge sign. φ blocks hold one value per vertex.
struct DofLayout {
  std::array<int, kNumBlocks> offsets{};
  std::array<int, kNumBlocks> counts{};
  int total = 0;
  std::vector<std::array<int, local::kSize>> element_dofs;
  std::vector<std::array<double, local::kSize>> element_signs;

  int offset(Block b) const { return offsets[static_cast<int>(b)]; }
  int count(Block b) const { return counts[static_cast<int>(b)]; }
};

DofLayout build_layout(const SimplicialMesh2D& mesh);

/// Flat unknown vector with per-block views. φ stores deformed positions.
class MixedState {
public:
  MixedState() = default;
  explicit MixedState(const DofLayout& layout);

  Eigen::VectorXd& values() { return values_; }
  const Eigen::VectorXd& values() const { return values_; }
  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }

  auto block(Block b) { return values_.segment(offsets_[static_cast<int>(b)], counts_[static_cast<int>(b)]); }
  auto block(Block b) const { return values_.segment(offsets_[static_cast<int>(b)], counts_[static_cast<int>(b)]); }

private:
  std::array<int, kNumBlocks> offsets_{};
  std::array<int, kNumBlocks> counts_{};
  Eigen::VectorXd values_;
};

/// Signed gather of one element's 24 unknowns.
LocalVector gather(const DofLayout& layout, const MixedState& state, std::size_t tri);

/// θ DoFs equal to dφ for a continuous piecewise-linear φ given at the vertices.
/// The coefficient of λ_a dλ_b is φ(b) - φ(a).
void set_theta_from_potential(const SimplicialMesh2D& mesh, MixedState& state, Block theta_block,
                              std::span<const double> vertex_values);

/// Reference state: φ = X, θⁱ = dXⁱ, t = 0.
MixedState identity_state(const SimplicialMesh2D& mesh, const DofLayout& layout);

/// State with φ = F·X + c, θ = rows of F, t = 0.
MixedState affine_state(const SimplicialMesh2D& mesh, const DofLayout& layout, const Mat2& F,
                        const Vec2& shift = Vec2::Zero());

}  // namespace hwforms
