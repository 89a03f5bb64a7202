#include "hwforms/dof_layout.hpp"

#include "hwforms/exterior.hpp"

namespace hwforms {

DofLayout build_layout(const SimplicialMesh2D& mesh) {
  const int E = static_cast<int>(mesh.num_edges());
  const int V = static_cast<int>(mesh.num_vertices());
  DofLayout L;
  L.counts = {2 * E, 2 * E, E, E, V, V};
  int off = 0;
  for (int b = 0; b < kNumBlocks; ++b) {
    L.offsets[b] = off;
    off += L.counts[b];
  }
  L.total = off;

  L.element_dofs.resize(mesh.num_triangles());
  L.element_signs.resize(mesh.num_triangles());
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tri = mesh.triangles[t];
    const auto& te = mesh.triangle_edges[t];
    auto& dofs = L.element_dofs[t];
    auto& signs = L.element_signs[t];
    signs.fill(1.0);
    for (int k = 0; k < 6; ++k) {
      const auto [i, j] = kP1Lambda1Pairs[k];
      const int edge = te[k / 2].edge;
      const int slot = tri[i] < tri[j] ? 0 : 1;
      dofs[local::kTheta1 + k] = L.offset(Block::Theta1) + 2 * edge + slot;
      dofs[local::kTheta2 + k] = L.offset(Block::Theta2) + 2 * edge + slot;
    }
    for (int e = 0; e < 3; ++e) {
      dofs[local::kT1 + e] = L.offset(Block::T1) + te[e].edge;
      dofs[local::kT2 + e] = L.offset(Block::T2) + te[e].edge;
      signs[local::kT1 + e] = signs[local::kT2 + e] = te[e].sign;
    }
    for (int v = 0; v < 3; ++v) {
      dofs[local::kPhi1 + v] = L.offset(Block::Phi1) + tri[v];
      dofs[local::kPhi2 + v] = L.offset(Block::Phi2) + tri[v];
    }
  }
  return L;
}

MixedState::MixedState(const DofLayout& layout)
    : offsets_(layout.offsets), counts_(layout.counts), values_(Eigen::VectorXd::Zero(layout.total)) {}

LocalVector gather(const DofLayout& layout, const MixedState& state, std::size_t tri) {
  LocalVector out;
  const auto& dofs = layout.element_dofs[tri];
  const auto& signs = layout.element_signs[tri];
  const auto& x = state.values();
  for (int i = 0; i < local::kSize; ++i) out[i] = signs[i] * x[dofs[i]];
  return out;
}

void set_theta_from_potential(const SimplicialMesh2D& mesh, MixedState& state, Block theta_block,
                              std::span<const double> vertex_values) {
  auto theta = state.block(theta_block);
  for (std::size_t e = 0; e < mesh.num_edges(); ++e) {
    const auto [lo, hi] = mesh.edges[e];
    const double jump = vertex_values[hi] - vertex_values[lo];
    theta[2 * e] = jump;
    theta[2 * e + 1] = -jump;
  }
}

MixedState affine_state(const SimplicialMesh2D& mesh, const DofLayout& layout, const Mat2& F, const Vec2& shift) {
  MixedState s(layout);
  auto phi1 = s.block(Block::Phi1);
  auto phi2 = s.block(Block::Phi2);
  for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
    const Vec2 y = F * mesh.vertices[v] + shift;
    phi1[v] = y.x();
    phi2[v] = y.y();
  }
  const Eigen::VectorXd p1 = phi1;
  const Eigen::VectorXd p2 = phi2;
  set_theta_from_potential(mesh, s, Block::Theta1, {p1.data(), static_cast<std::size_t>(p1.size())});
  set_theta_from_potential(mesh, s, Block::Theta2, {p2.data(), static_cast<std::size_t>(p2.size())});
  return s;
}

MixedState identity_state(const SimplicialMesh2D& mesh, const DofLayout& layout) {
  return affine_state(mesh, layout, Mat2::Identity());
}

}  // namespace hwforms
