#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace hwforms {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

/// Local edge of a triangle together with its global edge and orientation sign.
/// sign = +1 when the local traversal agrees with the global low->high orientation.
struct EdgeRef {
  int edge = -1;
  int sign = 0;
};

/// Local edges of a triangle, as ordered pairs of local vertex slots.
/// This is also the Whitney 1-form ordering.
inline constexpr std::array<std::array<int, 2>, 3> kLocalEdges{{{0, 1}, {1, 2}, {2, 0}}};

/// Two-dimensional simplicial complex with oriented edges and boundary markers.
///
/// Triangles are stored counter-clockwise. Edges are stored low -> high vertex index.
/// Markers are free-form integer tags; 0 means "unmarked".
struct SimplicialMesh2D {
  std::vector<Vec2> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<EdgeRef, 3>> triangle_edges;
  std::vector<int> boundary_edges;
  std::vector<int> vertex_markers;
  std::vector<int> edge_markers;
  std::vector<int> triangle_markers;

  std::size_t num_vertices() const { return vertices.size(); }
  std::size_t num_edges() const { return edges.size(); }
  std::size_t num_triangles() const { return triangles.size(); }

  /// Number of triangles incident to each edge (1 on the boundary, 2 inside).
  std::vector<int> edge_valence() const;

  /// Vertices carrying `marker`, either directly or as an endpoint of a boundary
  /// edge with that marker. Sorted and unique.
  std::vector<int> vertices_with_marker(int marker) const;
  std::vector<int> edges_with_marker(int marker) const;

  double total_area() const;
};

/// Build connectivity for the given vertices and CCW triangles.
/// Throws MeshError on invalid indices, duplicate triangles, degenerate or
/// clockwise triangles and non-manifold edges.
SimplicialMesh2D build_mesh(std::vector<Vec2> vertices, std::vector<std::array<int, 3>> triangles);

/// Assign `marker` to every boundary edge whose midpoint satisfies `pred`.
template <class Pred>
void mark_boundary_edges(SimplicialMesh2D& mesh, int marker, Pred&& pred) {
  for (int e : mesh.boundary_edges) {
    const auto& ed = mesh.edges[e];
    const Vec2 mid = 0.5 * (mesh.vertices[ed[0]] + mesh.vertices[ed[1]]);
    if (pred(mid)) mesh.edge_markers[e] = marker;
  }
}

/// Split every triangle into four through its edge midpoints. Edge markers are
/// inherited by both halves; midpoint vertices of marked boundary edges inherit
/// nothing (vertex membership follows from the edge markers).
SimplicialMesh2D refine_uniform(const SimplicialMesh2D& mesh);

/// Connected boundary loops (b in V - E + F = 2 - b).
int count_boundary_loops(const SimplicialMesh2D& mesh);

/// Per-triangle affine data.
///
/// With local vertices P0, P1, P2 the barycentric coordinates satisfy
/// x = P0 + T (λ¹, λ²)ᵀ, i.e. T has columns P1 - P0 and P2 - P0, and λ⁰ is
/// eliminated through λ⁰ + λ¹ + λ² = 1.
struct ElementGeometry {
  std::array<Vec2, 3> vertex_coords;
  Mat2 T;
  double area = 0.0;
  /// dλⁱ on the Cartesian co-basis; the three sum to zero.
  std::array<Vec2, 3> grad_lambda;
};

ElementGeometry element_geometry(std::span<const Vec2, 3> vertices);
ElementGeometry element_geometry(const SimplicialMesh2D& mesh, std::size_t tri_index);

}  // namespace hwforms
