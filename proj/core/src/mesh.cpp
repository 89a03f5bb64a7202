#include "hwforms/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include <Eigen/LU>

#include "hwforms/errors.hpp"

namespace hwforms {

namespace {

double signed_area(const Vec2& a, const Vec2& b, const Vec2& c) {
  return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x()));
}

double length_scale(std::span<const Vec2> pts) {
  if (pts.empty()) return 1.0;
  Vec2 lo = pts[0], hi = pts[0];
  for (const auto& p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const double s = (hi - lo).norm();
  return s > 0 ? s : 1.0;
}

}  // namespace

std::vector<int> SimplicialMesh2D::edge_valence() const {
  std::vector<int> valence(edges.size(), 0);
  for (const auto& te : triangle_edges)
    for (const auto& r : te) ++valence[r.edge];
  return valence;
}

std::vector<int> SimplicialMesh2D::vertices_with_marker(int marker) const {
  std::set<int> out;
  for (std::size_t v = 0; v < vertex_markers.size(); ++v)
    if (vertex_markers[v] == marker) out.insert(static_cast<int>(v));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edge_markers[e] != marker) continue;
    out.insert(edges[e][0]);
    out.insert(edges[e][1]);
  }
  return {out.begin(), out.end()};
}

std::vector<int> SimplicialMesh2D::edges_with_marker(int marker) const {
  std::vector<int> out;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (edge_markers[e] == marker) out.push_back(static_cast<int>(e));
  return out;
}

double SimplicialMesh2D::total_area() const {
  double a = 0.0;
  for (const auto& t : triangles) a += signed_area(vertices[t[0]], vertices[t[1]], vertices[t[2]]);
  return a;
}

SimplicialMesh2D build_mesh(std::vector<Vec2> vertices, std::vector<std::array<int, 3>> triangles) {
  const int nv = static_cast<int>(vertices.size());
  const double scale = length_scale(vertices);
  const double area_tol = 1e-14 * scale * scale;

  std::set<std::array<int, 3>> seen;
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const auto& tri = triangles[t];
    for (int v : tri)
      if (v < 0 || v >= nv)
        throw MeshError("triangle " + std::to_string(t) + " references invalid vertex " + std::to_string(v));
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
      throw MeshError("triangle " + std::to_string(t) + " repeats a vertex");
    auto key = tri;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) throw MeshError("duplicate triangle " + std::to_string(t));
    const double a = signed_area(vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]);
    if (!(a > area_tol))
      throw MeshError("triangle " + std::to_string(t) + " has non-positive signed area " + std::to_string(a));
  }

  SimplicialMesh2D mesh;
  mesh.vertices = std::move(vertices);
  mesh.triangles = std::move(triangles);
  mesh.triangle_edges.resize(mesh.triangles.size());

  std::map<std::pair<int, int>, int> edge_index;
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto& tri = mesh.triangles[t];
    for (int k = 0; k < 3; ++k) {
      const int a = tri[kLocalEdges[k][0]];
      const int b = tri[kLocalEdges[k][1]];
      const auto key = std::minmax(a, b);
      auto [it, inserted] = edge_index.try_emplace({key.first, key.second}, static_cast<int>(mesh.edges.size()));
      if (inserted) mesh.edges.push_back({key.first, key.second});
      mesh.triangle_edges[t][k] = EdgeRef{it->second, a < b ? +1 : -1};
    }
  }

  const auto valence = mesh.edge_valence();
  for (std::size_t e = 0; e < valence.size(); ++e) {
    if (valence[e] > 2)
      throw MeshError("non-manifold edge (" + std::to_string(mesh.edges[e][0]) + "," +
                      std::to_string(mesh.edges[e][1]) + ") shared by " + std::to_string(valence[e]) + " triangles");
    if (valence[e] == 1) mesh.boundary_edges.push_back(static_cast<int>(e));
  }

  // Two triangles traversing an interior edge in the same direction means the
  // orientations disagree, which positive areas already exclude; check anyway.
  std::vector<int> sign_sum(mesh.edges.size(), 0);
  for (const auto& te : mesh.triangle_edges)
    for (const auto& r : te) sign_sum[r.edge] += r.sign;
  for (std::size_t e = 0; e < sign_sum.size(); ++e)
    if (valence[e] == 2 && sign_sum[e] != 0) throw MeshError("inconsistent orientation at edge " + std::to_string(e));

  mesh.vertex_markers.assign(mesh.vertices.size(), 0);
  mesh.edge_markers.assign(mesh.edges.size(), 0);
  mesh.triangle_markers.assign(mesh.triangles.size(), 0);
  return mesh;
}

SimplicialMesh2D refine_uniform(const SimplicialMesh2D& mesh) {
  const int nv = static_cast<int>(mesh.num_vertices());
  std::vector<Vec2> vertices = mesh.vertices;
  vertices.reserve(mesh.num_vertices() + mesh.num_edges());
  for (const auto& e : mesh.edges) vertices.push_back(0.5 * (mesh.vertices[e[0]] + mesh.vertices[e[1]]));

  std::vector<std::array<int, 3>> triangles;
  triangles.reserve(4 * mesh.num_triangles());
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    const auto& v = mesh.triangles[t];
    const auto& te = mesh.triangle_edges[t];
    const int m0 = nv + te[0].edge;  // on (v0, v1)
    const int m1 = nv + te[1].edge;  // on (v1, v2)
    const int m2 = nv + te[2].edge;  // on (v2, v0)
    triangles.push_back({v[0], m0, m2});
    triangles.push_back({m0, v[1], m1});
    triangles.push_back({m2, m1, v[2]});
    triangles.push_back({m0, m1, m2});
  }

  SimplicialMesh2D fine = build_mesh(std::move(vertices), std::move(triangles));
  std::copy(mesh.vertex_markers.begin(), mesh.vertex_markers.end(), fine.vertex_markers.begin());
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t)
    for (int c = 0; c < 4; ++c) fine.triangle_markers[4 * t + c] = mesh.triangle_markers[t];

  std::map<std::pair<int, int>, int> fine_edge;
  for (std::size_t e = 0; e < fine.num_edges(); ++e) fine_edge[{fine.edges[e][0], fine.edges[e][1]}] = static_cast<int>(e);
  for (std::size_t e = 0; e < mesh.num_edges(); ++e) {
    const int marker = mesh.edge_markers[e];
    if (marker == 0) continue;
    const int mid = nv + static_cast<int>(e);
    for (int end : mesh.edges[e]) {
      const auto key = std::minmax(end, mid);
      fine.edge_markers[fine_edge.at({key.first, key.second})] = marker;
    }
  }
  return fine;
}

int count_boundary_loops(const SimplicialMesh2D& mesh) {
  std::vector<int> parent(mesh.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::set<int> on_boundary;
  for (int e : mesh.boundary_edges) {
    const auto& ed = mesh.edges[e];
    on_boundary.insert(ed[0]);
    on_boundary.insert(ed[1]);
    parent[find(ed[0])] = find(ed[1]);
  }
  std::set<int> roots;
  for (int v : on_boundary) roots.insert(find(v));
  return static_cast<int>(roots.size());
}

ElementGeometry element_geometry(std::span<const Vec2, 3> vertices) {
  ElementGeometry g;
  std::copy(vertices.begin(), vertices.end(), g.vertex_coords.begin());
  g.T.col(0) = vertices[1] - vertices[0];
  g.T.col(1) = vertices[2] - vertices[0];
  const double det = g.T.determinant();
  const double scale = std::max({g.T.col(0).squaredNorm(), g.T.col(1).squaredNorm(),
                                 (vertices[2] - vertices[1]).squaredNorm()});
  if (!(std::abs(det) > 1e-14 * scale)) throw MeshError("degenerate triangle (det T = " + std::to_string(det) + ")");
  g.area = 0.5 * std::abs(det);
  // Rows of T⁻¹ are dλ¹ and dλ².
  const Mat2 Tinv = g.T.inverse();
  g.grad_lambda[1] = Tinv.row(0).transpose();
  g.grad_lambda[2] = Tinv.row(1).transpose();
  g.grad_lambda[0] = -g.grad_lambda[1] - g.grad_lambda[2];
  return g;
}

ElementGeometry element_geometry(const SimplicialMesh2D& mesh, std::size_t tri_index) {
  if (tri_index >= mesh.num_triangles()) throw MeshError("triangle index out of range");
  const auto& t = mesh.triangles[tri_index];
  const std::array<Vec2, 3> p{mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]};
  return element_geometry(std::span<const Vec2, 3>(p));
}

}  // namespace hwforms
