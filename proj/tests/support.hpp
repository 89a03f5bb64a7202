#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

#include "hwforms/dof_layout.hpp"
#include "hwforms/element.hpp"
#include "hwforms/generators.hpp"
#include "hwforms/mesh.hpp"

namespace hwtest {

using hwforms::Vec2;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(12345);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }
inline double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng()); }

/// CCW triangle with area bounded away from zero and moderate aspect ratio.
inline std::array<Vec2, 3> random_triangle() {
  for (;;) {
    std::array<Vec2, 3> p{Vec2(uniform(-2, 2), uniform(-2, 2)), Vec2(uniform(-2, 2), uniform(-2, 2)),
                          Vec2(uniform(-2, 2), uniform(-2, 2))};
    const double a = 0.5 * ((p[1] - p[0]).x() * (p[2] - p[0]).y() - (p[1] - p[0]).y() * (p[2] - p[0]).x());
    if (a < 0) std::swap(p[1], p[2]);
    const double longest = std::max({(p[1] - p[0]).norm(), (p[2] - p[1]).norm(), (p[0] - p[2]).norm()});
    if (std::abs(a) > 0.15 * longest * longest) return p;
  }
}

inline double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

/// ‖a - b‖∞ / max(‖b‖∞, floor).
inline double rel_err(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double floor = 1e-12) {
  return max_abs(a - b) / std::max(max_abs(b), floor);
}

/// Unit square [0,1]² split into n×n cells with a diagonal, vertices jittered inside.
inline hwforms::SimplicialMesh2D distorted_square(int n, double jitter) {
  std::vector<Vec2> v;
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) {
      Vec2 p(double(i) / n, double(j) / n);
      if (i > 0 && i < n && j > 0 && j < n) p += Vec2(uniform(-jitter, jitter), uniform(-jitter, jitter)) / n;
      v.push_back(p);
    }
  std::vector<std::array<int, 3>> t;
  auto id = [n](int i, int j) { return j * (n + 1) + i; };
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      t.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      t.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  auto mesh = hwforms::build_mesh(std::move(v), std::move(t));
  hwforms::mark_boundary_edges(mesh, 1, [](const Vec2&) { return true; });
  return mesh;
}

/// Same mesh with vertex i renamed perm[i] and every triangle's slots rotated by `shift`.
inline hwforms::SimplicialMesh2D relabel(const hwforms::SimplicialMesh2D& mesh, const std::vector<int>& perm,
                                         int shift) {
  std::vector<Vec2> v(mesh.num_vertices());
  for (std::size_t i = 0; i < v.size(); ++i) v[perm[i]] = mesh.vertices[i];
  std::vector<std::array<int, 3>> t;
  for (const auto& tri : mesh.triangles) {
    std::array<int, 3> r;
    for (int k = 0; k < 3; ++k) r[k] = perm[tri[(k + shift) % 3]];
    t.push_back(r);
  }
  auto out = hwforms::build_mesh(std::move(v), std::move(t));
  for (std::size_t i = 0; i < mesh.num_vertices(); ++i) out.vertex_markers[perm[i]] = mesh.vertex_markers[i];
  std::map<std::pair<int, int>, int> index;
  for (std::size_t f = 0; f < out.num_edges(); ++f) index[{out.edges[f][0], out.edges[f][1]}] = static_cast<int>(f);
  for (std::size_t e = 0; e < mesh.num_edges(); ++e) {
    const int a = perm[mesh.edges[e][0]], b = perm[mesh.edges[e][1]];
    out.edge_markers[index.at({std::min(a, b), std::max(a, b)})] = mesh.edge_markers[e];
  }
  return out;
}

/// Element state near the affine map X -> F X with random tractions; every
/// quadrature point of `quad` has J >= 0.2.
inline hwforms::LocalVector random_local_state(const hwforms::ElementGeometry& g, const hwforms::QuadratureRule& quad,
                                               double noise = 0.1, double t_scale = 1.0) {
  using namespace hwforms;
  for (;;) {
    Mat2 F = Mat2::Identity();
    F += 0.25 * Mat2::NullaryExpr([](Eigen::Index, Eigen::Index) { return normal(); });
    if (F.determinant() < 0.4) continue;
    LocalVector s;
    for (int c = 0; c < 2; ++c) {
      for (int a = 0; a < 3; ++a) s[local::kPhi1 + 3 * c + a] = F.row(c).dot(g.vertex_coords[a]) + noise * normal();
      for (int k = 0; k < 6; ++k) {
        const auto [i, j] = kP1Lambda1Pairs[k];
        s[6 * c + k] = F.row(c).dot(g.vertex_coords[j] - g.vertex_coords[i]) + noise * normal();
      }
    }
    for (int k = 0; k < 6; ++k) s[local::kT1 + k] = t_scale * normal();
    if (element_min_jacobian(g, s, quad) >= 0.2) return s;
  }
}

inline std::vector<int> random_permutation(std::size_t n) {
  std::vector<int> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  std::shuffle(p.begin(), p.end(), rng());
  return p;
}

}  // namespace hwtest
