#include "hwforms/generators.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "hwforms/errors.hpp"

namespace hwforms {

namespace {

/// nx x ny cells of the image of [0,1]^2 under an orientation-preserving map.
SimplicialMesh2D structured_patch(int nx, int ny, MeshPattern pattern, const std::function<Vec2(double, double)>& map) {
  std::vector<Vec2> vertices;
  vertices.reserve((nx + 1) * (ny + 1));
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) vertices.push_back(map(double(i) / nx, double(j) / ny));

  auto id = [nx](int i, int j) { return j * (nx + 1) + i; };
  std::vector<std::array<int, 3>> triangles;
  triangles.reserve(2 * nx * ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (pattern == MeshPattern::Crossed) {
        const int c = static_cast<int>(vertices.size());
        vertices.push_back(map((i + 0.5) / nx, (j + 0.5) / ny));
        triangles.push_back({id(i, j), id(i + 1, j), c});
        triangles.push_back({id(i + 1, j), id(i + 1, j + 1), c});
        triangles.push_back({id(i + 1, j + 1), id(i, j + 1), c});
        triangles.push_back({id(i, j + 1), id(i, j), c});
      } else {
        triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
        triangles.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
      }
    }
  return build_mesh(std::move(vertices), std::move(triangles));
}

int divisions(int base, int refinement) {
  if (refinement < 0) throw MeshError("refinement must be >= 0");
  if (base < 1) throw MeshError("base_divisions must be >= 1");
  return base << refinement;
}

}  // namespace

MeshPattern parse_pattern(const std::string& name) {
  if (name == "diagonal") return MeshPattern::Diagonal;
  if (name == "crossed") return MeshPattern::Crossed;
  throw MeshError("unknown mesh pattern '" + name + "' (expected diagonal or crossed)");
}

std::string to_string(MeshPattern pattern) { return pattern == MeshPattern::Crossed ? "crossed" : "diagonal"; }

SimplicialMesh2D generate_cook(int refinement, const CookGeometry& g) {
  const int n = divisions(g.base_divisions, refinement);
  const Vec2 a{0.0, 0.0};
  const Vec2 b{g.width, g.left_height};
  const Vec2 c{g.width, g.left_height + g.right_height};
  const Vec2 d{0.0, g.left_height};
  auto mesh = structured_patch(n, n, g.pattern, [&](double u, double v) -> Vec2 {
    return (1 - u) * (1 - v) * a + u * (1 - v) * b + u * v * c + (1 - u) * v * d;
  });
  const double tol = 1e-9 * g.width;
  mark_boundary_edges(mesh, markers::kCookClamped, [&](const Vec2& m) { return std::abs(m.x()) < tol; });
  mark_boundary_edges(mesh, markers::kCookLoaded, [&](const Vec2& m) { return std::abs(m.x() - g.width) < tol; });
  for (int e : mesh.boundary_edges) {
    if (mesh.edge_markers[e] != 0) continue;
    const Vec2 m = 0.5 * (mesh.vertices[mesh.edges[e][0]] + mesh.vertices[mesh.edges[e][1]]);
    // Points on the bottom chord satisfy y = x * left_height / width.
    const bool bottom = std::abs(m.y() - m.x() * g.left_height / g.width) < tol;
    mesh.edge_markers[e] = bottom ? markers::kCookBottom : markers::kCookTop;
  }
  return mesh;
}

SimplicialMesh2D generate_block(int refinement, const BlockGeometry& g) {
  const int n = divisions(g.base_divisions, refinement);
  auto mesh = structured_patch(n, n, g.pattern, [&](double u, double v) -> Vec2 { return {u * g.half_width, v * g.height}; });
  const double tol = 1e-9 * std::max(g.half_width, g.height);
  mark_boundary_edges(mesh, markers::kBlockBottom, [&](const Vec2& m) { return std::abs(m.y()) < tol; });
  mark_boundary_edges(mesh, markers::kBlockSymmetry, [&](const Vec2& m) { return std::abs(m.x()) < tol; });
  mark_boundary_edges(mesh, markers::kBlockRight, [&](const Vec2& m) { return std::abs(m.x() - g.half_width) < tol; });
  mark_boundary_edges(mesh, markers::kBlockLoaded,
                      [&](const Vec2& m) { return std::abs(m.y() - g.height) < tol && m.x() < g.load_half_width; });
  mark_boundary_edges(mesh, markers::kBlockTopFree,
                      [&](const Vec2& m) { return std::abs(m.y() - g.height) < tol && m.x() > g.load_half_width; });
  return mesh;
}

SimplicialMesh2D generate_plate_with_hole(int refinement, const PlateGeometry& g) {
  const int n = divisions(g.base_divisions, refinement);
  const double s = g.half_side;
  const double r = g.hole_radius;
  if (!(r > 0 && r < s)) throw MeshError("hole radius must lie in (0, half_side)");
  // u runs radially from the hole outwards, v sweeps the quarter from the x axis
  // to the y axis; the outer boundary is the right edge for v <= 1/2 and the top
  // edge after that.
  auto mesh = structured_patch(n, 2 * n, g.pattern, [&](double u, double v) -> Vec2 {
    const double angle = v * std::numbers::pi / 2;
    const Vec2 inner{r * std::cos(angle), r * std::sin(angle)};
    const double w = 2 * v;
    const Vec2 outer = w <= 1 ? Vec2{s, w * s} : Vec2{(2 - w) * s, s};
    return inner + u * (outer - inner);
  });
  const double tol = 1e-9 * s;
  mark_boundary_edges(mesh, markers::kPlateSymmetryX, [&](const Vec2& m) { return std::abs(m.x()) < tol; });
  mark_boundary_edges(mesh, markers::kPlateSymmetryY, [&](const Vec2& m) { return std::abs(m.y()) < tol; });
  mark_boundary_edges(mesh, markers::kPlateLoaded, [&](const Vec2& m) { return std::abs(m.x() - s) < tol; });
  mark_boundary_edges(mesh, markers::kPlateTop, [&](const Vec2& m) { return std::abs(m.y() - s) < tol; });
  mark_boundary_edges(mesh, markers::kPlateHole, [&](const Vec2& m) { return m.norm() < r + tol; });
  return mesh;
}

}  // namespace hwforms
