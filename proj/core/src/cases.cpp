#include "hwforms/cases.hpp"

#include <limits>

#include "hwforms/errors.hpp"
#include "hwforms/mesh_io.hpp"

namespace hwforms {

BoundarySpec benchmark_boundary(const BenchmarkConfig& cfg) {
  BoundarySpec spec;
  const AffineExpr zero{};
  switch (cfg.kind) {
    case CaseKind::Cook:
      spec.dirichlet.push_back({markers::kCookClamped, Component::Both, zero});
      spec.neumann.push_back({markers::kCookLoaded, Vec2(0.0, cfg.load)});
      break;
    case CaseKind::Block:
      spec.dirichlet.push_back({markers::kBlockBottom, Component::Y, zero});
      spec.dirichlet.push_back({markers::kBlockSymmetry, Component::X, zero});
      spec.dirichlet.push_back({markers::kBlockLoaded, Component::X, zero});
      spec.neumann.push_back({markers::kBlockLoaded, Vec2(0.0, -cfg.load)});
      break;
    case CaseKind::Plate:
      spec.dirichlet.push_back({markers::kPlateSymmetryX, Component::X, zero});
      spec.dirichlet.push_back({markers::kPlateSymmetryY, Component::Y, zero});
      spec.dirichlet.push_back({markers::kPlateLoaded, Component::X, AffineExpr{0.5 * cfg.load, 0.0, 0.0}});
      break;
    case CaseKind::File: spec = read_bc(cfg.bc_path); break;
  }
  return spec;
}

Vec2 benchmark_probe(const BenchmarkConfig& cfg) {
  if (cfg.probe) return *cfg.probe;
  switch (cfg.kind) {
    case CaseKind::Cook: return {cfg.cook.width, cfg.cook.left_height + cfg.cook.right_height};
    case CaseKind::Block: return {0.0, cfg.block.height};
    case CaseKind::Plate: return {0.0, cfg.plate.hole_radius};
    case CaseKind::File: return Vec2::Zero();
  }
  return Vec2::Zero();
}

SimplicialMesh2D benchmark_mesh(const BenchmarkConfig& cfg) {
  switch (cfg.kind) {
    case CaseKind::Cook: return generate_cook(cfg.refine, cfg.cook);
    case CaseKind::Block: return generate_block(cfg.refine, cfg.block);
    case CaseKind::Plate: return generate_plate_with_hole(cfg.refine, cfg.plate);
    case CaseKind::File: {
      auto mesh = read_m2d(cfg.mesh_path);
      for (int r = 0; r < cfg.refine; ++r) mesh = refine_uniform(mesh);
      return mesh;
    }
  }
  throw ConfigError("unknown case");
}

int nearest_vertex(const SimplicialMesh2D& mesh, const Vec2& point) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
    const double d = (mesh.vertices[v] - point).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(v);
    }
  }
  return best;
}

std::unique_ptr<Problem> make_problem(const BenchmarkConfig& cfg) {
  cfg.validate();
  auto p = std::make_unique<Problem>();
  p->mesh = benchmark_mesh(cfg);
  p->layout = build_layout(p->mesh);
  p->boundary = benchmark_boundary(cfg);
  p->bcs = resolve(p->boundary, p->mesh, p->layout);
  p->probe_vertex = nearest_vertex(p->mesh, benchmark_probe(cfg));
  p->probe = p->mesh.vertices[p->probe_vertex];
  return p;
}

}  // namespace hwforms
