#pragma once

#include <memory>

#include "hwforms/bc_io.hpp"
#include "hwforms/config.hpp"

namespace hwforms {

/// Mesh, unknown layout and resolved boundary data for one run.
/// Held through a unique_ptr by callers because an Assembler keeps references into it.
struct Problem {
  SimplicialMesh2D mesh;
  DofLayout layout;
  BoundarySpec boundary;
  BoundaryConditions bcs;
  Vec2 probe = Vec2::Zero();
  int probe_vertex = 0;
};

/// Marker-based boundary data of a generated benchmark at the configured load.
BoundarySpec benchmark_boundary(const BenchmarkConfig& cfg);

/// Default probe point of a generated benchmark.
Vec2 benchmark_probe(const BenchmarkConfig& cfg);

SimplicialMesh2D benchmark_mesh(const BenchmarkConfig& cfg);

std::unique_ptr<Problem> make_problem(const BenchmarkConfig& cfg);

/// Vertex closest to `point` (lowest index on ties).
int nearest_vertex(const SimplicialMesh2D& mesh, const Vec2& point);

}  // namespace hwforms
