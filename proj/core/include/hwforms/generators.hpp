#pragma once

#include <string>

#include "hwforms/mesh.hpp"

namespace hwforms {

/// Boundary markers written by the benchmark generators.
namespace markers {
inline constexpr int kCookClamped = 1;
inline constexpr int kCookLoaded = 2;
inline constexpr int kCookTop = 3;
inline constexpr int kCookBottom = 4;

inline constexpr int kBlockBottom = 1;
inline constexpr int kBlockSymmetry = 2;
inline constexpr int kBlockLoaded = 3;
inline constexpr int kBlockTopFree = 4;
inline constexpr int kBlockRight = 5;

inline constexpr int kPlateHole = 1;
inline constexpr int kPlateSymmetryX = 2;  // x = 0, u_x = 0
inline constexpr int kPlateSymmetryY = 3;  // y = 0, u_y = 0
inline constexpr int kPlateLoaded = 4;     // x = half side, prescribed u_x
inline constexpr int kPlateTop = 5;
}  // namespace markers

/// Triangulation of each structured cell: two triangles split along the
/// (0,0)-(1,1) diagonal, or four triangles around an added centre vertex.
enum class MeshPattern { Diagonal, Crossed };

MeshPattern parse_pattern(const std::string& name);
std::string to_string(MeshPattern pattern);

/// Trapezoidal cantilever: corners (0,0), (width, left_height), (width, left_height + right_height),
/// (0, left_height). Units mm.
struct CookGeometry {
  double width = 48.0;
  double left_height = 44.0;
  double right_height = 16.0;
  int base_divisions = 2;
  MeshPattern pattern = MeshPattern::Crossed;
};

/// Half model of a block compressed over the central part of its top face.
/// Occupies [0, half_width] x [0, height]; the load acts on x <= load_half_width.
struct BlockGeometry {
  double half_width = 10.0;
  double height = 10.0;
  double load_half_width = 5.0;
  int base_divisions = 2;
  MeshPattern pattern = MeshPattern::Crossed;
};

/// Quarter of a square plate with a central circular hole.
/// Occupies [0, half_side]^2 minus the disk of radius hole_radius at the origin.
struct PlateGeometry {
  double half_side = 1.0;
  double hole_radius = 0.5;
  int base_divisions = 2;
  MeshPattern pattern = MeshPattern::Crossed;
};

/// Structured meshes with `base_divisions * 2^refinement` cells per side.
SimplicialMesh2D generate_cook(int refinement, const CookGeometry& geom = {});
SimplicialMesh2D generate_block(int refinement, const BlockGeometry& geom = {});
SimplicialMesh2D generate_plate_with_hole(int refinement, const PlateGeometry& geom = {});

}  // namespace hwforms
