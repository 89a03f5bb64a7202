#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hwforms/assembly.hpp"

namespace hwforms {

/// a + b·x + c·y in reference coordinates.
struct AffineExpr {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double operator()(const Vec2& X) const { return a + b * X.x() + c * X.y(); }
};

/// Parses expressions such as "0", "0.2*x - 0.1*y + 3", "1e-3x", "-y".
AffineExpr parse_affine(const std::string& text);

enum class Component { X, Y, Both };

/// Prescribed displacement u = φ - X on all vertices carrying `marker`.
struct DirichletRule {
  int marker = 0;
  Component component = Component::Both;
  AffineExpr displacement;
};

/// Dead traction per unit reference length on all edges carrying `marker`.
struct NeumannRule {
  int marker = 0;
  Vec2 traction = Vec2::Zero();
};

/// Marker-based boundary data, as read from a ".bc" file:
///
///   dirichlet <vertex-marker> <ux|uy|both> <affine expression>
///   neumann   <edge-marker> <tx> <ty>
///
/// '#' starts a comment.
struct BoundarySpec {
  std::vector<DirichletRule> dirichlet;
  std::vector<NeumannRule> neumann;
};

BoundarySpec read_bc(std::istream& is);
BoundarySpec read_bc(const std::string& path);
void write_bc(std::ostream& os, const BoundarySpec& spec);

/// Resolve markers into per-dof data. Later Dirichlet rules override earlier ones
/// on shared vertices. Throws ConfigError if a marker matches nothing.
BoundaryConditions resolve(const BoundarySpec& spec, const SimplicialMesh2D& mesh, const DofLayout& layout);

}  // namespace hwforms
