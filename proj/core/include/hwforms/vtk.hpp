#pragma once

#include <iosfwd>
#include <string>

#include "hwforms/dof_layout.hpp"

namespace hwforms {

/// Legacy ASCII unstructured grid: deformed points, triangle cells, point data
/// "displacement" (padded to 3 components), cell data "piola_norm", "J" and
/// "compat_residual" (element averages / element L² norm).
void write_vtk(std::ostream& os, const SimplicialMesh2D& mesh, const DofLayout& layout, const MixedState& state,
               int quadrature_degree = 4);
void write_vtk(const std::string& path, const SimplicialMesh2D& mesh, const DofLayout& layout,
               const MixedState& state, int quadrature_degree = 4);

}  // namespace hwforms
