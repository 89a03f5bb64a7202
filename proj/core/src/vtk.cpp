#include "hwforms/vtk.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

#include "hwforms/assembly.hpp"
#include "hwforms/errors.hpp"
#include "hwforms/metrics.hpp"

namespace hwforms {

void write_vtk(std::ostream& os, const SimplicialMesh2D& mesh, const DofLayout& layout, const MixedState& state,
               int quadrature_degree) {
  const auto phi1 = state.block(Block::Phi1);
  const auto phi2 = state.block(Block::Phi2);
  const std::size_t nv = mesh.num_vertices();
  const std::size_t nt = mesh.num_triangles();

  os << std::setprecision(17);
  os << "# vtk DataFile Version 3.0\nhwforms solution\nASCII\nDATASET UNSTRUCTURED_GRID\n";
  os << "POINTS " << nv << " double\n";
  for (std::size_t v = 0; v < nv; ++v) os << phi1[v] << ' ' << phi2[v] << " 0\n";
  os << "CELLS " << nt << ' ' << 4 * nt << '\n';
  for (const auto& t : mesh.triangles) os << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  os << "CELL_TYPES " << nt << '\n';
  for (std::size_t t = 0; t < nt; ++t) os << "5\n";

  os << "POINT_DATA " << nv << "\nVECTORS displacement double\n";
  for (std::size_t v = 0; v < nv; ++v) {
    const Vec2 u = displacement(mesh, state, static_cast<int>(v));
    os << u.x() << ' ' << u.y() << " 0\n";
  }

  const auto avg = element_averages(mesh, layout, state, quadrature_degree);
  const auto compat = compatibility_residual(mesh, layout, state, quadrature_degree);
  os << "CELL_DATA " << nt << "\nSCALARS piola_norm double 1\nLOOKUP_TABLE default\n";
  for (double v : avg.piola_norm) os << v << '\n';
  os << "SCALARS J double 1\nLOOKUP_TABLE default\n";
  for (double v : avg.jacobian) os << v << '\n';
  os << "SCALARS compat_residual double 1\nLOOKUP_TABLE default\n";
  for (const auto& c : compat) os << c.theta_minus_dphi << '\n';
}

void write_vtk(const std::string& path, const SimplicialMesh2D& mesh, const DofLayout& layout,
               const MixedState& state, int quadrature_degree) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open " + path);
  write_vtk(os, mesh, layout, state, quadrature_degree);
  if (!os) throw IoError("write failed: " + path);
}

}  // namespace hwforms
