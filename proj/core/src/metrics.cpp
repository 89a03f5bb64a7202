#include "hwforms/metrics.hpp"

#include <algorithm>
#include <limits>

namespace hwforms {

namespace {

template <class Visit>
void for_each_point(const SimplicialMesh2D& mesh, const DofLayout& layout, const MixedState& state, int degree,
                    Visit&& visit) {
  const auto& quad = quadrature(degree);
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    const auto geom = element_geometry(mesh, t);
    const LocalVector u = gather(layout, state, t);
    for (std::size_t q = 0; q < quad.size(); ++q)
      visit(t, quad.weights[q] * geom.area, evaluate_fields(geom, u, quad.points[q]));
  }
}

double piola_frobenius(const PointFields& f) {
  return piola_stress(PointKinematics::from_forms(f.theta1, f.theta2), f.t1, f.t2).norm();
}

}  // namespace

FieldIntegrals field_integrals(const SimplicialMesh2D& mesh, const DofLayout& layout, const MixedState& state,
                               int quadrature_degree) {
  FieldIntegrals out;
  out.min_jacobian = std::numeric_limits<double>::infinity();
  out.max_jacobian = -std::numeric_limits<double>::infinity();
  for_each_point(mesh, layout, state, quadrature_degree, [&](std::size_t, double w, const PointFields& f) {
    out.theta_norm += w * (f.theta1.squaredNorm() + f.theta2.squaredNorm());
    out.piola_norm += w * piola_frobenius(f);
    const double J = wedge11(f.theta1, f.theta2);
    out.min_jacobian = std::min(out.min_jacobian, J);
    out.max_jacobian = std::max(out.max_jacobian, J);
  });
  return out;
}

ElementAverages element_averages(const SimplicialMesh2D& mesh, const DofLayout& layout, const MixedState& state,
                                 int quadrature_degree) {
  ElementAverages out;
  out.piola_norm.assign(mesh.num_triangles(), 0.0);
  out.jacobian.assign(mesh.num_triangles(), 0.0);
  std::vector<double> area(mesh.num_triangles(), 0.0);
  for_each_point(mesh, layout, state, quadrature_degree, [&](std::size_t t, double w, const PointFields& f) {
    out.piola_norm[t] += w * piola_frobenius(f);
    out.jacobian[t] += w * wedge11(f.theta1, f.theta2);
    area[t] += w;
  });
  for (std::size_t t = 0; t < area.size(); ++t) {
    out.piola_norm[t] /= area[t];
    out.jacobian[t] /= area[t];
  }
  return out;
}

Vec2 displacement(const SimplicialMesh2D& mesh, const MixedState& state, int vertex) {
  const Vec2 phi{state.block(Block::Phi1)[vertex], state.block(Block::Phi2)[vertex]};
  return phi - mesh.vertices[vertex];
}

}  // namespace hwforms
