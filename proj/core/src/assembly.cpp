#include "hwforms/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "hwforms/errors.hpp"

namespace hwforms {

namespace {

// Two-point Gauss-Legendre on [0, 1].
constexpr double kGaussA = 0.5 - 0.5 / std::numbers::sqrt3;
constexpr double kGaussB = 0.5 + 0.5 / std::numbers::sqrt3;

int block_of(const DofLayout& layout, int dof) {
  for (int b = kNumBlocks - 1; b >= 0; --b)
    if (dof >= layout.offsets[b]) return b;
  return -1;
}

}  // namespace

void validate(const BoundaryConditions& bcs, const SimplicialMesh2D& mesh, const DofLayout& layout) {
  for (const auto& d : bcs.dirichlet) {
    if (d.dof < 0 || d.dof >= layout.total) throw ConfigError("Dirichlet dof out of range");
    const int b = block_of(layout, d.dof);
    if (b != static_cast<int>(Block::Phi1) && b != static_cast<int>(Block::Phi2))
      throw ConfigError("Dirichlet data may only prescribe deformation (phi) unknowns");
  }
  const auto valence = mesh.edge_valence();
  for (const auto& n : bcs.neumann) {
    if (n.edge < 0 || n.edge >= static_cast<int>(mesh.num_edges())) throw ConfigError("Neumann edge out of range");
    if (valence[n.edge] != 1) throw ConfigError("Neumann edge " + std::to_string(n.edge) + " is not on the boundary");
  }
}

Assembler::Assembler(const SimplicialMesh2D& mesh, const DofLayout& layout, NeoHookeanParams params,
                     int quadrature_degree)
    : mesh_(mesh), layout_(layout), params_(params), quad_(quadrature(quadrature_degree)) {
  params_.validate();
  geometries_.reserve(mesh.num_triangles());
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) geometries_.push_back(element_geometry(mesh, t));
  build_pattern();
}

void Assembler::build_pattern() {
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(mesh_.num_triangles() * local::kSize * local::kSize);
  for (const auto& dofs : layout_.element_dofs)
    for (int i = 0; i < local::kSize; ++i)
      for (int j = 0; j < local::kSize; ++j) trip.emplace_back(dofs[i], dofs[j], 0.0);
  pattern_.resize(layout_.total, layout_.total);
  pattern_.setFromTriplets(trip.begin(), trip.end());
  pattern_.makeCompressed();

  const int* outer = pattern_.outerIndexPtr();
  const int* inner = pattern_.innerIndexPtr();
  value_slots_.resize(mesh_.num_triangles());
  for (std::size_t t = 0; t < mesh_.num_triangles(); ++t) {
    const auto& dofs = layout_.element_dofs[t];
    for (int j = 0; j < local::kSize; ++j) {
      const int col = dofs[j];
      for (int i = 0; i < local::kSize; ++i) {
        const int* pos = std::lower_bound(inner + outer[col], inner + outer[col + 1], dofs[i]);
        value_slots_[t][j * local::kSize + i] = static_cast<int>(pos - inner);
      }
    }
  }
}

Eigen::VectorXd Assembler::external_load(const BoundaryConditions& bcs, double load_factor) const {
  Eigen::VectorXd f = Eigen::VectorXd::Zero(layout_.total);
  const int off[2] = {layout_.offset(Block::Phi1), layout_.offset(Block::Phi2)};
  for (const auto& n : bcs.neumann) {
    const auto [a, b] = mesh_.edges[n.edge];
    const double len = (mesh_.vertices[b] - mesh_.vertices[a]).norm();
    for (int c = 0; c < 2; ++c) {
      // ∫ λ_a dL = ∫ λ_b dL = L/2, evaluated with the two-point rule.
      const double ta = 0.5 * len * ((1 - kGaussA) + (1 - kGaussB));
      const double tb = 0.5 * len * (kGaussA + kGaussB);
      f[off[c] + a] += load_factor * n.traction[c] * ta;
      f[off[c] + b] += load_factor * n.traction[c] * tb;
    }
  }
  return f;
}

AssembledSystem Assembler::assemble(const MixedState& state, const BoundaryConditions& bcs,
                                    const AssemblyOptions& options) const {
  if (static_cast<int>(state.size()) != layout_.total)
    throw Error("state size " + std::to_string(state.size()) + " does not match layout size " +
                std::to_string(layout_.total));

  const std::size_t nt = mesh_.num_triangles();
  const ElementOutput what = options.tangent ? ElementOutput::Tangent : ElementOutput::Residual;
  const int nthreads = std::clamp(options.threads, 1, static_cast<int>(std::max<std::size_t>(nt, 1)));

  struct Partial {
    double value = 0.0;
    Eigen::VectorXd residual;
    std::vector<double> values;
    std::exception_ptr error;
  };
  std::vector<Partial> partial(nthreads);

  auto work = [&](int tid) {
    Partial& p = partial[tid];
    p.residual = Eigen::VectorXd::Zero(layout_.total);
    if (options.tangent) p.values.assign(pattern_.nonZeros(), 0.0);
    const std::size_t begin = nt * tid / nthreads;
    const std::size_t end = nt * (tid + 1) / nthreads;
    try {
      for (std::size_t t = begin; t < end; ++t) {
        const LocalVector u = gather(layout_, state, t);
        ElementContribution c;
        try {
          c = element_evaluate(geometries_[t], u, params_, quad_, what);
        } catch (const NonPositiveJacobian& e) {
          throw NonPositiveJacobian(e.jacobian(), static_cast<std::ptrdiff_t>(t));
        }
        const auto& dofs = layout_.element_dofs[t];
        const auto& sg = layout_.element_signs[t];
        p.value += c.value;
        for (int i = 0; i < local::kSize; ++i) p.residual[dofs[i]] += sg[i] * c.residual[i];
        if (!options.tangent) continue;
        const auto& slots = value_slots_[t];
        for (int j = 0; j < local::kSize; ++j)
          for (int i = 0; i < local::kSize; ++i) p.values[slots[j * local::kSize + i]] += sg[i] * sg[j] * c.tangent(i, j);
      }
    } catch (...) {
      p.error = std::current_exception();
    }
  };

  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int tid = 0; tid < nthreads; ++tid) pool.emplace_back(work, tid);
  }
  for (const auto& p : partial)
    if (p.error) std::rethrow_exception(p.error);

  AssembledSystem out;
  out.residual = std::move(partial[0].residual);
  out.value = partial[0].value;
  for (int tid = 1; tid < nthreads; ++tid) {
    out.residual += partial[tid].residual;
    out.value += partial[tid].value;
  }
  if (options.tangent) {
    out.tangent = pattern_;
    double* vals = out.tangent.valuePtr();
    for (const auto& p : partial)
      for (std::size_t k = 0; k < p.values.size(); ++k) vals[k] += p.values[k];
  }

  // Boundary term -s ∫ t̄·φ dL; φ is linear along the edge so two Gauss points are exact.
  const int off[2] = {layout_.offset(Block::Phi1), layout_.offset(Block::Phi2)};
  const auto& x = state.values();
  for (const auto& n : bcs.neumann) {
    const auto [a, b] = mesh_.edges[n.edge];
    const double len = (mesh_.vertices[b] - mesh_.vertices[a]).norm();
    for (double s : {kGaussA, kGaussB})
      for (int c = 0; c < 2; ++c) {
        const double phi = (1 - s) * x[off[c] + a] + s * x[off[c] + b];
        out.value -= options.load_factor * n.traction[c] * phi * 0.5 * len;
      }
  }
  out.residual -= external_load(bcs, options.load_factor);
  return out;
}

double Assembler::min_jacobian(const MixedState& state) const {
  double jmin = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < mesh_.num_triangles(); ++t)
    jmin = std::min(jmin, element_min_jacobian(geometries_[t], gather(layout_, state, t), quad_));
  return jmin;
}

AssembledSystem assemble(const SimplicialMesh2D& mesh, const DofLayout& layout, const MixedState& state,
                         const NeoHookeanParams& params, const BoundaryConditions& bcs, int quadrature_degree,
                         const AssemblyOptions& options) {
  return Assembler(mesh, layout, params, quadrature_degree).assemble(state, bcs, options);
}

void apply_dirichlet(const SimplicialMesh2D& mesh, const DofLayout& layout, const BoundaryConditions& bcs,
                     double load_factor, MixedState& state) {
  const int off1 = layout.offset(Block::Phi1);
  const int off2 = layout.offset(Block::Phi2);
  for (const auto& d : bcs.dirichlet) {
    const bool first = d.dof < off2;
    const int v = d.dof - (first ? off1 : off2);
    const double X = first ? mesh.vertices[v].x() : mesh.vertices[v].y();
    state.values()[d.dof] = X + load_factor * (d.value - X);
  }
}

DirichletReduction::DirichletReduction(int total, const BoundaryConditions& bcs) : full_to_free_(total, 0) {
  for (const auto& d : bcs.dirichlet) full_to_free_.at(d.dof) = -1;
  for (int i = 0; i < total; ++i) {
    if (full_to_free_[i] < 0) continue;
    full_to_free_[i] = static_cast<int>(free_.size());
    free_.push_back(i);
  }
}

Eigen::VectorXd DirichletReduction::restrict(const Eigen::VectorXd& full) const {
  Eigen::VectorXd r(free_.size());
  for (std::size_t i = 0; i < free_.size(); ++i) r[i] = full[free_[i]];
  return r;
}

SparseMatrix DirichletReduction::restrict(const SparseMatrix& full) const {
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(full.nonZeros());
  for (int col = 0; col < full.outerSize(); ++col) {
    const int c = full_to_free_[col];
    if (c < 0) continue;
    for (SparseMatrix::InnerIterator it(full, col); it; ++it) {
      const int r = full_to_free_[it.row()];
      if (r >= 0) trip.emplace_back(r, c, it.value());
    }
  }
  SparseMatrix K(num_free(), num_free());
  K.setFromTriplets(trip.begin(), trip.end());
  K.makeCompressed();
  return K;
}

Eigen::VectorXd DirichletReduction::prolong(const Eigen::VectorXd& reduced) const {
  Eigen::VectorXd full = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(full_to_free_.size()));
  for (std::size_t i = 0; i < free_.size(); ++i) full[free_[i]] = reduced[i];
  return full;
}

std::vector<CompatibilityResidual> compatibility_residual(const SimplicialMesh2D& mesh, const DofLayout& layout,
                                                          const MixedState& state, int quadrature_degree) {
  const auto& quad = quadrature(quadrature_degree);
  std::vector<CompatibilityResidual> out(mesh.num_triangles());
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    const auto geom = element_geometry(mesh, t);
    const LocalVector u = gather(layout, state, t);
    double l2 = 0.0;
    for (std::size_t q = 0; q < quad.size(); ++q) {
      const PointFields f = evaluate_fields(geom, u, quad.points[q]);
      l2 += quad.weights[q] * geom.area * ((f.theta1 - f.dphi1).squaredNorm() + (f.theta2 - f.dphi2).squaredNorm());
    }
    const std::array<double, 6> c1{u[0], u[1], u[2], u[3], u[4], u[5]};
    const std::array<double, 6> c2{u[6], u[7], u[8], u[9], u[10], u[11]};
    const double d1 = exterior_derivative_p1lambda1(c1, geom);
    const double d2 = exterior_derivative_p1lambda1(c2, geom);
    out[t] = {std::sqrt(l2), std::hypot(d1, d2)};
  }
  return out;
}

}  // namespace hwforms
