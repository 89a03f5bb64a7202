#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "hwforms/generators.hpp"
#include "hwforms/material.hpp"
#include "hwforms/solver.hpp"

namespace hwforms {

enum class CaseKind { Cook, Block, Plate, File };

CaseKind parse_case(const std::string& name);
std::string to_string(CaseKind kind);

/// Everything needed to run one benchmark.
///
/// `load` is case specific: the shear traction on Cook's loaded edge (N/mm²),
/// the pressure on the block's loaded strip (N/mm²), or the total extension of
/// the plate (cm; the quarter model's loaded face moves by load/2). It is
/// ignored for case=file, whose boundary data comes from the .bc file.
struct BenchmarkConfig {
  CaseKind kind = CaseKind::Cook;
  int refine = 0;
  NeoHookeanParams material;
  double load = 0.0;
  SolverConfig solver;
  int quadrature_degree = kDefaultQuadratureDegree;
  std::string out = "out";

  std::string mesh_path;
  std::string bc_path;
  std::optional<Vec2> probe;

  CookGeometry cook;
  BlockGeometry block;
  PlateGeometry plate;

  /// Material, load and step defaults of each case (cook/block: μ=80.194,
  /// κ=400889.8, 8 steps; plate: μ=10, κ=1000, 10 steps).
  static BenchmarkConfig defaults(CaseKind kind);

  void validate() const;
};

/// Flat key=value text; '#' comments and blank lines are ignored.
std::map<std::string, std::string> read_key_values(std::istream& is);
std::map<std::string, std::string> read_key_values(const std::string& path);

/// Applies recognised keys (case is handled by the caller). Throws ConfigError on
/// unknown keys or unparsable values.
void apply_key_values(BenchmarkConfig& cfg, const std::map<std::string, std::string>& kv);

/// Writes the full configuration as key=value lines, followed by comment lines
/// describing geometric assumptions.
void write_config(std::ostream& os, const BenchmarkConfig& cfg);

}  // namespace hwforms
