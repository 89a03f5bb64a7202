#include "hwforms/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>

#include "hwforms/errors.hpp"

namespace hwforms {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  char* end = nullptr;
  const double d = std::strtod(v.c_str(), &end);
  if (v.empty() || *end != '\0') throw ConfigError("config: '" + key + "' expects a number, got '" + v + "'");
  return d;
}

int to_int(const std::string& key, const std::string& v) {
  int i = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), i);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw ConfigError("config: '" + key + "' expects an integer, got '" + v + "'");
  return i;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

CaseKind parse_case(const std::string& name) {
  if (name == "cook") return CaseKind::Cook;
  if (name == "block") return CaseKind::Block;
  if (name == "plate") return CaseKind::Plate;
  if (name == "file") return CaseKind::File;
  throw ConfigError("unknown case '" + name + "' (expected cook, block, plate or file)");
}

std::string to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::Cook: return "cook";
    case CaseKind::Block: return "block";
    case CaseKind::Plate: return "plate";
    case CaseKind::File: return "file";
  }
  return "?";
}

BenchmarkConfig BenchmarkConfig::defaults(CaseKind kind) {
  BenchmarkConfig c;
  c.kind = kind;
  c.out = "out/" + to_string(kind);
  switch (kind) {
    case CaseKind::Cook:
      c.material = {80.194, 400889.8};
      c.load = 32.0;
      c.solver.load_steps = 8;
      break;
    case CaseKind::Block:
      c.material = {80.194, 400889.8};
      c.load = 80.0;
      c.solver.load_steps = 8;
      break;
    case CaseKind::Plate:
      c.material = {10.0, 1000.0};
      c.load = 1.0;
      c.solver.load_steps = 10;
      break;
    case CaseKind::File:
      c.material = {1.0, 10.0};
      c.solver.load_steps = 1;
      break;
  }
  return c;
}

void BenchmarkConfig::validate() const {
  if (refine < 0) throw ConfigError("config: refine must be >= 0");
  material.validate();
  solver.validate();
  if (quadrature_degree < 1 || quadrature_degree > 6) throw ConfigError("config: quad must be in 1..6");
  if (kind == CaseKind::File && (mesh_path.empty() || bc_path.empty()))
    throw ConfigError("config: case=file needs both 'mesh' and 'bc'");
}

std::map<std::string, std::string> read_key_values(std::istream& is) {
  std::map<std::string, std::string> kv;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

std::map<std::string, std::string> read_key_values(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open config " + path);
  return read_key_values(is);
}

void apply_key_values(BenchmarkConfig& c, const std::map<std::string, std::string>& kv) {
  using Setter = std::function<void(const std::string&, const std::string&)>;
  auto dbl = [](double& t) -> Setter { return [&t](const auto& k, const auto& v) { t = to_double(k, v); }; };
  auto integer = [](int& t) -> Setter { return [&t](const auto& k, const auto& v) { t = to_int(k, v); }; };
  auto str = [](std::string& t) -> Setter { return [&t](const auto&, const auto& v) { t = v; }; };
  const std::map<std::string, Setter> setters{
      {"case", [](const auto&, const auto&) {}},
      {"refine", integer(c.refine)},
      {"mu", dbl(c.material.mu)},
      {"kappa", dbl(c.material.kappa)},
      {"load", dbl(c.load)},
      {"steps", integer(c.solver.load_steps)},
      {"tol", dbl(c.solver.newton_tol)},
      {"max_iters", integer(c.solver.max_newton_iters)},
      {"halvings", integer(c.solver.max_halvings)},
      {"threads", integer(c.solver.threads)},
      {"quad", integer(c.quadrature_degree)},
      {"out", str(c.out)},
      {"mesh", str(c.mesh_path)},
      {"bc", str(c.bc_path)},
      {"probe_x", [&c](const auto& k, const auto& v) {
         c.probe = Vec2(to_double(k, v), c.probe ? c.probe->y() : 0.0);
       }},
      {"probe_y", [&c](const auto& k, const auto& v) {
         c.probe = Vec2(c.probe ? c.probe->x() : 0.0, to_double(k, v));
       }},
      {"pattern", [&c](const auto&, const auto& v) {
         c.cook.pattern = c.block.pattern = c.plate.pattern = parse_pattern(v);
       }},
      {"cook_width", dbl(c.cook.width)},
      {"cook_left_height", dbl(c.cook.left_height)},
      {"cook_right_height", dbl(c.cook.right_height)},
      {"cook_divisions", integer(c.cook.base_divisions)},
      {"block_half_width", dbl(c.block.half_width)},
      {"block_height", dbl(c.block.height)},
      {"block_load_half_width", dbl(c.block.load_half_width)},
      {"block_divisions", integer(c.block.base_divisions)},
      {"plate_half_side", dbl(c.plate.half_side)},
      {"plate_hole_radius", dbl(c.plate.hole_radius)},
      {"plate_divisions", integer(c.plate.base_divisions)},
  };
  for (const auto& [k, v] : kv) {
    auto it = setters.find(k);
    if (it == setters.end()) throw ConfigError("config: unknown key '" + k + "'");
    it->second(k, v);
  }
}

void write_config(std::ostream& os, const BenchmarkConfig& c) {
  os << "case=" << to_string(c.kind) << '\n'
     << "refine=" << c.refine << '\n'
     << "mu=" << fmt(c.material.mu) << '\n'
     << "kappa=" << fmt(c.material.kappa) << '\n'
     << "load=" << fmt(c.load) << '\n'
     << "steps=" << c.solver.load_steps << '\n'
     << "tol=" << fmt(c.solver.newton_tol) << '\n'
     << "max_iters=" << c.solver.max_newton_iters << '\n'
     << "halvings=" << c.solver.max_halvings << '\n'
     << "threads=" << c.solver.threads << '\n'
     << "quad=" << c.quadrature_degree << '\n'
     << "out=" << c.out << '\n';
  if (!c.mesh_path.empty()) os << "mesh=" << c.mesh_path << '\n';
  if (!c.bc_path.empty()) os << "bc=" << c.bc_path << '\n';
  if (c.kind == CaseKind::Cook) os << "pattern=" << to_string(c.cook.pattern) << '\n';
  if (c.kind == CaseKind::Block) os << "pattern=" << to_string(c.block.pattern) << '\n';
  if (c.kind == CaseKind::Plate) os << "pattern=" << to_string(c.plate.pattern) << '\n';
  if (c.probe) os << "probe_x=" << fmt(c.probe->x()) << "\nprobe_y=" << fmt(c.probe->y()) << '\n';
  switch (c.kind) {
    case CaseKind::Cook:
      os << "cook_width=" << fmt(c.cook.width) << "\ncook_left_height=" << fmt(c.cook.left_height)
         << "\ncook_right_height=" << fmt(c.cook.right_height) << "\ncook_divisions=" << c.cook.base_divisions
         << "\n# assumption: canonical 48/44/16 mm trapezoid, clamped at x=0, uniform shear load on x=width\n"
            "# assumption: probe P is the top corner of the loaded edge\n";
      break;
    case CaseKind::Block:
      os << "block_half_width=" << fmt(c.block.half_width) << "\nblock_height=" << fmt(c.block.height)
         << "\nblock_load_half_width=" << fmt(c.block.load_half_width)
         << "\nblock_divisions=" << c.block.base_divisions
         << "\n# assumption: half model of a 20x10 mm block; bottom u_y=0, symmetry u_x=0 at x=0,\n"
            "#   pressure on the top strip x<=load_half_width with u_x=0 there\n"
            "# assumption: probe A is the centre of the loaded face (on the symmetry line)\n";
      break;
    case CaseKind::Plate:
      os << "plate_half_side=" << fmt(c.plate.half_side) << "\nplate_hole_radius=" << fmt(c.plate.hole_radius)
         << "\nplate_divisions=" << c.plate.base_divisions
         << "\n# assumption: quarter model; load is the total plate extension, the face x=half_side moves load/2\n"
            "# assumption: probe is the top of the hole (0, hole_radius); hole boundary is polygonal\n";
      break;
    case CaseKind::File: break;
  }
}

}  // namespace hwforms
