#include "hwforms/bc_io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "hwforms/errors.hpp"

namespace hwforms {

AffineExpr parse_affine(const std::string& text) {
  auto is_operand = [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '.'; };
  std::string s;
  bool gap = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      gap = !s.empty();
      continue;
    }
    // "2 3" or "2 x" is not an expression
    if (gap && is_operand(ch) && is_operand(s.back())) throw ConfigError("malformed affine expression '" + text + "'");
    gap = false;
    s += ch;
  }
  if (s.empty()) throw ConfigError("empty affine expression");

  AffineExpr e;
  std::size_t i = 0;
  while (i < s.size()) {
    double sign = 1.0;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1.0 : 1.0;
      ++i;
    } else if (i != 0) {
      throw ConfigError("malformed affine expression '" + text + "'");
    }
    double coeff = 1.0;
    bool have_number = false;
    if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) {
      char* end = nullptr;
      coeff = std::strtod(s.c_str() + i, &end);
      i = static_cast<std::size_t>(end - s.c_str());
      have_number = true;
    }
    if (i < s.size() && s[i] == '*') {
      if (!have_number) throw ConfigError("malformed affine expression '" + text + "'");
      ++i;
    }
    if (i < s.size() && (s[i] == 'x' || s[i] == 'y')) {
      (s[i] == 'x' ? e.b : e.c) += sign * coeff;
      ++i;
    } else if (have_number) {
      e.a += sign * coeff;
    } else {
      throw ConfigError("malformed affine expression '" + text + "'");
    }
  }
  return e;
}

BoundarySpec read_bc(std::istream& is) {
  BoundarySpec spec;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string kind;
    if (!(ss >> kind)) continue;
    auto fail = [&](const std::string& what) -> ConfigError {
      return ConfigError("bc line " + std::to_string(line_no) + ": " + what);
    };
    if (kind == "dirichlet") {
      DirichletRule r;
      std::string comp;
      if (!(ss >> r.marker >> comp)) throw fail("expected 'dirichlet <marker> <ux|uy|both> <expr>'");
      if (comp == "ux") r.component = Component::X;
      else if (comp == "uy") r.component = Component::Y;
      else if (comp == "both") r.component = Component::Both;
      else throw fail("unknown component '" + comp + "'");
      std::string rest;
      std::getline(ss, rest);
      try {
        r.displacement = parse_affine(rest);
      } catch (const ConfigError& e) {
        throw fail(e.what());
      }
      spec.dirichlet.push_back(r);
    } else if (kind == "neumann") {
      NeumannRule r;
      if (!(ss >> r.marker >> r.traction.x() >> r.traction.y())) throw fail("expected 'neumann <marker> <tx> <ty>'");
      spec.neumann.push_back(r);
    } else {
      throw fail("unknown directive '" + kind + "'");
    }
  }
  return spec;
}

BoundarySpec read_bc(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open " + path);
  return read_bc(is);
}

void write_bc(std::ostream& os, const BoundarySpec& spec) {
  char buf[256];
  for (const auto& r : spec.dirichlet) {
    const char* comp = r.component == Component::X ? "ux" : r.component == Component::Y ? "uy" : "both";
    std::snprintf(buf, sizeof buf, "dirichlet %d %s %.17g%+.17g*x%+.17g*y\n", r.marker, comp, r.displacement.a,
                  r.displacement.b, r.displacement.c);
    os << buf;
  }
  for (const auto& r : spec.neumann) {
    std::snprintf(buf, sizeof buf, "neumann %d %.17g %.17g\n", r.marker, r.traction.x(), r.traction.y());
    os << buf;
  }
}

BoundaryConditions resolve(const BoundarySpec& spec, const SimplicialMesh2D& mesh, const DofLayout& layout) {
  std::map<int, double> prescribed;
  const int off1 = layout.offset(Block::Phi1);
  const int off2 = layout.offset(Block::Phi2);
  for (const auto& r : spec.dirichlet) {
    const auto verts = mesh.vertices_with_marker(r.marker);
    if (verts.empty()) throw ConfigError("Dirichlet marker " + std::to_string(r.marker) + " matches no vertex");
    for (int v : verts) {
      const Vec2& X = mesh.vertices[v];
      const double u = r.displacement(X);
      if (r.component != Component::Y) prescribed[off1 + v] = X.x() + u;
      if (r.component != Component::X) prescribed[off2 + v] = X.y() + u;
    }
  }
  BoundaryConditions bcs;
  for (const auto& [dof, value] : prescribed) bcs.dirichlet.push_back({dof, value});
  for (const auto& r : spec.neumann) {
    const auto edges = mesh.edges_with_marker(r.marker);
    if (edges.empty()) throw ConfigError("Neumann marker " + std::to_string(r.marker) + " matches no edge");
    for (int e : edges) bcs.neumann.push_back({e, r.traction});
  }
  validate(bcs, mesh, layout);
  return bcs;
}

}  // namespace hwforms
