#include "hwforms/mesh_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "hwforms/errors.hpp"

namespace hwforms {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Next non-empty, comment-stripped line split into tokens.
bool next_tokens(std::istream& is, std::vector<std::string>& tokens, int& line_no) {
  std::string line;
  while (std::getline(is, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    tokens.clear();
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (!tokens.empty()) return true;
  }
  return false;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw IoError("m2d line " + std::to_string(line_no) + ": " + what);
}

int to_int(const std::string& s, int line_no) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) fail(line_no, "expected integer, got '" + s + "'");
  return v;
}

double to_double(const std::string& s, int line_no) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) fail(line_no, "expected number, got '" + s + "'");
  return v;
}

}  // namespace

void write_m2d(std::ostream& os, const SimplicialMesh2D& mesh) {
  os << "m2d 1\n" << mesh.num_vertices() << ' ' << mesh.num_triangles() << '\n';
  for (const auto& v : mesh.vertices) os << format_double(v.x()) << ' ' << format_double(v.y()) << '\n';
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tri = mesh.triangles[t];
    os << tri[0] << ' ' << tri[1] << ' ' << tri[2];
    if (mesh.triangle_markers[t] != 0) os << ' ' << mesh.triangle_markers[t];
    os << '\n';
  }
  for (std::size_t v = 0; v < mesh.num_vertices(); ++v)
    if (mesh.vertex_markers[v] != 0) os << "vm " << v << ' ' << mesh.vertex_markers[v] << '\n';
  for (std::size_t e = 0; e < mesh.num_edges(); ++e)
    if (mesh.edge_markers[e] != 0)
      os << "em " << mesh.edges[e][0] << ' ' << mesh.edges[e][1] << ' ' << mesh.edge_markers[e] << '\n';
}

void write_m2d(const std::string& path, const SimplicialMesh2D& mesh) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open " + path + " for writing");
  write_m2d(os, mesh);
  if (!os) throw IoError("write failed: " + path);
}

SimplicialMesh2D read_m2d(std::istream& is) {
  std::vector<std::string> tok;
  int line_no = 0;
  if (!next_tokens(is, tok, line_no) || tok.size() != 2 || tok[0] != "m2d") fail(line_no, "missing 'm2d 1' header");
  if (tok[1] != "1") fail(line_no, "unsupported m2d version " + tok[1]);
  if (!next_tokens(is, tok, line_no) || tok.size() != 2) fail(line_no, "expected '<nv> <nt>'");
  const int nv = to_int(tok[0], line_no);
  const int nt = to_int(tok[1], line_no);
  if (nv < 3 || nt < 1) fail(line_no, "mesh needs at least 3 vertices and 1 triangle");

  std::vector<Vec2> vertices(nv);
  for (int i = 0; i < nv; ++i) {
    if (!next_tokens(is, tok, line_no) || tok.size() != 2) fail(line_no, "expected 'x y'");
    vertices[i] = {to_double(tok[0], line_no), to_double(tok[1], line_no)};
  }
  std::vector<std::array<int, 3>> triangles(nt);
  std::vector<int> tri_markers(nt, 0);
  for (int i = 0; i < nt; ++i) {
    if (!next_tokens(is, tok, line_no) || tok.size() < 3 || tok.size() > 4) fail(line_no, "expected 'i j k [marker]'");
    triangles[i] = {to_int(tok[0], line_no), to_int(tok[1], line_no), to_int(tok[2], line_no)};
    if (tok.size() == 4) tri_markers[i] = to_int(tok[3], line_no);
  }

  std::vector<std::pair<int, int>> vm;
  std::vector<std::pair<std::pair<int, int>, int>> em;
  while (next_tokens(is, tok, line_no)) {
    if (tok[0] == "vm" && tok.size() == 3) {
      vm.push_back({to_int(tok[1], line_no), to_int(tok[2], line_no)});
    } else if (tok[0] == "em" && tok.size() == 4) {
      const int a = to_int(tok[1], line_no);
      const int b = to_int(tok[2], line_no);
      em.push_back({{std::min(a, b), std::max(a, b)}, to_int(tok[3], line_no)});
    } else {
      fail(line_no, "unrecognised marker line");
    }
  }

  SimplicialMesh2D mesh = build_mesh(std::move(vertices), std::move(triangles));
  mesh.triangle_markers = std::move(tri_markers);
  for (auto [v, m] : vm) {
    if (v < 0 || v >= nv) throw IoError("vertex marker for invalid vertex " + std::to_string(v));
    mesh.vertex_markers[v] = m;
  }
  if (!em.empty()) {
    std::map<std::pair<int, int>, int> index;
    for (std::size_t e = 0; e < mesh.num_edges(); ++e) index[{mesh.edges[e][0], mesh.edges[e][1]}] = static_cast<int>(e);
    for (const auto& [key, m] : em) {
      auto it = index.find(key);
      if (it == index.end())
        throw IoError("edge marker for non-existent edge " + std::to_string(key.first) + "-" + std::to_string(key.second));
      mesh.edge_markers[it->second] = m;
    }
  }
  return mesh;
}

SimplicialMesh2D read_m2d(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open " + path);
  return read_m2d(is);
}

}  // namespace hwforms
