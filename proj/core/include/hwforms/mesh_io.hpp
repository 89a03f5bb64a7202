#pragma once

#include <iosfwd>
#include <string>

#include "hwforms/mesh.hpp"

namespace hwforms {

// ASCII ".m2d" mesh files:
//
//   m2d 1
//   <nv> <nt>
//   x y                 (nv lines, 17 significant digits)
//   i j k [marker]      (nt lines, 0-based, CCW)
//   vm <v> <marker>     (optional, any number)
//   em <a> <b> <marker> (optional, edge given by its two vertices)
//
// '#' starts a comment anywhere after the header line.

void write_m2d(std::ostream& os, const SimplicialMesh2D& mesh);
void write_m2d(const std::string& path, const SimplicialMesh2D& mesh);

SimplicialMesh2D read_m2d(std::istream& is);
SimplicialMesh2D read_m2d(const std::string& path);

}  // namespace hwforms
