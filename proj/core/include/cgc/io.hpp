#pragma once

#include <string>

#include "cgc/grid_field.hpp"
#include "cgc/surface_mesh.hpp"

namespace cgc {

// Round-trip-safe text form of a double: 17 significant digits; infinities
// render as "inf" / "-inf".
std::string fmt17(double v);

// Inverse of fmt17 (accepts "inf", "-inf", "+inf").
double parse17(const std::string& s);

// CSV with header "x,y,value", row-major over grid nodes.
void write_field_csv(const std::string& path, const GridField& field);
GridField read_field_csv(const std::string& path);

// CSV with header "x,y,f" (and ",k" when curvature samples are present).
void write_mesh_csv(const std::string& path, const SurfaceMesh& mesh);

// Wavefront OBJ: one vertex per grid node, each grid quad split into two
// triangles.
void write_mesh_obj(const std::string& path, const SurfaceMesh& mesh);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace cgc
