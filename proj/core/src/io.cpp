#include "cgc/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "cgc/errors.hpp"

namespace cgc {

std::string fmt17(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse17(const std::string& s) {
  if (s == "inf" || s == "+inf") return xr::inf;
  if (s == "-inf") return -xr::inf;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str()) {
    throw Error(ErrorCode::IoFailure, "unparseable number: '" + s + "'");
  }
  return v;
}

void write_field_csv(const std::string& path, const GridField& field) {
  std::ostringstream os;
  os << "x,y,value\n";
  for (int j = 0; j < field.n; ++j) {
    for (int i = 0; i < field.n; ++i) {
      os << fmt17(field.coord(i)) << ',' << fmt17(field.coord(j)) << ','
         << fmt17(field.at(i, j)) << '\n';
    }
  }
  write_text_file(path, os.str());
}

GridField read_field_csv(const std::string& path) {
  std::istringstream is(read_text_file(path));
  std::string line;
  if (!std::getline(is, line)) {
    throw Error(ErrorCode::IoFailure, path + ": empty field file");
  }
  std::vector<double> xs, vals;
  double max_x = 0.0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cx, cy, cv;
    if (!std::getline(row, cx, ',') || !std::getline(row, cy, ',') ||
        !std::getline(row, cv)) {
      throw Error(ErrorCode::IoFailure, path + ": malformed row '" + line + "'");
    }
    xs.push_back(parse17(cx));
    max_x = std::max(max_x, std::abs(xs.back()));
    vals.push_back(parse17(cv));
  }
  const std::size_t count = vals.size();
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(count))));
  if (n < 2 || static_cast<std::size_t>(n) * n != count) {
    throw Error(ErrorCode::IoFailure, path + ": row count is not a square grid");
  }
  GridField field(n, max_x, 0.0);
  field.v = vals;
  return field;
}

void write_mesh_csv(const std::string& path, const SurfaceMesh& mesh) {
  const bool with_k = !mesh.curvature.empty();
  std::ostringstream os;
  os << (with_k ? "x,y,f,k\n" : "x,y,f\n");
  for (int j = 0; j < mesh.n; ++j) {
    for (int i = 0; i < mesh.n; ++i) {
      os << fmt17(mesh.coord(i)) << ',' << fmt17(mesh.coord(j)) << ','
         << fmt17(mesh.height(i, j));
      if (with_k) os << ',' << fmt17(mesh.curvature[mesh.index(i, j)]);
      os << '\n';
    }
  }
  write_text_file(path, os.str());
}

void write_mesh_obj(const std::string& path, const SurfaceMesh& mesh) {
  std::ostringstream os;
  for (int j = 0; j < mesh.n; ++j) {
    for (int i = 0; i < mesh.n; ++i) {
      os << "v " << fmt17(mesh.coord(i)) << ' ' << fmt17(mesh.coord(j)) << ' '
         << fmt17(mesh.height(i, j)) << '\n';
    }
  }
  for (int j = 0; j + 1 < mesh.n; ++j) {
    for (int i = 0; i + 1 < mesh.n; ++i) {
      const long a = static_cast<long>(j) * mesh.n + i + 1;
      const long b = a + 1;
      const long c = a + mesh.n + 1;
      const long d = a + mesh.n;
      os << "f " << a << ' ' << b << ' ' << c << '\n';
      os << "f " << a << ' ' << c << ' ' << d << '\n';
    }
  }
  write_text_file(path, os.str());
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot open for writing: " + path);
  out << content;
  if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open for reading: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace cgc
