#include <fstream>

#include "wavedecay/norms.hpp"

namespace wavedecay {

// Binary export: header (magic, rows, cols) + grids + row-major complex values.
// Used by the regression tests and by the CLI export path.
void write_kernel_matrix(const OperatorKernel& k, const std::string& path) {
  k.check();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_kernel_matrix: cannot open " + path);
  const char magic[8] = {'W', 'D', 'K', 'R', 'N', 'L', '0', '1'};
  out.write(magic, 8);
  std::int64_t nr = k.values.rows(), nc = k.values.cols();
  out.write(reinterpret_cast<const char*>(&nr), 8);
  out.write(reinterpret_cast<const char*>(&nc), 8);
  auto put_points = [&](const std::vector<Point3>& pts) {
    for (const auto& p : pts) {
      double xyz[3] = {p.x, p.y, p.z};
      out.write(reinterpret_cast<const char*>(xyz), 24);
    }
  };
  put_points(k.row_grid);
  put_points(k.col_grid);
  out.write(reinterpret_cast<const char*>(k.row_weights.data()), 8 * nr);
  out.write(reinterpret_cast<const char*>(k.col_weights.data()), 8 * nc);
  for (std::int64_t i = 0; i < nr; ++i)
    for (std::int64_t j = 0; j < nc; ++j) {
      double re = k.values(i, j).real(), im = k.values(i, j).imag();
      out.write(reinterpret_cast<const char*>(&re), 8);
      out.write(reinterpret_cast<const char*>(&im), 8);
    }
}

OperatorKernel read_kernel_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_kernel_matrix: cannot open " + path);
  char magic[8];
  in.read(magic, 8);
  if (std::string(magic, 8) != "WDKRNL01")
    throw std::runtime_error("read_kernel_matrix: bad magic in " + path);
  std::int64_t nr = 0, nc = 0;
  in.read(reinterpret_cast<char*>(&nr), 8);
  in.read(reinterpret_cast<char*>(&nc), 8);
  OperatorKernel k;
  auto get_points = [&](std::vector<Point3>& pts, std::int64_t n) {
    pts.resize(n);
    for (auto& p : pts) {
      double xyz[3];
      in.read(reinterpret_cast<char*>(xyz), 24);
      p = {xyz[0], xyz[1], xyz[2]};
    }
  };
  get_points(k.row_grid, nr);
  get_points(k.col_grid, nc);
  k.row_weights.resize(nr);
  k.col_weights.resize(nc);
  in.read(reinterpret_cast<char*>(k.row_weights.data()), 8 * nr);
  in.read(reinterpret_cast<char*>(k.col_weights.data()), 8 * nc);
  k.values.resize(nr, nc);
  for (std::int64_t i = 0; i < nr; ++i)
    for (std::int64_t j = 0; j < nc; ++j) {
      double re, im;
      in.read(reinterpret_cast<char*>(&re), 8);
      in.read(reinterpret_cast<char*>(&im), 8);
      k.values(i, j) = Complex(re, im);
    }
  if (!in) throw std::runtime_error("read_kernel_matrix: truncated file " + path);
  return k;
}

}  // namespace wavedecay
