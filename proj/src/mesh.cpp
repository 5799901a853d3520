#include "wavedecay/mesh.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wavedecay/quadrature.hpp"

namespace wavedecay {

QuadratureMesh build_mesh(double r_trunc, int n_r, int n_angular) {
  if (r_trunc <= 0.0) throw std::domain_error("build_mesh: r_trunc must be > 0");
  if (n_r < 4) throw std::domain_error("build_mesh: n_r must be >= 4");
  if (!lebedev_supported(n_angular))
    throw std::invalid_argument("build_mesh: unsupported n_angular (use 6/14/26/38/50/86/110)");

  QuadratureMesh m;
  m.r_trunc = r_trunc;
  m.n_r = n_r;
  m.n_angular = n_angular;

  // composite GL panels of degree <= 8 so n_r scales by panel count
  int deg = std::min(8, n_r);
  int npan = (n_r + deg - 1) / deg;
  Rule1d rad = composite_gl(0.0, r_trunc, npan, deg);
  m.radial_nodes = rad.nodes;
  m.radial_weights = rad.weights;

  const SphericalRule& sph = lebedev(n_angular);
  m.nodes.reserve(rad.nodes.size() * sph.dirs.size());
  m.weights.reserve(m.nodes.capacity());
  for (size_t i = 0; i < rad.nodes.size(); ++i) {
    double r = rad.nodes[i];
    double wr = rad.weights[i] * r * r;
    for (size_t j = 0; j < sph.dirs.size(); ++j) {
      m.nodes.push_back(sph.dirs[j] * r);
      m.weights.push_back(wr * sph.weights[j]);
    }
  }
  m.cell_radius.resize(m.weights.size());
  for (size_t i = 0; i < m.weights.size(); ++i)
    m.cell_radius[i] = std::cbrt(3.0 * m.weights[i] / (4.0 * std::numbers::pi));
  return m;
}

double choose_r_trunc(const PotentialSpec& v, double tol, double r_cap) {
  double sup = v.support_radius();
  if (std::isfinite(sup)) return std::min(sup, r_cap);
  // integrand |V(r)| * (1/(4 pi r)) * 4 pi r^2 = |V(r)| r
  auto part = [&](double a, double b) {
    return adaptive_integrate([&](double r) { return std::abs(v.radial_value(r)) * r; }, a, b,
                              1e-6);
  };
  double total = part(0.0, 400.0);
  double r = 4.0;
  while (r < r_cap) {
    if (part(r, 400.0) < tol * total) break;
    r += 1.0;
  }
  return std::min(r, r_cap);
}

}  // namespace wavedecay
