#pragma once

#include <vector>

#include "wavedecay/types.hpp"

namespace wavedecay {

/// Product quadrature on the ball |y| <= r_trunc: composite Gauss-Legendre in
/// radius times a spherical rule. diag cell radius feeds the singularity
/// correction of weakly singular kernels.
struct QuadratureMesh {
  std::vector<Point3> nodes;
  std::vector<double> weights;
  double r_trunc = 8.0;
  int n_r = 16;
  int n_angular = 26;
  std::vector<double> cell_radius;    // equal-volume ball radius per node
  std::vector<double> radial_nodes;   // the radial factor of the rule
  std::vector<double> radial_weights;

  size_t size() const { return nodes.size(); }
};

QuadratureMesh build_mesh(double r_trunc, int n_r, int n_angular);

/// Truncation radius such that the tail of int |V| * (free kernel envelope)
/// is below tol relative to the retained part, capped at r_cap.
double choose_r_trunc(const PotentialSpec& v, double tol = 1e-4, double r_cap = 16.0);

}  // namespace wavedecay
