#pragma once

#include <functional>
#include <vector>

#include "wavedecay/geometry.hpp"

namespace wavedecay {

struct Rule1d {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre nodes/weights on [-1, 1].
const Rule1d& gauss_legendre(int n);

/// Gauss-Legendre rule mapped to [a, b].
Rule1d gauss_legendre_on(int n, double a, double b);

/// Composite rule: npanels equal panels on [a, b], deg-point GL each.
Rule1d composite_gl(double a, double b, int npanels, int deg);

/// Composite rule with panel edges aligned to the given breakpoints and a
/// maximum panel width.
Rule1d panels_with_breakpoints(double a, double b, const std::vector<double>& brk,
                               double max_width, int deg);

/// Adaptive 1-d quadrature (recursive Gauss-Kronrod style on GL pairs),
/// relative tolerance rtol. Used as the independent oracle route and for the
/// radial reductions of the bound integrals.
double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double rtol = 1e-8, int max_depth = 40);

/// Spherical quadrature on S^2 exact to the rule's polynomial degree.
/// Supported sizes: 6, 14, 26, 38, 50, 86, 110.
struct SphericalRule {
  std::vector<Point3> dirs;
  std::vector<double> weights;  // sum to 4*pi
  int degree = 0;
};
const SphericalRule& lebedev(int n);
bool lebedev_supported(int n);

/// Legendre polynomial P_l(x) for l = 0..lmax (three-term recurrence).
void legendre_all(int lmax, double x, std::vector<double>& out);

}  // namespace wavedecay
