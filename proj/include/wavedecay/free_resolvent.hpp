#pragma once

#include <vector>

#include "wavedecay/norms.hpp"
#include "wavedecay/types.hpp"

namespace wavedecay {

/// Kernel of the k-th lambda-derivative of the free resolvent at x, y.
/// k = 0 is singular on the diagonal; k >= 1 is finite everywhere.
Complex free_kernel(const Point3& x, const Point3& y, const ComplexFrequency& freq, int k = 0);

/// Same, as a function of r = |x - y|.
Complex free_kernel_radial(double r, const ComplexFrequency& freq, int k = 0);

/// A_s(x, eps) = int e^{-2 eps |x-y|} <y>^{-2s-2} dy, by radial-angular product
/// quadrature (relative accuracy ~1e-4). Requires eps > 0 unless s > 1/2.
double bound_integral_A(double s, double epsilon, const Point3& x);

/// Radial-reduction oracle for A_s (adaptive 1-d quadrature on the exact
/// angular integral). Independent of the product-rule route.
double bound_integral_A_oracle(double s, double epsilon, const Point3& x, double rtol = 1e-8);

/// B_{s,sigma,k}(x, eps) = <x>^{-2 sigma - 2k + 2}
///      int |x-y|^{2k} e^{-2 eps |x-y|} <y>^{-2s-2k-2} dy.
double bound_integral_B(double s, double sigma, int k, double epsilon, const Point3& x);
double bound_integral_B_oracle(double s, double sigma, int k, double epsilon, const Point3& x,
                               double rtol = 1e-8);

/// sup over |x| of the bound integrals, sampled on a logarithmic |x| grid
/// reaching ~2/eps (both integrals depend on x through |x| only).
double bound_integral_A_sup(double s, double epsilon);
double bound_integral_B_sup(double s, double sigma, int k, double epsilon);

/// Half-line oscillatory integral I(s) = int_0^inf e^{i s rho} rho^beta c(rho) drho.
/// Compactly supported cutoffs use aligned panel quadrature; chi_a additionally
/// uses a numeric extension plus an asymptotic tail (requires beta < 1).
Complex oscillatory_halfline(double s, double beta, const CutoffSpec& cutoff,
                             double panel_scale = 1.0);

struct PropagatorAccuracy {
  double panel_scale = 1.0;  // < 1 refines the lambda/rho panels
};

/// Kernel of G0^{-alpha} e^{it sqrt(G0)} cutoff(sqrt(G0)) at separation r = |x-y|,
/// via the radial oscillatory integral
///   (1/(2 pi^2 r)) int_0^inf sin(rho r) e^{i t rho} rho^{1-2 alpha} cutoff(rho) drho.
Complex free_propagator_kernel(double r, double t, double alpha, const CutoffSpec& cutoff,
                               const PropagatorAccuracy& acc = {});
Complex free_propagator_kernel(const Point3& x, const Point3& y, double t, double alpha,
                               const CutoffSpec& cutoff, const PropagatorAccuracy& acc = {});

/// Weighted kernel sup over a cone-adapted r-grid:
///   sup_r <r>^{-sigma * alpha} |K(r; t)| with x at the origin.
double free_propagator_weighted_sup(double t, double alpha, double sigma,
                                    const CutoffSpec& cutoff);

/// Fit of the in-cone sup (|x|,|y| <= region_factor * t) against t.
DecayFit appendix_decay_fit(const std::vector<double>& t_list, double alpha,
                            const CutoffSpec& cutoff, double region_factor = 0.25);

}  // namespace wavedecay
