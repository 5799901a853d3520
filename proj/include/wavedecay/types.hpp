#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavedecay/geometry.hpp"

namespace wavedecay {

using Complex = std::complex<double>;

enum class Branch { Plus, Minus };

/// Spectral point lambda +- i*epsilon.
struct ComplexFrequency {
  double lambda = 1.0;
  double epsilon = 0.0;
  Branch branch = Branch::Plus;

  ComplexFrequency() = default;
  ComplexFrequency(double lam, double eps, Branch b) : lambda(lam), epsilon(eps), branch(b) {
    if (lambda < 0.0) throw std::domain_error("ComplexFrequency: lambda must be >= 0");
    if (epsilon < 0.0 || epsilon > 1.0)
      throw std::domain_error("ComplexFrequency: epsilon must lie in [0,1]");
  }

  static ComplexFrequency plus(double lam, double eps = 0.0) {
    return {lam, eps, Branch::Plus};
  }
  static ComplexFrequency minus(double lam, double eps = 0.0) {
    return {lam, eps, Branch::Minus};
  }

  /// lambda + i*eps on the plus branch, lambda - i*eps on the minus branch.
  Complex w() const {
    return branch == Branch::Plus ? Complex(lambda, epsilon) : Complex(lambda, -epsilon);
  }
  /// sign factor (+i or -i) entering the kernel exponent.
  Complex unit() const { return branch == Branch::Plus ? Complex(0, 1) : Complex(0, -1); }
  ComplexFrequency conjugated() const {
    return {lambda, epsilon, branch == Branch::Plus ? Branch::Minus : Branch::Plus};
  }
};

/// Spatial weight exponents sigma, s, s1 with the derived pair (j0, sigma').
struct WeightParams {
  double sigma = 0.5;
  double s = 0.0;
  double s1 = 1.0;
  int j0 = 0;
  double sigma_prime = 0.5;

  static WeightParams make(double sigma, double s, double s1) {
    if (sigma < 0.0) throw std::domain_error("WeightParams: sigma must be >= 0");
    if (!(s > -0.5)) throw std::domain_error("WeightParams: need s > -1/2");
    if (!(s1 > 0.5)) throw std::domain_error("WeightParams: need s1 > 1/2");
    WeightParams w;
    w.sigma = sigma;
    w.s = s;
    w.s1 = s1;
    // j0 = largest integer strictly below sigma (j0 = 0 when sigma <= 1)
    double c = std::ceil(sigma);
    w.j0 = sigma <= 0.0 ? 0 : static_cast<int>(c == sigma ? sigma - 1.0 : c - 1.0);
    if (w.j0 < 0) w.j0 = 0;
    w.sigma_prime = sigma > 0.0 ? sigma - w.j0 : 0.0;
    return w;
  }
};

/// Lebesgue exponent p with conjugate p' and the interpolation order alpha = 1 - 2/p.
struct LebesgueExponent {
  double p = 2.0;
  double p_prime = 2.0;
  double alpha = 0.0;

  static LebesgueExponent from_p(double p) {
    if (p < 2.0) throw std::domain_error("LebesgueExponent: need p >= 2");
    LebesgueExponent e;
    e.p = p;
    e.alpha = std::isinf(p) ? 1.0 : 1.0 - 2.0 / p;
    e.p_prime = std::isinf(p) ? 1.0 : p / (p - 1.0);
    return e;
  }
};

enum class CutoffKind { ChiA, PsiAA, PhiWindow, EtaA };

/// Smooth spectral cutoffs; transitions are polynomial smoothsteps.
///
/// chi_a:      0 on (-inf, a], rises over [a, a+width], 1 beyond.
/// psi_aA:     chi_a(y) * (1 - Q(y/A)) with Q the cumulative of the unit bump on [1/2,1];
///             smooth, supported in [a, A], derivative bounds uniform in A.
/// phi_window: bump supported on [window_lo, window_hi], optionally normalized to unit integral.
/// eta_A:      Q(y/A).
struct CutoffSpec {
  CutoffKind kind = CutoffKind::ChiA;
  double a = 1.0;
  double A = 8.0;
  double smoothness_width = 0.5;
  int smoothstep_order = 5;  // polynomial order: 5 -> C^2 gluing, 7 -> C^3
  double window_lo = 0.5;
  double window_hi = 2.0;
  bool unit_integral = false;

  double operator()(double y) const;
  double support_lo() const;
  /// +inf for chi_a.
  double support_hi() const;
  /// smoothness breakpoints, used to align quadrature panels
  std::vector<double> breakpoints() const;

  static CutoffSpec chi(double a, double width = 0.5, int order = 5);
  static CutoffSpec psi(double a, double A, double width = 0.5, int order = 5);
  static CutoffSpec window(double lo, double hi, bool unit = false, int order = 5);
  static CutoffSpec eta(double A, int order = 5);
};

/// S_N on [0,1] glued to constants; polynomial order 2N+1.
double smoothstep(double u, int poly_order = 5);

enum class PotentialFamily { Zero, InversePower, Gaussian, CompactBump };

/// Short-range real potential with |V(x)| <= |c| <x>^{-2-delta0}.
struct PotentialSpec {
  PotentialFamily family = PotentialFamily::Zero;
  double amplitude = 0.0;  // c, may be negative
  double delta0 = 1.0;
  bool radial = true;
  int k0 = 0;              // largest integer strictly below delta0
  double delta0_prime = 1.0;
  double bump_radius = 1.0;  // compact_bump support radius

  double operator()(const Point3& p) const { return radial_value(norm(p)); }
  double radial_value(double r) const;
  /// radius beyond which V vanishes identically (inf for non-compact families)
  double support_radius() const;
  double bump_peak() const;
  bool is_zero() const { return family == PotentialFamily::Zero || amplitude == 0.0; }

  static PotentialSpec zero();
  static PotentialSpec inverse_power(double c, double delta0);
  static PotentialSpec gaussian(double c, double delta0 = 2.0);
  static PotentialSpec compact_bump(double c, double radius = 1.0, double delta0 = 2.0);
};

/// Exit-code-bearing error categories used by the CLI.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AccuracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NearResonanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wavedecay
