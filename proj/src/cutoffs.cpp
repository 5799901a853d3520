#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wavedecay/quadrature.hpp"
#include "wavedecay/types.hpp"

namespace wavedecay {

double smoothstep(double u, int poly_order) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  switch (poly_order) {
    case 3:
      return u * u * (3.0 - 2.0 * u);
    case 5:
      return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
    case 7:
      return u * u * u * u * (35.0 + u * (-84.0 + u * (70.0 - 20.0 * u)));
    case 9:
      return u * u * u * u * u *
             (126.0 + u * (-420.0 + u * (540.0 + u * (-315.0 + 70.0 * u))));
    default:
      throw std::invalid_argument("smoothstep: unsupported polynomial order");
  }
}

namespace {

// unit-integral bump on [1/2, 1] (rise/fall pair of smoothsteps) and its cumulative
double base_bump(double u, int order) {
  const double lo = 0.5, hi = 1.0;
  if (u <= lo || u >= hi) return 0.0;
  double t = 2.0 * (u - lo) / (hi - lo);
  return smoothstep(t, order) * smoothstep(2.0 - t, order);
}

double base_bump_mass(int order) {
  static double cache[16] = {0};
  if (cache[order] == 0.0) {
    Rule1d r = composite_gl(0.5, 1.0, 16, 8);
    double s = 0.0;
    for (size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * base_bump(r.nodes[i], order);
    cache[order] = s;
  }
  return cache[order];
}

// Q(v) = int_0^v of the unit bump; realizes eta_A(y) = (1/A) int_0^y phi(tau/A) dtau
double bump_cumulative(double v, int order) {
  if (v <= 0.5) return 0.0;
  if (v >= 1.0) return 1.0;
  Rule1d r = composite_gl(0.5, v, 8, 8);
  double s = 0.0;
  for (size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * base_bump(r.nodes[i], order);
  return s / base_bump_mass(order);
}

}  // namespace

double CutoffSpec::operator()(double y) const {
  switch (kind) {
    case CutoffKind::ChiA:
      return smoothstep((y - a) / smoothness_width, smoothstep_order);
    case CutoffKind::PsiAA:
      return smoothstep((y - a) / smoothness_width, smoothstep_order) *
             (1.0 - bump_cumulative(y / A, smoothstep_order));
    case CutoffKind::EtaA:
      return bump_cumulative(y / A, smoothstep_order);
    case CutoffKind::PhiWindow: {
      if (y <= window_lo || y >= window_hi) return 0.0;
      double t = 2.0 * (y - window_lo) / (window_hi - window_lo);
      double v = smoothstep(t, smoothstep_order) * smoothstep(2.0 - t, smoothstep_order);
      if (unit_integral) {
        // normalize once per (lo,hi,order); mass scales linearly with width
        double m = base_bump_mass(smoothstep_order) * (window_hi - window_lo) / 0.5;
        return v / m;
      }
      return v;
    }
  }
  return 0.0;
}

double CutoffSpec::support_lo() const {
  switch (kind) {
    case CutoffKind::ChiA:
    case CutoffKind::PsiAA:
      return a;
    case CutoffKind::PhiWindow:
      return window_lo;
    case CutoffKind::EtaA:
      return 0.5 * A;
  }
  return 0.0;
}

double CutoffSpec::support_hi() const {
  switch (kind) {
    case CutoffKind::ChiA:
      return std::numeric_limits<double>::infinity();
    case CutoffKind::PsiAA:
      return A;
    case CutoffKind::PhiWindow:
      return window_hi;
    case CutoffKind::EtaA:
      return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

std::vector<double> CutoffSpec::breakpoints() const {
  switch (kind) {
    case CutoffKind::ChiA:
      return {a, a + smoothness_width};
    case CutoffKind::PsiAA:
      return {a, a + smoothness_width, 0.5 * A, 0.75 * A, A};
    case CutoffKind::PhiWindow:
      return {window_lo, 0.5 * (window_lo + window_hi), window_hi};
    case CutoffKind::EtaA:
      return {0.5 * A, 0.75 * A, A};
  }
  return {};
}

CutoffSpec CutoffSpec::chi(double a, double width, int order) {
  CutoffSpec c;
  c.kind = CutoffKind::ChiA;
  c.a = a;
  c.smoothness_width = width;
  c.smoothstep_order = order;
  return c;
}

CutoffSpec CutoffSpec::psi(double a, double A, double width, int order) {
  if (!(A > 2.0 * (a + width)))
    throw std::domain_error("CutoffSpec::psi: need A >> a (A > 2(a+width))");
  CutoffSpec c;
  c.kind = CutoffKind::PsiAA;
  c.a = a;
  c.A = A;
  c.smoothness_width = width;
  c.smoothstep_order = order;
  return c;
}

CutoffSpec CutoffSpec::window(double lo, double hi, bool unit, int order) {
  if (!(hi > lo) || lo <= 0.0) throw std::domain_error("CutoffSpec::window: bad support");
  CutoffSpec c;
  c.kind = CutoffKind::PhiWindow;
  c.window_lo = lo;
  c.window_hi = hi;
  c.unit_integral = unit;
  c.smoothstep_order = order;
  return c;
}

CutoffSpec CutoffSpec::eta(double A, int order) {
  CutoffSpec c;
  c.kind = CutoffKind::EtaA;
  c.A = A;
  c.smoothstep_order = order;
  return c;
}

}  // namespace wavedecay
