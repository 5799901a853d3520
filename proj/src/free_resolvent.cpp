#include "wavedecay/free_resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wavedecay/quadrature.hpp"

namespace wavedecay {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;
}  // namespace

Complex free_kernel_radial(double r, const ComplexFrequency& freq, int k) {
  if (k < 0) throw std::domain_error("free_kernel: derivative order k must be >= 0");
  const Complex mu = freq.unit() * freq.lambda - freq.epsilon;  // (+-i lambda - eps)
  if (k == 0) {
    if (r <= 0.0)
      throw std::domain_error("free_kernel: diagonal evaluation is singular for k = 0");
    return std::exp(mu * r) / (kFourPi * r);
  }
  // (+-i)^k / (4 pi) * r^{k-1} e^{mu r};  r^0 = 1 on the diagonal
  Complex ik = std::pow(freq.unit(), k);
  double rp = k == 1 ? 1.0 : std::pow(r, k - 1);
  return ik / kFourPi * rp * std::exp(mu * r);
}

Complex free_kernel(const Point3& x, const Point3& y, const ComplexFrequency& freq, int k) {
  return free_kernel_radial(dist(x, y), freq, k);
}

// ---------------------------------------------------------------------------
// Bound integrals A_s and B_{s,sigma,k}.
//
// Both have the angular closed form via q = |x - y|:
//   int_{S^2} f(|x - rho w|) dw = (2 pi / (d rho)) int_{|d-rho|}^{d+rho} q f(q) dq,  d = |x|.

namespace {

// int_a^b q^{m} e^{-c q} dq, closed form
double exp_poly_integral(int m, double c, double a, double b) {
  if (c < 1e-14) return (std::pow(b, m + 1) - std::pow(a, m + 1)) / (m + 1);
  // F(q) = -e^{-cq} sum_{i=0..m} m!/(m-i)! q^{m-i} / c^{i+1}
  auto F = [&](double q) {
    double coef = 1.0, sum = 0.0;
    for (int i = 0; i <= m; ++i) {
      sum += coef * std::pow(q, m - i) / std::pow(c, i + 1);
      coef *= (m - i);
    }
    return -std::exp(-c * q) * sum;
  };
  return F(b) - F(a);
}

// exact angular integral of |x-y|^{2k} e^{-2 eps |x-y|} over directions of y
double angular_exact(double d, double rho, double eps, int k) {
  const double c = 2.0 * eps;
  if (d * rho < 1e-12) {
    double q = std::max(d, rho);
    return kFourPi * std::pow(q, 2 * k) * std::exp(-c * q);
  }
  return 2.0 * kPi / (d * rho) * exp_poly_integral(2 * k + 1, c, std::abs(d - rho), d + rho);
}

// Gauss rule in u = cos(theta); size grows with the exponential variation scale
double angular_product(double d, double rho, double eps, int k) {
  int nu = 24 + 6 * static_cast<int>(std::ceil(2.0 * eps * std::min(d, rho)));
  const Rule1d& g = gauss_legendre(std::min(nu, 220));
  double acc = 0.0;
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    double u = g.nodes[i];
    double q = std::sqrt(std::max(0.0, d * d + rho * rho - 2.0 * d * rho * u));
    acc += g.weights[i] * std::pow(q, 2 * k) * std::exp(-2.0 * eps * q);
  }
  return 2.0 * kPi * acc;
}

double rho_max_for(double d, double eps, double s) {
  if (eps > 0.0) return d + 45.0 / (2.0 * eps) + 10.0;
  // eps = 0, s > 1/2: integrand ~ rho^{-2s}; tail(R) ~ R^{1-2s}/(2s-1)
  return std::pow(1e10 * (2.0 * s - 1.0), 1.0 / (2.0 * s - 1.0)) + d + 10.0;
}

// dense panels near the origin and around rho = d, geometric growth beyond
std::vector<double> graded_edges(double hi, double d) {
  std::vector<double> e;
  double dense_hi = std::min(hi, std::max(6.0, 2.0 * d + 2.0));
  int nd = std::max(24, static_cast<int>(dense_hi));
  for (int i = 0; i <= nd; ++i) e.push_back(dense_hi * i / nd);
  double p = dense_hi;
  while (p < hi) {
    p = std::min(hi, 1.25 * p);
    e.push_back(p);
  }
  return e;
}

double bound_integral_impl(double s, double sigma, int k, double eps, double d,
                           bool product_rule) {
  if (eps < 0.0) throw std::domain_error("bound integral: epsilon must be >= 0");
  if (eps == 0.0 && s <= 0.5)
    throw std::domain_error("bound integral diverges for eps <= 0 and s <= 1/2");
  const double hi = rho_max_for(d, eps, s);
  auto angular = [&](double rho) {
    return product_rule ? angular_product(d, rho, eps, k) : angular_exact(d, rho, eps, k);
  };
  auto frad = [&](double rho) {
    return rho * rho * std::pow(1.0 + rho * rho, -(s + k + 1.0)) * angular(rho);
  };
  double integral = 0.0;
  if (product_rule) {
    std::vector<double> edges = graded_edges(hi, d);
    double prev = 0.0;
    int deg = 6;
    for (int iter = 0; iter < 4; ++iter) {
      integral = 0.0;
      for (size_t i = 0; i + 1 < edges.size(); ++i) {
        Rule1d r = gauss_legendre_on(deg, edges[i], edges[i + 1]);
        for (size_t j = 0; j < r.nodes.size(); ++j)
          integral += r.weights[j] * frad(r.nodes[j]);
      }
      if (iter > 0 && std::abs(integral - prev) < 5e-5 * std::abs(integral)) break;
      prev = integral;
      deg += 4;
    }
  } else {
    integral = adaptive_integrate(frad, 0.0, hi, 1e-8, 44);
  }
  double pref = std::pow(1.0 + d * d, -(sigma + k - 1.0));
  return pref * integral;
}

}  // namespace

double bound_integral_A(double s, double epsilon, const Point3& x) {
  // A_s has no bracket prefactor: choose (sigma, k) so the prefactor is 1
  return bound_integral_impl(s, 1.0, 0, epsilon, norm(x), true);
}

double bound_integral_A_oracle(double s, double epsilon, const Point3& x, double) {
  return bound_integral_impl(s, 1.0, 0, epsilon, norm(x), false);
}

double bound_integral_B(double s, double sigma, int k, double epsilon, const Point3& x) {
  if (k < 0) throw std::domain_error("bound_integral_B: k >= 0");
  return bound_integral_impl(s, sigma, k, epsilon, norm(x), true);
}

double bound_integral_B_oracle(double s, double sigma, int k, double epsilon, const Point3& x,
                               double) {
  if (k < 0) throw std::domain_error("bound_integral_B: k >= 0");
  return bound_integral_impl(s, sigma, k, epsilon, norm(x), false);
}

namespace {

double sup_over_radii(const std::function<double(double)>& f, double eps) {
  double best = f(0.0);
  for (double d = 0.5; d <= 2.5 / eps; d *= 1.5) best = std::max(best, f(d));
  return best;
}

}  // namespace

double bound_integral_A_sup(double s, double epsilon) {
  return sup_over_radii(
      [&](double d) { return bound_integral_A(s, epsilon, {d, 0.0, 0.0}); }, epsilon);
}

double bound_integral_B_sup(double s, double sigma, int k, double epsilon) {
  return sup_over_radii(
      [&](double d) { return bound_integral_B(s, sigma, k, epsilon, {d, 0.0, 0.0}); }, epsilon);
}

// ---------------------------------------------------------------------------
// Oscillatory half-line integrals and the free propagator kernel.

namespace {

// asymptotic tail int_P^inf e^{i s rho} rho^beta drho, |s| P large, beta < 1
Complex tail_series(double s, double beta, double P, int terms = 16) {
  const Complex is(0.0, s);
  Complex pref = -std::exp(Complex(0.0, s * P)) / is;
  Complex coef = 1.0;
  Complex sum = 0.0;
  for (int m = 0; m < terms; ++m) {
    sum += pref * coef * std::pow(P, beta - m);
    coef *= -(beta - m) / is;
  }
  return sum;
}

Complex panel_osc(const std::function<double(double)>& amp, double s, double lo, double hi,
                  double max_width, int deg = 8) {
  int np = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_width)));
  Complex acc = 0.0;
  for (int p = 0; p < np; ++p) {
    double a = lo + (hi - lo) * p / np;
    double b = lo + (hi - lo) * (p + 1) / np;
    Rule1d r = gauss_legendre_on(deg, a, b);
    for (size_t i = 0; i < r.nodes.size(); ++i)
      acc += r.weights[i] * amp(r.nodes[i]) * std::exp(Complex(0.0, s * r.nodes[i]));
  }
  return acc;
}

}  // namespace

Complex oscillatory_halfline(double s, double beta, const CutoffSpec& cutoff,
                             double panel_scale) {
  if (std::abs(s) < 1e-9) s = s >= 0.0 ? 1e-9 : -1e-9;
  const double osc_width = panel_scale * kPi / (2.0 * std::abs(s) + 1.0);
  auto amp = [&](double rho) { return std::pow(rho, beta) * cutoff(rho); };

  const double lo = cutoff.support_lo();
  const double hi = cutoff.support_hi();
  if (std::isfinite(hi)) {
    // compactly supported: aligned panels only
    std::vector<double> brk = cutoff.breakpoints();
    double width = std::min(osc_width, (hi - lo) / 6.0);
    Rule1d rule = panels_with_breakpoints(lo, hi, brk, width, 8);
    Complex acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
      acc += rule.weights[i] * amp(rule.nodes[i]) * std::exp(Complex(0.0, s * rule.nodes[i]));
    return acc;
  }

  // chi_a: transition head + flat extension + asymptotic tail; needs beta < 1
  if (beta >= 1.0)
    throw std::domain_error(
        "oscillatory_halfline: chi_a cutoff requires beta < 1 (alpha > 0); use psi_aA");
  const double head_hi = cutoff.a + cutoff.smoothness_width;
  Complex acc = panel_osc(amp, s, lo, head_hi, std::min(osc_width, cutoff.smoothness_width / 4.0));
  // beyond the transition the cutoff is identically 1
  const double X0 = 80.0;
  double P = head_hi;
  double target = std::max(P, X0 / std::abs(s));
  auto amp_flat = [&](double rho) { return std::pow(rho, beta); };
  while (P < target) {
    double step = std::min({std::max(0.5 * P, 0.1), osc_width * 4.0, target - P});
    acc += panel_osc(amp_flat, s, P, P + step, osc_width);
    P += step;
  }
  acc += tail_series(s, beta, P);
  return acc;
}

Complex free_propagator_kernel(double r, double t, double alpha, const CutoffSpec& cutoff,
                               const PropagatorAccuracy& acc) {
  if (alpha < 0.0 || alpha > 1.0)
    throw std::domain_error("free_propagator_kernel: alpha must lie in [0,1]");
  if (cutoff.kind != CutoffKind::ChiA && cutoff.kind != CutoffKind::PsiAA)
    throw std::domain_error("free_propagator_kernel: cutoff must be chi_a or psi_aA");
  if (t == 0.0 && cutoff.kind == CutoffKind::ChiA && alpha < 1.0)
    throw std::domain_error("free_propagator_kernel: need t != 0 for chi_a");
  if (cutoff.kind == CutoffKind::ChiA && alpha <= 0.5)
    throw std::domain_error(
        "free_propagator_kernel: chi_a supported for alpha > 1/2 only; use psi_aA");
  if (acc.panel_scale > 2.0)
    throw AccuracyError("free_propagator_kernel: panel_scale too coarse to resolve oscillation");

  const double beta = 1.0 - 2.0 * alpha;
  const double scale = 1.0 / (2.0 * kPi * kPi);
  if (r < 1e-4) {
    // sin(rho r)/r -> rho
    return scale * oscillatory_halfline(t, beta + 1.0, cutoff, acc.panel_scale);
  }
  Complex ip = oscillatory_halfline(t + r, beta, cutoff, acc.panel_scale);
  Complex im = oscillatory_halfline(t - r, beta, cutoff, acc.panel_scale);
  return scale * (ip - im) / (Complex(0.0, 2.0) * r);
}

Complex free_propagator_kernel(const Point3& x, const Point3& y, double t, double alpha,
                               const CutoffSpec& cutoff, const PropagatorAccuracy& acc) {
  return free_propagator_kernel(dist(x, y), t, alpha, cutoff, acc);
}

double free_propagator_weighted_sup(double t, double alpha, double sigma,
                                    const CutoffSpec& cutoff) {
  const double ta = std::abs(t);
  std::vector<double> rg;
  for (double r = 0.25; r < std::min(4.0 * ta, ta + 6.0); r += 0.5) rg.push_back(r);
  for (double off : {-4.0, -3.0, -2.0, -1.5, -1.0, -0.75, -0.5, -0.25, 0.25, 0.5, 0.75, 1.0,
                     1.5, 2.0, 3.0, 4.0}) {
    double r = ta + off;
    if (r > 0.0) rg.push_back(r);
  }
  double best = 0.0;
  for (double r : rg) {
    double w = std::pow(bracket(r), -sigma * alpha);
    best = std::max(best, std::abs(free_propagator_kernel(r, t, alpha, cutoff)) * w);
  }
  return best;
}

DecayFit appendix_decay_fit(const std::vector<double>& t_list, double alpha,
                            const CutoffSpec& cutoff, double region_factor) {
  if (t_list.size() < 4) throw std::invalid_argument("appendix_decay_fit: need >= 4 times");
  for (double t : t_list)
    if (t < 1.0) throw std::domain_error("appendix_decay_fit: times must be >= 1");
  std::vector<double> sups;
  for (double t : t_list) {
    // |x|,|y| <= region_factor * t  =>  r = |x-y| <= 2 region_factor t
    double rmax = 2.0 * region_factor * t;
    double best = 0.0;
    for (int i = 0; i < 60; ++i) {
      double r = 0.05 + (rmax - 0.05) * i / 59.0;
      best = std::max(best, std::abs(free_propagator_kernel(r, t, alpha, cutoff)));
    }
    sups.push_back(best);
  }
  return fit_decay(t_list, sups, FitModel::PurePower);
}

}  // namespace wavedecay
