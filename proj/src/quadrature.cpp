#include "wavedecay/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace wavedecay {

namespace {

// Newton iteration on Legendre polynomials; nodes symmetric about 0.
Rule1d compute_gl(int n) {
  Rule1d r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int l = 2; l <= n; ++l) {
        double p2 = ((2 * l - 1) * x * p1 - (l - 1) * p0) / l;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  return r;
}

}  // namespace

const Rule1d& gauss_legendre(int n) {
  static std::map<int, Rule1d> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
  return it->second;
}

Rule1d gauss_legendre_on(int n, double a, double b) {
  const Rule1d& base = gauss_legendre(n);
  Rule1d r;
  r.nodes.resize(n);
  r.weights.resize(n);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = mid + half * base.nodes[i];
    r.weights[i] = half * base.weights[i];
  }
  return r;
}

Rule1d composite_gl(double a, double b, int npanels, int deg) {
  Rule1d out;
  out.nodes.reserve(npanels * deg);
  out.weights.reserve(npanels * deg);
  for (int p = 0; p < npanels; ++p) {
    double lo = a + (b - a) * p / npanels;
    double hi = a + (b - a) * (p + 1) / npanels;
    Rule1d r = gauss_legendre_on(deg, lo, hi);
    out.nodes.insert(out.nodes.end(), r.nodes.begin(), r.nodes.end());
    out.weights.insert(out.weights.end(), r.weights.begin(), r.weights.end());
  }
  return out;
}

Rule1d panels_with_breakpoints(double a, double b, const std::vector<double>& brk,
                               double max_width, int deg) {
  std::vector<double> edges{a, b};
  for (double x : brk)
    if (x > a && x < b) edges.push_back(x);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](double u, double v) { return std::abs(u - v) < 1e-14; }),
              edges.end());
  Rule1d out;
  for (size_t k = 0; k + 1 < edges.size(); ++k) {
    double lo = edges[k], hi = edges[k + 1];
    int np = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_width)));
    Rule1d r = composite_gl(lo, hi, np, deg);
    out.nodes.insert(out.nodes.end(), r.nodes.begin(), r.nodes.end());
    out.weights.insert(out.weights.end(), r.weights.begin(), r.weights.end());
  }
  return out;
}

namespace {

double adapt_rec(const std::function<double(double)>& f, double a, double b, double whole,
                 double rtol, int depth, double scale) {
  double m = 0.5 * (a + b);
  auto quad = [&](double lo, double hi) {
    const Rule1d& g = gauss_legendre(10);
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double s = 0.0;
    for (size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * f(mid + half * g.nodes[i]);
    return half * s;
  };
  double left = quad(a, m), right = quad(m, b);
  double err = std::abs(left + right - whole);
  if (depth <= 0 || err <= rtol * std::max(scale, std::abs(left + right)))
    return left + right;
  return adapt_rec(f, a, m, left, rtol, depth - 1, scale) +
         adapt_rec(f, m, b, right, rtol, depth - 1, scale);
}

}  // namespace

double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double rtol, int max_depth) {
  const Rule1d& g = gauss_legendre(10);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double whole = 0.0;
  for (size_t i = 0; i < g.nodes.size(); ++i)
    whole += half * g.weights[i] * f(mid + half * g.nodes[i]);
  return adapt_rec(f, a, b, whole, rtol, max_depth, std::abs(whole));
}

// ---------------------------------------------------------------------------
// Lebedev rules via octahedral-symmetry orbits.

namespace {

void orbit_a1(std::vector<Point3>& p, std::vector<double>& w, double v) {
  const double a = 1.0;
  Point3 pts[] = {{a, 0, 0}, {-a, 0, 0}, {0, a, 0}, {0, -a, 0}, {0, 0, a}, {0, 0, -a}};
  for (auto& q : pts) {
    p.push_back(q);
    w.push_back(v);
  }
}

void orbit_a2(std::vector<Point3>& p, std::vector<double>& w, double v) {
  const double a = 1.0 / std::sqrt(2.0);
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      p.push_back({0, s1 * a, s2 * a});
      p.push_back({s1 * a, 0, s2 * a});
      p.push_back({s1 * a, s2 * a, 0});
      w.push_back(v);
      w.push_back(v);
      w.push_back(v);
    }
}

void orbit_a3(std::vector<Point3>& p, std::vector<double>& w, double v) {
  const double a = 1.0 / std::sqrt(3.0);
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1}) {
        p.push_back({s1 * a, s2 * a, s3 * a});
        w.push_back(v);
      }
}

// (a, a, b) type, 2a^2 + b^2 = 1
void orbit_llm(std::vector<Point3>& p, std::vector<double>& w, double a, double v) {
  const double b = std::sqrt(std::max(0.0, 1.0 - 2.0 * a * a));
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1}) {
        p.push_back({s1 * a, s2 * a, s3 * b});
        p.push_back({s1 * a, s3 * b, s2 * a});
        p.push_back({s3 * b, s1 * a, s2 * a});
        w.push_back(v);
        w.push_back(v);
        w.push_back(v);
      }
}

// (a, b, 0) type, a^2 + b^2 = 1
void orbit_pq0(std::vector<Point3>& p, std::vector<double>& w, double a, double v) {
  const double b = std::sqrt(std::max(0.0, 1.0 - a * a));
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      p.push_back({s1 * a, s2 * b, 0});
      p.push_back({s1 * b, s2 * a, 0});
      p.push_back({s1 * a, 0, s2 * b});
      p.push_back({s1 * b, 0, s2 * a});
      p.push_back({0, s1 * a, s2 * b});
      p.push_back({0, s1 * b, s2 * a});
      for (int k = 0; k < 6; ++k) w.push_back(v);
    }
}

SphericalRule make_rule(int n) {
  SphericalRule r;
  std::vector<Point3> p;
  std::vector<double> w;
  switch (n) {
    case 6:
      orbit_a1(p, w, 0.1666666666666667);
      r.degree = 3;
      break;
    case 14:
      orbit_a1(p, w, 0.6666666666666667e-1);
      orbit_a3(p, w, 0.7500000000000000e-1);
      r.degree = 5;
      break;
    case 26:
      orbit_a1(p, w, 0.4761904761904762e-1);
      orbit_a2(p, w, 0.3809523809523810e-1);
      orbit_a3(p, w, 0.3214285714285714e-1);
      r.degree = 7;
      break;
    case 38:
      orbit_a1(p, w, 0.9523809523809524e-2);
      orbit_a3(p, w, 0.3214285714285714e-1);
      orbit_pq0(p, w, 0.4597008433809831, 0.2857142857142857e-1);
      r.degree = 9;
      break;
    case 50:
      orbit_a1(p, w, 0.1269841269841270e-1);
      orbit_a2(p, w, 0.2257495590828924e-1);
      orbit_a3(p, w, 0.2109375000000000e-1);
      orbit_llm(p, w, 0.3015113445777636, 0.2017333553791887e-1);
      r.degree = 11;
      break;
    case 86:
      orbit_a1(p, w, 0.1154401154401154e-1);
      orbit_a3(p, w, 0.1194390908585628e-1);
      orbit_llm(p, w, 0.3696028464541502, 0.1111055571060340e-1);
      orbit_llm(p, w, 0.6943540066026664, 0.1187650129453714e-1);
      orbit_pq0(p, w, 0.3742430390903412, 0.1181230374690448e-1);
      r.degree = 15;
      break;
    case 110:
      orbit_a1(p, w, 0.3828270494937162e-2);
      orbit_a3(p, w, 0.9793737512487512e-2);
      orbit_llm(p, w, 0.1851156353447362, 0.8211737283191111e-2);
      orbit_llm(p, w, 0.6904210483822922, 0.9942814891178103e-2);
      orbit_llm(p, w, 0.3956894730559419, 0.9595471336070963e-2);
      orbit_pq0(p, w, 0.4783690288121502, 0.9694996361663028e-2);
      r.degree = 17;
      break;
    default:
      throw std::invalid_argument("unsupported spherical rule size " + std::to_string(n));
  }
  const double fourpi = 4.0 * std::numbers::pi;
  r.dirs = std::move(p);
  r.weights.resize(w.size());
  for (size_t i = 0; i < w.size(); ++i) r.weights[i] = w[i] * fourpi;
  if (static_cast<int>(r.dirs.size()) != n)
    throw std::logic_error("lebedev orbit count mismatch");
  return r;
}

}  // namespace

bool lebedev_supported(int n) {
  switch (n) {
    case 6:
    case 14:
    case 26:
    case 38:
    case 50:
    case 86:
    case 110:
      return true;
    default:
      return false;
  }
}

const SphericalRule& lebedev(int n) {
  static std::map<int, SphericalRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
  return it->second;
}

void legendre_all(int lmax, double x, std::vector<double>& out) {
  out.resize(lmax + 1);
  out[0] = 1.0;
  if (lmax == 0) return;
  out[1] = x;
  for (int l = 1; l < lmax; ++l)
    out[l + 1] = ((2 * l + 1) * x * out[l] - l * out[l - 1]) / (l + 1);
}

}  // namespace wavedecay
