#include "wavedecay/norms.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace wavedecay {

void OperatorKernel::check() const {
  if (values.rows() != static_cast<Eigen::Index>(row_grid.size()) ||
      values.cols() != static_cast<Eigen::Index>(col_grid.size()))
    throw std::invalid_argument("OperatorKernel: values shape does not match grids");
  if (row_weights.size() != values.rows() || col_weights.size() != values.cols())
    throw std::invalid_argument("OperatorKernel: weight sizes do not match grids");
}

OperatorKernel compose(const OperatorKernel& k1, const OperatorKernel& k2) {
  k1.check();
  k2.check();
  if (k1.col_grid.size() != k2.row_grid.size())
    throw std::runtime_error("compose: inner grids differ");
  OperatorKernel out;
  out.row_grid = k1.row_grid;
  out.col_grid = k2.col_grid;
  out.row_weights = k1.row_weights;
  out.col_weights = k2.col_weights;
  out.values = k1.values * (k1.col_weights.cast<Complex>().asDiagonal() * k2.values);
  return out;
}

double kernel_sup_norm(const OperatorKernel& k) {
  k.check();
  if (k.values.size() == 0) throw std::invalid_argument("kernel_sup_norm: empty kernel");
  return k.values.cwiseAbs().maxCoeff();
}

double l2_operator_norm(const Eigen::MatrixXcd& values, const Eigen::VectorXd& row_w,
                        const Eigen::VectorXd& col_w, double rtol) {
  if ((row_w.array() < 0).any() || (col_w.array() < 0).any())
    throw std::invalid_argument("l2_operator_norm: negative quadrature weights");
  Eigen::VectorXcd rw = row_w.array().sqrt().matrix().cast<Complex>();
  Eigen::VectorXcd cw = col_w.array().sqrt().matrix().cast<Complex>();
  Eigen::MatrixXcd m = rw.asDiagonal() * values * cw.asDiagonal();
  if (m.rows() <= 220 && m.cols() <= 220) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
  }
  // power iteration on m^H m, deterministic start
  std::mt19937_64 rng(0x5eed5eedULL);
  std::normal_distribution<double> nd;
  Eigen::VectorXcd v(m.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(nd(rng), nd(rng));
  v.normalize();
  double s_prev = 0.0;
  for (int it = 0; it < 500; ++it) {
    Eigen::VectorXcd u = m * v;
    Eigen::VectorXcd v2 = m.adjoint() * u;
    double nv = v2.norm();
    if (nv == 0.0) return 0.0;
    double s = std::sqrt(nv);
    v = v2 / nv;
    if (std::abs(s - s_prev) <= rtol * s) return s;
    s_prev = s;
  }
  throw AccuracyError("l2_operator_norm: power iteration did not converge");
}

double l2_operator_norm(const OperatorKernel& k, double rtol) {
  k.check();
  return l2_operator_norm(k.values, k.row_weights, k.col_weights, rtol);
}

double interpolated_norm(double norm22, double norm1inf, const LebesgueExponent& p) {
  return std::pow(norm22, 1.0 - p.alpha) * std::pow(norm1inf, p.alpha);
}

namespace {

double lp_norm(const Eigen::VectorXd& f, const Eigen::VectorXd& w, double p) {
  if (std::isinf(p)) return f.cwiseAbs().maxCoeff();
  double s = (w.array() * f.array().abs().pow(p)).sum();
  return std::pow(s, 1.0 / p);
}

}  // namespace

double test_pair_lower_bound(const OperatorKernel& k, const LebesgueExponent& p,
                             int trial_count, std::uint64_t seed) {
  k.check();
  if (trial_count < 1) throw std::invalid_argument("test_pair_lower_bound: trial_count >= 1");
  const auto n = k.col_grid.size();
  const auto m = k.row_grid.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick_col(0, n - 1), pick_row(0, m - 1);
  std::uniform_real_distribution<double> width(0.3, 3.0);

  auto quotient = [&](const Eigen::VectorXd& g, const Eigen::VectorXd& h) {
    double ng = lp_norm(g, k.col_weights, p.p_prime);
    double nh = lp_norm(h, k.row_weights, p.p_prime);
    if (ng == 0.0 || nh == 0.0) return 0.0;
    Eigen::VectorXcd kg =
        k.values * (k.col_weights.array() * g.array()).matrix().cast<Complex>();
    Complex val = (k.row_weights.array() * h.array()).matrix().cast<Complex>().dot(kg);
    return std::abs(val) / (ng * nh);
  };

  double best = 0.0;
  // aligned trials from the dominant singular pair
  {
    Eigen::VectorXcd rw = k.row_weights.array().sqrt().matrix().cast<Complex>();
    Eigen::VectorXcd cw = k.col_weights.array().sqrt().matrix().cast<Complex>();
    Eigen::MatrixXcd wkm = rw.asDiagonal() * k.values * cw.asDiagonal();
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(n).normalized();
    for (int it = 0; it < 60; ++it) {
      Eigen::VectorXcd u = wkm * v;
      v = (wkm.adjoint() * u).normalized();
    }
    Eigen::VectorXcd u = (wkm * v).normalized();
    Eigen::VectorXd g = (v.cwiseAbs().array() / k.col_weights.array().sqrt()).matrix();
    Eigen::VectorXd h = (u.cwiseAbs().array() / k.row_weights.array().sqrt()).matrix();
    best = std::max(best, quotient(g, h));
  }
  for (int t = 0; t < trial_count; ++t) {
    size_t jc = pick_col(rng), jr = pick_row(rng);
    double wg = width(rng), wh = width(rng);
    Eigen::VectorXd g(n), h(m);
    for (size_t j = 0; j < n; ++j)
      g(j) = std::exp(-dist(k.col_grid[j], k.col_grid[jc]) * dist(k.col_grid[j], k.col_grid[jc]) /
                      (wg * wg));
    for (size_t i = 0; i < m; ++i)
      h(i) = std::exp(-dist(k.row_grid[i], k.row_grid[jr]) * dist(k.row_grid[i], k.row_grid[jr]) /
                      (wh * wh));
    best = std::max(best, quotient(g, h));
  }
  return best;
}

DecayFit fit_decay(const std::vector<double>& abscissae, const std::vector<double>& values,
                   FitModel model, double constrained_beta) {
  if (abscissae.size() != values.size())
    throw std::invalid_argument("fit_decay: size mismatch");
  const size_t n = abscissae.size();
  if (n < 4) throw std::invalid_argument("fit_decay: need at least 4 samples");
  auto [mn, mx] = std::minmax_element(abscissae.begin(), abscissae.end());
  if (*mx < 10.0 * *mn)
    throw std::invalid_argument("fit_decay: abscissae must span at least one decade");

  DecayFit fit;
  fit.abscissae = abscissae;
  fit.values = values;
  fit.model = model;

  double floor = 0.0;
  for (double v : values) floor = std::max(floor, std::abs(v));
  if (floor < 1e-300) {
    fit.inconclusive = true;
    return fit;
  }
  for (double v : values)
    if (v <= 0.0) throw std::invalid_argument("fit_decay: values must be positive");

  Eigen::VectorXd y(n);
  for (size_t i = 0; i < n; ++i) y(i) = std::log(values[i]);
  const int ncol = model == FitModel::PowerLog ? 3 : 2;
  Eigen::MatrixXd X(n, ncol);
  for (size_t i = 0; i < n; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = std::log(abscissae[i]);
    if (ncol == 3) X(i, 2) = std::log(std::log1p(abscissae[i]));
  }
  Eigen::VectorXd c = X.colPivHouseholderQr().solve(y);
  if (X.colPivHouseholderQr().rank() < ncol)
    throw std::runtime_error("fit_decay: rank-deficient design");
  fit.intercept = c(0);
  fit.slope = c(1);
  if (ncol == 3) fit.log_power = c(2);
  fit.residual = std::sqrt((X * c - y).squaredNorm() / n);

  if (model == FitModel::PowerLog) {
    // constrained variant: beta fixed, fit (intercept, gamma)
    fit.constrained_beta = constrained_beta;
    Eigen::MatrixXd Xc(n, 2);
    Eigen::VectorXd yc(n);
    for (size_t i = 0; i < n; ++i) {
      Xc(i, 0) = 1.0;
      Xc(i, 1) = std::log(std::log1p(abscissae[i]));
      yc(i) = y(i) + constrained_beta * std::log(abscissae[i]);
    }
    Eigen::VectorXd cc = Xc.colPivHouseholderQr().solve(yc);
    fit.constrained_gamma = cc(1);
    fit.constrained_residual = std::sqrt((Xc * cc - yc).squaredNorm() / n);
  }
  return fit;
}

WeightedNormReport make_norm_report(double norm22, double norm1inf,
                                    const LebesgueExponent& p, double lower_bound) {
  WeightedNormReport r;
  r.norm_2_2 = norm22;
  r.norm_1_inf = norm1inf;
  r.p = p;
  r.norm_p_interp = interpolated_norm(norm22, norm1inf, p);
  r.lower_bound_p = lower_bound;
  return r;
}

}  // namespace wavedecay
