#include "wavedecay/lippmann_schwinger.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numbers>

#include "wavedecay/free_resolvent.hpp"
#include "wavedecay/quadrature.hpp"
#include "wavedecay/radial.hpp"

namespace wavedecay {

namespace {

// cell integral of the free kernel over the equal-volume ball:
// int_0^c e^{mu rho} rho drho / (4 pi) * 4 pi = (e^{mu c}(mu c - 1) + 1)/mu^2
Complex diag_cell_integral(double c, const ComplexFrequency& freq) {
  Complex mu = freq.unit() * freq.lambda - freq.epsilon;
  if (std::abs(mu) * c < 1e-6) return 0.5 * c * c;  // series limit
  return (std::exp(mu * c) * (mu * c - 1.0) + 1.0) / (mu * mu);
}

}  // namespace

Eigen::MatrixXcd free_kernel_matrix(const QuadratureMesh& mesh, const ComplexFrequency& freq,
                                    int k) {
  const auto n = static_cast<Eigen::Index>(mesh.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      Complex val = free_kernel(mesh.nodes[i], mesh.nodes[j], freq, k);
      m(i, j) = val;
      m(j, i) = val;  // kernel depends on |x - y| only
    }
    if (k == 0) {
      m(i, i) = diag_cell_integral(mesh.cell_radius[i], freq) / mesh.weights[i];
    } else {
      m(i, i) = free_kernel_radial(0.0, freq, k);
    }
  }
  return m;
}

ResolventHandle ResolventHandle::solve(const QuadratureMesh& mesh, const PotentialSpec& v,
                                       const ComplexFrequency& freq,
                                       double resonance_threshold) {
  ResolventHandle h;
  h.mesh_ = std::make_shared<QuadratureMesh>(mesh);
  h.v_ = v;
  h.freq_ = freq;
  const auto n = static_cast<Eigen::Index>(mesh.size());
  h.r0_mesh_ = free_kernel_matrix(mesh, freq, 0);
  h.vw_.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) h.vw_(j) = v(mesh.nodes[j]) * mesh.weights[j];

  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(n, n);
  a.noalias() += h.r0_mesh_ * h.vw_.cast<Complex>().asDiagonal();
  h.lu_ = Eigen::PartialPivLU<Eigen::MatrixXcd>(a);

  if (v.is_zero()) {
    h.smin_ = 1.0;
    h.r_mesh_ = h.r0_mesh_;
    return h;
  }

  // smallest singular value of (1 + R0 V) by inverse iteration on a^H a
  {
    Eigen::VectorXcd x = Eigen::VectorXcd::Ones(n).normalized();
    double s = 1.0;
    for (int it = 0; it < 30; ++it) {
      Eigen::VectorXcd y = h.lu_.solve(x);
      y = h.lu_.adjoint().solve(y);
      double ny = y.norm();
      if (ny == 0.0) break;
      s = 1.0 / std::sqrt(ny);
      Eigen::VectorXcd xn = y / ny;
      if ((xn - x).norm() < 1e-10) {
        x = xn;
        break;
      }
      x = xn;
    }
    h.smin_ = s;
    if (h.smin_ < resonance_threshold)
      throw NearResonanceError("solve_resolvent: 1 + R0 V nearly singular (sigma_min = " +
                               std::to_string(h.smin_) + ")");
  }

  h.r_mesh_ = h.lu_.solve(h.r0_mesh_);
  return h;
}

Eigen::VectorXcd ResolventHandle::column_at(const Point3& y) const {
  const auto n = static_cast<Eigen::Index>(mesh_->size());
  Eigen::VectorXcd b(n);
  for (Eigen::Index j = 0; j < n; ++j) b(j) = free_kernel(mesh_->nodes[j], y, freq_, 0);
  if (v_.is_zero()) return b;
  return lu_.solve(b);
}

Complex ResolventHandle::difference(const Point3& x, const Point3& y) const {
  if (v_.is_zero()) return 0.0;
  Eigen::VectorXcd ry = column_at(y);
  Complex acc = 0.0;
  const auto n = static_cast<Eigen::Index>(mesh_->size());
  for (Eigen::Index j = 0; j < n; ++j)
    acc += free_kernel(x, mesh_->nodes[j], freq_, 0) * vw_(j) * ry(j);
  return -acc;
}

Complex ResolventHandle::kernel(const Point3& x, const Point3& y) const {
  return free_kernel(x, y, freq_, 0) + difference(x, y);
}

Complex ResolventHandle::difference_born(const Point3& x, const Point3& y) const {
  if (v_.is_zero()) return 0.0;
  const auto n = static_cast<Eigen::Index>(mesh_->size());
  Eigen::VectorXcd cx(n), cy(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    cx(j) = free_kernel(x, mesh_->nodes[j], freq_, 0) * vw_(j);
    cy(j) = free_kernel(mesh_->nodes[j], y, freq_, 0);
  }
  Complex first = (cx.array() * cy.array()).sum();  // R0 V R0
  Eigen::VectorXcd mid = r_mesh_ * (vw_.cast<Complex>().asDiagonal() * cy);
  Complex second = (cx.array() * mid.array()).sum();
  return -first + second;
}

Eigen::MatrixXcd ResolventHandle::derivative_mesh(int k) const {
  if (k < 0) throw std::domain_error("derivative_mesh: k >= 0");
  // R^{(k)} = sum of c * w^p * R^m terms; differentiate termwise:
  // (c, p, m) -> (c p, p-1, m) + (2 c m, p+1, m+1)
  struct Term {
    double c;
    int p, m;
  };
  std::vector<Term> terms{{1.0, 0, 1}};
  for (int d = 0; d < k; ++d) {
    std::vector<Term> next;
    auto add = [&](double c, int p, int m) {
      for (auto& t : next)
        if (t.p == p && t.m == m) {
          t.c += c;
          return;
        }
      next.push_back({c, p, m});
    };
    for (const auto& t : terms) {
      if (t.p > 0) add(t.c * t.p, t.p - 1, t.m);
      add(2.0 * t.c * t.m, t.p + 1, t.m + 1);
    }
    terms = std::move(next);
  }
  const auto n = static_cast<Eigen::Index>(mesh_->size());
  Eigen::Map<const Eigen::VectorXd> wj(mesh_->weights.data(), n);
  Eigen::VectorXcd w = wj.cast<Complex>();
  const Complex wf = freq_.w();
  // powers R^m by repeated weighted composition
  int mmax = 1;
  for (const auto& t : terms) mmax = std::max(mmax, t.m);
  std::vector<Eigen::MatrixXcd> pow(mmax + 1);
  pow[1] = r_mesh_;
  for (int m = 2; m <= mmax; ++m) pow[m] = pow[m - 1] * (w.asDiagonal() * r_mesh_);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& t : terms) out += t.c * std::pow(wf, t.p) * pow[t.m];
  return out;
}

OperatorKernel resolvent_derivative(const ResolventHandle& handle, int k) {
  if (k < 1) throw std::domain_error("resolvent_derivative: k >= 1");
  OperatorKernel out;
  const auto& m = handle.mesh();
  out.row_grid = m.nodes;
  out.col_grid = m.nodes;
  out.row_weights = Eigen::Map<const Eigen::VectorXd>(m.weights.data(), m.size());
  out.col_weights = out.row_weights;
  out.values = handle.derivative_mesh(k);
  return out;
}

double weighted_mesh_norm(const Eigen::MatrixXcd& values, const QuadratureMesh& mesh, double a,
                          double b) {
  const auto n = static_cast<Eigen::Index>(mesh.size());
  Eigen::VectorXd wrow(n), wcol(n), qw(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double br = bracket(mesh.nodes[i]);
    wrow(i) = std::pow(br, -a);
    wcol(i) = std::pow(br, -b);
    qw(i) = mesh.weights[i];
  }
  Eigen::MatrixXcd weighted = wrow.cast<Complex>().asDiagonal() * values *
                              wcol.cast<Complex>().asDiagonal();
  return l2_operator_norm(weighted, qw, qw);
}

double weighted_resolvent_norm_free(const QuadratureMesh& mesh, double s, double s1, int k,
                                    const ComplexFrequency& freq) {
  Eigen::MatrixXcd m = free_kernel_matrix(mesh, freq, k);
  return weighted_mesh_norm(m, mesh, k + s, k + s1);
}

double weighted_resolvent_norm(const ResolventHandle& handle, double s, double s1, int k) {
  Eigen::MatrixXcd m = k == 0 ? handle.mesh_values() : handle.derivative_mesh(k);
  return weighted_mesh_norm(m, handle.mesh(), k + s, k + s1);
}

BirmanSchwingerReport birman_schwinger_check(const QuadratureMesh& mesh, const PotentialSpec& v,
                                             const std::vector<double>& lambdas, double epsilon,
                                             double s1, ResolventEngine engine) {
  for (double lam : lambdas)
    if (lam <= 0.0) throw std::domain_error("birman_schwinger_check: lambda must be > 0");
  bool radial = engine == ResolventEngine::Radial ||
                (engine == ResolventEngine::Auto && v.radial);
  BirmanSchwingerReport rep;
  const auto n = static_cast<Eigen::Index>(mesh.size());
  for (double lam : lambdas) {
    BirmanSchwingerRow row;
    row.lambda = lam;
    if (v.is_zero()) {
      row.k0_norm = 0.0;
      row.smallest_sv = 1.0;
      row.inv_norm = 1.0;
    } else if (radial) {
      radial_bs_norms(v, s1, lam, epsilon, mesh.r_trunc, mesh.n_r, row.k0_norm,
                      row.smallest_sv);
      row.inv_norm = 1.0 / row.smallest_sv;
    } else {
      ComplexFrequency freq(lam, epsilon, Branch::Plus);
      Eigen::MatrixXcd r0 = free_kernel_matrix(mesh, freq, 0);
      Eigen::VectorXd bw(n), qw(n), vv(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        bw(i) = std::pow(bracket(mesh.nodes[i]), s1);
        qw(i) = mesh.weights[i];
        vv(i) = v(mesh.nodes[i]);
      }
      Eigen::MatrixXcd k0 = (bw.array() * vv.array()).matrix().cast<Complex>().asDiagonal() *
                            r0 * bw.cwiseInverse().cast<Complex>().asDiagonal();
      row.k0_norm = l2_operator_norm(k0, qw, qw);
      Eigen::MatrixXcd sym = qw.array().sqrt().matrix().cast<Complex>().asDiagonal() * k0 *
                             qw.array().sqrt().matrix().cast<Complex>().asDiagonal();
      sym += Eigen::MatrixXcd::Identity(n, n);
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sym);
      row.smallest_sv = svd.singularValues().tail(1)(0);
      row.inv_norm = 1.0 / row.smallest_sv;
    }
    rep.rows.push_back(row);
  }
  if (!v.is_zero() && lambdas.size() >= 4) {
    std::vector<double> norms;
    for (const auto& r : rep.rows) norms.push_back(r.k0_norm);
    rep.fit = fit_decay(lambdas, norms, FitModel::PurePower);
  }
  return rep;
}

}  // namespace wavedecay
