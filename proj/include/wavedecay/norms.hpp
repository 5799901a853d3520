#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "wavedecay/types.hpp"

namespace wavedecay {

/// Sampled kernel K(x_i, y_j) with the integration weights needed to compose
/// operators and to take quadrature-weighted norms.
struct OperatorKernel {
  std::vector<Point3> row_grid;
  std::vector<Point3> col_grid;
  Eigen::MatrixXcd values;
  Eigen::VectorXd row_weights;
  Eigen::VectorXd col_weights;

  void check() const;
};

/// (K1 o K2)(x, y) = int K1(x, z) K2(z, y) dz; the inner integral uses
/// K1.col_weights exactly once. Grids must match (K1.col == K2.row).
OperatorKernel compose(const OperatorKernel& k1, const OperatorKernel& k2);

/// Binary kernel-matrix file (row-major complex doubles with grid header).
void write_kernel_matrix(const OperatorKernel& k, const std::string& path);
OperatorKernel read_kernel_matrix(const std::string& path);

/// L1->Linf surrogate: max over sampled entries of |K|.
double kernel_sup_norm(const OperatorKernel& k);

/// L2->L2 norm: largest singular value of diag(sqrt(row_w)) K diag(sqrt(col_w)).
/// Dense SVD for small matrices, deterministic power iteration otherwise.
double l2_operator_norm(const OperatorKernel& k, double rtol = 1e-6);
double l2_operator_norm(const Eigen::MatrixXcd& values, const Eigen::VectorXd& row_w,
                        const Eigen::VectorXd& col_w, double rtol = 1e-6);

/// Riesz-Thorin endpoint combination norm22^{1-alpha} * norm1inf^{alpha}.
double interpolated_norm(double norm22, double norm1inf, const LebesgueExponent& p);

/// Duality-quotient witness: max over trial bump pairs (g, h) of
/// |<K g, h>| / (||g||_{p'} ||h||_{p'}); always a lower bound for the norm.
double test_pair_lower_bound(const OperatorKernel& k, const LebesgueExponent& p,
                             int trial_count, std::uint64_t seed = 12345);

enum class FitModel { PurePower, PowerLog };

/// Log-log least-squares decay fit. slope = d log v / d log t (negative for
/// decay). For PowerLog the model is log v = c - beta log t + gamma log log(1+t)
/// with slope = -beta and log_power = gamma; beta_constrained refits gamma with
/// beta pinned to the given value.
struct DecayFit {
  std::vector<double> abscissae;
  std::vector<double> values;
  FitModel model = FitModel::PurePower;
  double slope = 0.0;
  double log_power = 0.0;
  double residual = 0.0;
  double intercept = 0.0;
  double constrained_beta = 0.0;    // input beta for the constrained variant
  double constrained_gamma = 0.0;
  double constrained_residual = 0.0;
  bool inconclusive = false;  // all values at noise floor
};

DecayFit fit_decay(const std::vector<double>& abscissae, const std::vector<double>& values,
                   FitModel model = FitModel::PurePower, double constrained_beta = 0.0);

/// Endpoint norms of one operator family plus their interpolation at p.
struct WeightedNormReport {
  double norm_1_inf = 0.0;
  double norm_2_2 = 0.0;
  double norm_p_interp = 0.0;
  double lower_bound_p = 0.0;
  LebesgueExponent p;
};

WeightedNormReport make_norm_report(double norm22, double norm1inf,
                                    const LebesgueExponent& p, double lower_bound = 0.0);

}  // namespace wavedecay
