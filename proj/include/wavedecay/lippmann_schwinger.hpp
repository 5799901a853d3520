#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "wavedecay/mesh.hpp"
#include "wavedecay/norms.hpp"
#include "wavedecay/types.hpp"

namespace wavedecay {

/// Effective free-kernel matrix on the mesh: off-diagonal entries are exact
/// kernel values, the diagonal carries the cell-averaged singular integral so
/// that values * quadrature weight reproduces the local integral.
Eigen::MatrixXcd free_kernel_matrix(const QuadratureMesh& mesh, const ComplexFrequency& freq,
                                    int k = 0);

/// Discretized resolvent R(lambda +- i eps) = (G - w^2)^{-1} on a mesh via
/// (1 + R0 V) R = R0. Exposes on-mesh values, off-mesh evaluation, and
/// lambda-derivatives by the analytic composition recursion.
class ResolventHandle {
 public:
  static ResolventHandle solve(const QuadratureMesh& mesh, const PotentialSpec& v,
                               const ComplexFrequency& freq,
                               double resonance_threshold = 1e-8);

  const QuadratureMesh& mesh() const { return *mesh_; }
  const PotentialSpec& potential() const { return v_; }
  const ComplexFrequency& freq() const { return freq_; }

  /// R sampled on the mesh (effective values; diagonal is cell-averaged).
  const Eigen::MatrixXcd& mesh_values() const { return r_mesh_; }

  /// Off-mesh evaluation R(x, y) = R0(x, y) - int R0(x, z) V(z) R(z, y) dz;
  /// outer factors exact, inner integral by mesh quadrature.
  Complex kernel(const Point3& x, const Point3& y) const;

  /// (R - R0)(x, y), continuous across the diagonal.
  Complex difference(const Point3& x, const Point3& y) const;

  /// Born-expansion route -R0 V R0 + R0 V R V R0 (cross-check path).
  Complex difference_born(const Point3& x, const Point3& y) const;

  /// Effective mesh matrix of R^{(k)} = d^k R / d lambda^k via the recursion
  /// dR/dlambda = 2 w R o R (compositions by mesh quadrature). k = 0 gives R.
  Eigen::MatrixXcd derivative_mesh(int k) const;

  /// column vector R(z_j, y) for all mesh nodes z_j (solved on demand).
  Eigen::VectorXcd column_at(const Point3& y) const;

  /// smallest singular value of the discretized 1 + R0 V
  double smallest_singular_value() const { return smin_; }

 private:
  std::shared_ptr<const QuadratureMesh> mesh_;
  PotentialSpec v_;
  ComplexFrequency freq_;
  Eigen::MatrixXcd r0_mesh_;               // effective free matrix
  Eigen::MatrixXcd r_mesh_;                // effective perturbed matrix
  Eigen::VectorXd vw_;                     // V(z_j) * w_j
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;  // of (1 + R0 V W)
  double smin_ = 1.0;
};

/// Sampled kernel of R^{(k)} as an OperatorKernel on the mesh.
OperatorKernel resolvent_derivative(const ResolventHandle& handle, int k);

/// ||<x>^{-a} K <x>^{-b}||_{L2->L2} of an effective mesh matrix.
double weighted_mesh_norm(const Eigen::MatrixXcd& values, const QuadratureMesh& mesh, double a,
                          double b);

/// Weighted norm of the k-th derivative of the free (V = 0) resolvent:
/// a = k + s, b = k + s1.
double weighted_resolvent_norm_free(const QuadratureMesh& mesh, double s, double s1, int k,
                                    const ComplexFrequency& freq);

/// Same for a solved handle.
double weighted_resolvent_norm(const ResolventHandle& handle, double s, double s1, int k);

struct BirmanSchwingerRow {
  double lambda = 0.0;
  double k0_norm = 0.0;       // ||<x>^{s1} V R0 <x>^{-s1}||_{L2->L2}
  double smallest_sv = 1.0;   // of 1 + K0
  double inv_norm = 1.0;      // ||(1 + K0)^{-1}||
};

struct BirmanSchwingerReport {
  std::vector<BirmanSchwingerRow> rows;
  DecayFit fit;  // log-log fit of k0_norm against lambda
};

enum class ResolventEngine { Mesh, Radial, Auto };

/// Norm of the Birman-Schwinger operator per lambda plus the lambda-slope fit.
/// Auto picks the partial-wave engine for radial potentials (resolves large
/// lambda), the mesh discretization otherwise.
BirmanSchwingerReport birman_schwinger_check(const QuadratureMesh& mesh, const PotentialSpec& v,
                                             const std::vector<double>& lambdas, double epsilon,
                                             double s1 = 1.0,
                                             ResolventEngine engine = ResolventEngine::Auto);

}  // namespace wavedecay
