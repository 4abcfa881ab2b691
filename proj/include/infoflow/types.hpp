#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace infoflow {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Shape or index-range violation in the inputs.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix that must be (semi)definite or invertible is not.
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iteration failed to reach its tolerance (e.g. unstable dynamics).
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested analysis is not defined for this system (e.g. unstable loop).
class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered set of distinct state indices naming a coordinate subspace.
class SubspaceSelector {
 public:
  SubspaceSelector() = default;
  explicit SubspaceSelector(std::vector<Index> indices);
  SubspaceSelector(std::initializer_list<Index> indices)
      : SubspaceSelector(std::vector<Index>(indices)) {}

  const std::vector<Index>& indices() const { return indices_; }
  Index size() const { return static_cast<Index>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  Index operator[](Index k) const { return indices_[static_cast<size_t>(k)]; }

  bool contains(Index i) const;
  bool disjoint_with(const SubspaceSelector& other) const;

  /// Throws DimensionError unless all indices lie in [0, n).
  void validate(Index n, const char* what = "selector") const;

  /// Indices of [0, n) not in this selector, in increasing order.
  SubspaceSelector complement(Index n) const;

  /// Concatenation, preserving order. Duplicate indices are rejected.
  SubspaceSelector concat(const SubspaceSelector& other) const;

  std::string to_string() const;

 private:
  std::vector<Index> indices_;
};

/// Discrete-time linear Gaussian system
///
///   z(t+1) = A z(t) + B u(t) + noise,   theta(t) = C z(t) + omega(t)
///
/// The process noise defaults to sigma^2 I; a general diagonal covariance
/// can be installed with with_noise_diag. B/C and the input/output noise
/// covariances are optional. Immutable once configured; safe to share
/// across threads.
class LinearSystem {
 public:
  LinearSystem(Matrix A, double sigma);

  LinearSystem& with_input(Matrix B, std::optional<Matrix> Sigma_u = {});
  LinearSystem& with_output(Matrix C, std::optional<Matrix> Sigma_omega = {});
  LinearSystem& with_noise_diag(Vector diag);

  Index state_dim() const { return A_.rows(); }
  const Matrix& A() const { return A_; }
  double sigma() const { return sigma_; }

  bool has_input() const { return B_.has_value(); }
  bool has_output() const { return C_.has_value(); }
  const Matrix& B() const;
  const Matrix& C() const;
  Index input_dim() const { return B().cols(); }
  Index output_dim() const { return C().rows(); }

  bool has_input_cov() const { return Sigma_u_.has_value(); }
  bool has_output_noise_cov() const { return Sigma_omega_.has_value(); }
  const Matrix& input_cov() const;
  const Matrix& output_noise_cov() const;

  /// Diagonal of the process-noise covariance (sigma^2 by default).
  Vector noise_diag() const;
  /// Process-noise covariance as a dense matrix.
  Matrix noise_cov() const;

 private:
  Matrix A_;
  double sigma_;
  std::optional<Vector> noise_diag_;
  std::optional<Matrix> B_;
  std::optional<Matrix> C_;
  std::optional<Matrix> Sigma_u_;
  std::optional<Matrix> Sigma_omega_;
};

/// State covariance at a time step. Construction enforces symmetry
/// (1e-12 relative) and an eigenvalue floor of -1e-10 * ||Sigma||.
struct CovarianceState {
  long t = 0;
  Matrix Sigma;

  CovarianceState(long t_, Matrix Sigma_);
};

/// Joint covariance of a selected coordinate block across horizon+1
/// consecutive steps, ordered oldest-first: block k is the marginal at
/// base_t + k.
struct TrajectoryCovariance {
  long base_t = 0;
  int horizon = 0;
  Index block_dim = 0;
  Matrix Gamma;

  TrajectoryCovariance(long base_t_, int horizon_, Index block_dim_, Matrix Gamma_);
};

namespace detail {
/// Throws unless S is square, symmetric to 1e-12 relative tolerance and has
/// eigenvalues >= -1e-10 * spectral norm.
void require_symmetric_psd(const Matrix& S, const char* what);
}  // namespace detail

}  // namespace infoflow
