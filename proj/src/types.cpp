#include "infoflow/types.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace infoflow {

SubspaceSelector::SubspaceSelector(std::vector<Index> indices)
    : indices_(std::move(indices)) {
  std::set<Index> seen;
  for (Index i : indices_) {
    if (i < 0) throw DimensionError("selector index must be nonnegative");
    if (!seen.insert(i).second)
      throw DimensionError("selector indices must be distinct");
  }
}

bool SubspaceSelector::contains(Index i) const {
  return std::find(indices_.begin(), indices_.end(), i) != indices_.end();
}

bool SubspaceSelector::disjoint_with(const SubspaceSelector& other) const {
  for (Index i : other.indices_)
    if (contains(i)) return false;
  return true;
}

void SubspaceSelector::validate(Index n, const char* what) const {
  for (Index i : indices_) {
    if (i >= n) {
      std::ostringstream os;
      os << what << ": index " << i << " out of range for dimension " << n;
      throw DimensionError(os.str());
    }
  }
}

SubspaceSelector SubspaceSelector::complement(Index n) const {
  validate(n);
  std::vector<Index> out;
  for (Index i = 0; i < n; ++i)
    if (!contains(i)) out.push_back(i);
  return SubspaceSelector(std::move(out));
}

SubspaceSelector SubspaceSelector::concat(const SubspaceSelector& other) const {
  std::vector<Index> out = indices_;
  out.insert(out.end(), other.indices_.begin(), other.indices_.end());
  return SubspaceSelector(std::move(out));
}

std::string SubspaceSelector::to_string() const {
  std::ostringstream os;
  os << "{";
  for (size_t k = 0; k < indices_.size(); ++k) {
    if (k) os << ",";
    os << indices_[k];
  }
  os << "}";
  return os.str();
}

namespace detail {

void require_symmetric_psd(const Matrix& S, const char* what) {
  if (S.rows() != S.cols())
    throw DimensionError(std::string(what) + ": matrix must be square");
  const double scale = S.cwiseAbs().maxCoeff();
  const double asym = (S - S.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(scale, 1e-300))
    throw DimensionError(std::string(what) + ": matrix is not symmetric");
  if (S.rows() == 0) return;
  Eigen::SelfAdjointEigenSolver<Matrix> es(S, Eigen::EigenvaluesOnly);
  const double lam_min = es.eigenvalues().minCoeff();
  const double lam_max = es.eigenvalues().cwiseAbs().maxCoeff();
  if (lam_min < -1e-10 * std::max(lam_max, 1e-300))
    throw SingularMatrixError(std::string(what) +
                              ": matrix is not positive semidefinite");
}

void require_symmetric(const Matrix& S, const char* what) {
  if (S.rows() != S.cols())
    throw DimensionError(std::string(what) + ": matrix must be square");
  const double scale = S.cwiseAbs().maxCoeff();
  if ((S - S.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1e-300))
    throw DimensionError(std::string(what) + ": matrix is not symmetric");
}

}  // namespace detail

LinearSystem::LinearSystem(Matrix A, double sigma)
    : A_(std::move(A)), sigma_(sigma) {
  if (A_.rows() != A_.cols() || A_.rows() == 0)
    throw DimensionError("A must be square and nonempty");
  if (!(sigma_ > 0.0)) throw DimensionError("sigma must be positive");
}

LinearSystem& LinearSystem::with_input(Matrix B, std::optional<Matrix> Sigma_u) {
  if (B.rows() != state_dim())
    throw DimensionError("B row count must equal the state dimension");
  if (Sigma_u) {
    if (Sigma_u->rows() != B.cols())
      throw DimensionError("Sigma_u dimension must equal the input dimension");
    detail::require_symmetric_psd(*Sigma_u, "Sigma_u");
  }
  B_ = std::move(B);
  Sigma_u_ = std::move(Sigma_u);
  return *this;
}

LinearSystem& LinearSystem::with_output(Matrix C, std::optional<Matrix> Sigma_omega) {
  if (C.cols() != state_dim())
    throw DimensionError("C column count must equal the state dimension");
  if (Sigma_omega) {
    if (Sigma_omega->rows() != C.rows())
      throw DimensionError("Sigma_omega dimension must equal the output dimension");
    detail::require_symmetric_psd(*Sigma_omega, "Sigma_omega");
  }
  C_ = std::move(C);
  Sigma_omega_ = std::move(Sigma_omega);
  return *this;
}

LinearSystem& LinearSystem::with_noise_diag(Vector diag) {
  if (diag.size() != state_dim())
    throw DimensionError("noise diagonal must have one entry per state");
  if ((diag.array() < 0.0).any())
    throw DimensionError("noise diagonal entries must be nonnegative");
  noise_diag_ = std::move(diag);
  return *this;
}

const Matrix& LinearSystem::B() const {
  if (!B_) throw DimensionError("system has no input matrix B");
  return *B_;
}

const Matrix& LinearSystem::C() const {
  if (!C_) throw DimensionError("system has no output matrix C");
  return *C_;
}

const Matrix& LinearSystem::input_cov() const {
  if (!Sigma_u_) throw DimensionError("system has no input covariance Sigma_u");
  return *Sigma_u_;
}

const Matrix& LinearSystem::output_noise_cov() const {
  if (!Sigma_omega_)
    throw DimensionError("system has no output noise covariance Sigma_omega");
  return *Sigma_omega_;
}

Vector LinearSystem::noise_diag() const {
  if (noise_diag_) return *noise_diag_;
  return Vector::Constant(state_dim(), sigma_ * sigma_);
}

Matrix LinearSystem::noise_cov() const { return noise_diag().asDiagonal(); }

CovarianceState::CovarianceState(long t_, Matrix Sigma_)
    : t(t_), Sigma(std::move(Sigma_)) {
  if (t < 0) throw DimensionError("time step must be nonnegative");
  detail::require_symmetric_psd(Sigma, "CovarianceState");
}

TrajectoryCovariance::TrajectoryCovariance(long base_t_, int horizon_,
                                           Index block_dim_, Matrix Gamma_)
    : base_t(base_t_), horizon(horizon_), block_dim(block_dim_),
      Gamma(std::move(Gamma_)) {
  if (horizon < 1) throw DimensionError("trajectory horizon must be positive");
  if (block_dim < 1) throw DimensionError("trajectory block must be nonempty");
  if (Gamma.rows() != (horizon + 1) * block_dim)
    throw DimensionError("trajectory covariance has the wrong size");
  detail::require_symmetric_psd(Gamma, "TrajectoryCovariance");
}

}  // namespace infoflow
