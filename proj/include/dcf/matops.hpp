#pragma once

#include <Eigen/Dense>

namespace dcf {

// Relative tolerances for covariance handling: symmetry check, eigenvalue
// clipping in sym_sqrt, and the rejection gate for indefinite inputs.
inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kPsdClipRel = 1e-8;
inline constexpr double kPsdRejectRel = 1e-6;

bool is_symmetric(const Eigen::MatrixXd& m, double tol = kSymmetryTol);

/// Polynomially decaying covariance: entry (j, k) = (1 + |j - k|)^{-1/4}.
Eigen::MatrixXd poly_decay_cov(int p);

/// Entry-wise rescale: output(j, k) = sqrt(phi_j phi_k) * base(j, k),
/// i.e. D * base * D for D = diag(sqrt(phi)). Requires phi > 0 and a
/// square symmetric base of matching dimension.
Eigen::MatrixXd scaled_cov(const Eigen::MatrixXd& base,
                           const Eigen::VectorXd& phi);

/// Symmetric PSD square root via eigendecomposition. Eigenvalues below
/// kPsdClipRel * lambda_max are treated as zero; inputs whose most
/// negative eigenvalue is below -kPsdRejectRel * lambda_max are rejected
/// with std::domain_error.
Eigen::MatrixXd sym_sqrt(const Eigen::MatrixXd& m);

}  // namespace dcf
