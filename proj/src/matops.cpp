#include "dcf/matops.hpp"

#include <cmath>
#include <stdexcept>

namespace dcf {

bool is_symmetric(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol;
}

Eigen::MatrixXd poly_decay_cov(int p) {
  if (p < 1) throw std::invalid_argument("poly_decay_cov: p must be >= 1");
  Eigen::MatrixXd cov(p, p);
  for (int j = 0; j < p; ++j) {
    cov(j, j) = 1.0;
    for (int k = 0; k < j; ++k) {
      const double v = std::pow(1.0 + (j - k), -0.25);
      cov(j, k) = v;
      cov(k, j) = v;
    }
  }
  return cov;
}

Eigen::MatrixXd scaled_cov(const Eigen::MatrixXd& base,
                           const Eigen::VectorXd& phi) {
  if (base.rows() != base.cols())
    throw std::invalid_argument("scaled_cov: base must be square");
  if (phi.size() != base.rows())
    throw std::invalid_argument("scaled_cov: phi length must match base");
  if ((phi.array() <= 0.0).any())
    throw std::invalid_argument("scaled_cov: phi entries must be positive");
  const Eigen::VectorXd d = phi.array().sqrt();
  return d.asDiagonal() * base * d.asDiagonal();
}

Eigen::MatrixXd sym_sqrt(const Eigen::MatrixXd& m) {
  if (!is_symmetric(m))
    throw std::invalid_argument("sym_sqrt: input is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("sym_sqrt: eigendecomposition failed");
  const Eigen::VectorXd& vals = es.eigenvalues();
  const double lambda_max = std::max(vals.maxCoeff(), 0.0);
  if (vals.minCoeff() < -kPsdRejectRel * lambda_max)
    throw std::domain_error("sym_sqrt: input is not positive semidefinite");
  const double clip = kPsdClipRel * lambda_max;
  Eigen::VectorXd roots(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    roots[i] = vals[i] < clip ? 0.0 : std::sqrt(vals[i]);
  Eigen::MatrixXd r =
      es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().transpose();
  // kill the last-ulp asymmetry of the triple product
  return ((r + r.transpose()) * 0.5).eval();
}

}  // namespace dcf
