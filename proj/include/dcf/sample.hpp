#pragma once

#include <Eigen/Dense>

namespace dcf {

/// One sample: rows are independent p-dimensional observations sharing a
/// common mean. Requires n >= 2 and finite entries.
struct Sample {
  Eigen::MatrixXd data;

  Sample() = default;
  explicit Sample(Eigen::MatrixXd d);

  Eigen::Index n() const { return data.rows(); }
  Eigen::Index p() const { return data.cols(); }
  Eigen::RowVectorXd mean() const { return data.colwise().mean(); }
};

}  // namespace dcf
