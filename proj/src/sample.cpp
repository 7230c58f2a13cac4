#include "dcf/sample.hpp"

#include <stdexcept>

namespace dcf {

Sample::Sample(Eigen::MatrixXd d) : data(std::move(d)) {
  if (data.rows() < 2)
    throw std::invalid_argument("Sample: need at least 2 observations");
  if (!data.allFinite())
    throw std::invalid_argument("Sample: entries must be finite");
}

}  // namespace dcf
