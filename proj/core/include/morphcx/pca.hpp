#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace morphcx {

struct Standardized {
  Eigen::MatrixXd z;
  Eigen::VectorXd mean;
  Eigen::VectorXd sd;  ///< population convention (divide by n)
};

/// Column-wise z-scores. Throws Error naming the first constant column.
Standardized standardize(const Eigen::MatrixXd& m, const std::vector<std::string>& column_names);

/// z-scores of one vector; throws Error naming `name` if it is constant.
Eigen::VectorXd standardize(const Eigen::VectorXd& v, const std::string& name);

struct PcaResult {
  Eigen::MatrixXd loadings;         ///< variables x components, orthonormal columns
  Eigen::MatrixXd scores;           ///< rows x components
  Eigen::VectorXd singular_values;  ///< non-increasing
  Eigen::VectorXd explained_ratio;  ///< sigma_i^2 / sum sigma^2
  Eigen::VectorXd center;
};

/// PCA by SVD of the column-centered matrix, min(rows, cols) components. Each
/// component is oriented so its loading on `orient_column` is non-negative
/// (if that loading is zero, the first non-zero loading is made positive).
/// Throws Error if every row is identical.
PcaResult pca(const Eigen::MatrixXd& data, std::size_t orient_column = 0);

}  // namespace morphcx
