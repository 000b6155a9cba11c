#include "morphcx/pca.hpp"

#include <cmath>

#include "morphcx/error.hpp"

namespace morphcx {

namespace {

constexpr double kZeroLoading = 1e-12;

}  // namespace

Standardized standardize(const Eigen::MatrixXd& m, const std::vector<std::string>& column_names) {
  if (m.rows() == 0) throw Error("standardize: empty matrix");
  Standardized s;
  s.mean = m.colwise().mean().transpose();
  s.z = m.rowwise() - s.mean.transpose();
  s.sd = (s.z.array().square().colwise().sum() / static_cast<double>(m.rows())).sqrt().transpose();
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    if (!(s.sd(c) > 0.0)) {
      const auto name = static_cast<std::size_t>(c) < column_names.size() ? column_names[static_cast<std::size_t>(c)]
                                                                          : "column " + std::to_string(c);
      throw Error("cannot standardize constant measure '" + name + "'");
    }
    s.z.col(c) /= s.sd(c);
  }
  return s;
}

Eigen::VectorXd standardize(const Eigen::VectorXd& v, const std::string& name) {
  const Eigen::MatrixXd m = v;
  return standardize(m, std::vector<std::string>{name}).z.col(0);
}

PcaResult pca(const Eigen::MatrixXd& data, std::size_t orient_column) {
  if (data.rows() == 0 || data.cols() == 0) throw Error("pca: empty matrix");
  PcaResult r;
  r.center = data.colwise().mean().transpose();
  const Eigen::MatrixXd centered = data.rowwise() - r.center.transpose();
  if (centered.squaredNorm() <= 0.0) throw Error("pca: all rows are identical");

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinU | Eigen::ComputeThinV);
  r.singular_values = svd.singularValues();
  r.loadings = svd.matrixV();
  const Eigen::VectorXd var = r.singular_values.array().square();
  r.explained_ratio = var / var.sum();

  for (Eigen::Index k = 0; k < r.loadings.cols(); ++k) {
    auto col = r.loadings.col(k);
    Eigen::Index pivot = static_cast<Eigen::Index>(orient_column);
    if (pivot >= col.size() || std::fabs(col(pivot)) < kZeroLoading) {
      pivot = 0;
      while (pivot < col.size() && std::fabs(col(pivot)) < kZeroLoading) ++pivot;
    }
    if (pivot < col.size() && col(pivot) < 0.0) col = -col;
  }
  r.scores = centered * r.loadings;
  return r;
}

}  // namespace morphcx
