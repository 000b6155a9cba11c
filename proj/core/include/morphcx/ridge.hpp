#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace morphcx {

/// 13 log-spaced penalties from 1e-3 to 1e3.
std::vector<double> default_alpha_grid();

/// Ridge regression with an unpenalized intercept.
struct RidgeFit {
  Eigen::VectorXd coef;
  double intercept = 0.0;

  double predict(const Eigen::RowVectorXd& x) const { return intercept + x.dot(coef); }
};

RidgeFit ridge_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double alpha);

/// Exact leave-one-out predictions for every penalty in `alphas`, via the
/// hat-matrix identity on one eigendecomposition of the centered Gram matrix.
/// Column a holds the predictions for alphas[a].
Eigen::MatrixXd ridge_loo_predictions(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                      const std::vector<double>& alphas);

struct RidgeReport {
  std::string target;
  std::size_t n = 0;
  double rmse = 0.0;
  double error_reduction = 0.0;  ///< 1 - rmse
  std::vector<double> chosen_alpha;  ///< per held-out row
  Eigen::VectorXd predictions;
};

/// Nested leave-one-out: each held-out row is predicted by a fit on the other
/// rows whose penalty minimized inner leave-one-out RMSE (ties: smaller alpha).
/// Throws Error for fewer than 3 rows or an empty grid.
RidgeReport ridge_loocv(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const std::vector<double>& alphas,
                        std::size_t jobs = 1);

}  // namespace morphcx
