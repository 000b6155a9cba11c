#include "morphcx/ridge.hpp"

#include <algorithm>
#include <cmath>

#include "morphcx/error.hpp"
#include "morphcx/parallel.hpp"

namespace morphcx {

std::vector<double> default_alpha_grid() {
  std::vector<double> grid;
  for (int k = 0; k <= 12; ++k) grid.push_back(std::pow(10.0, -3.0 + 0.5 * k));
  return grid;
}

RidgeFit ridge_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double alpha) {
  if (x.rows() == 0 || x.rows() != y.size()) throw Error("ridge_fit: shape mismatch");
  if (!(alpha > 0.0)) throw Error("ridge_fit: alpha must be positive");
  const Eigen::RowVectorXd xm = x.colwise().mean();
  const double ym = y.mean();
  const Eigen::MatrixXd xc = x.rowwise() - xm;
  const Eigen::VectorXd yc = y.array() - ym;
  // dual form: n x n system, since features usually outnumber languages
  Eigen::MatrixXd gram = xc * xc.transpose();
  gram.diagonal().array() += alpha;
  const Eigen::VectorXd dual = gram.ldlt().solve(yc);
  RidgeFit fit;
  fit.coef = xc.transpose() * dual;
  fit.intercept = ym - xm.dot(fit.coef);
  return fit;
}

Eigen::MatrixXd ridge_loo_predictions(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                      const std::vector<double>& alphas) {
  const auto m = x.rows();
  if (m < 2 || m != y.size()) throw Error("ridge_loo_predictions: need at least 2 rows");
  const Eigen::RowVectorXd xm = x.colwise().mean();
  const double ym = y.mean();
  const Eigen::MatrixXd xc = x.rowwise() - xm;
  const Eigen::VectorXd yc = y.array() - ym;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(xc * xc.transpose());
  const Eigen::MatrixXd& q = eig.eigenvectors();
  const Eigen::VectorXd lambda = eig.eigenvalues().cwiseMax(0.0);
  const Eigen::VectorXd qty = q.transpose() * yc;
  const Eigen::MatrixXd q2 = q.array().square();

  Eigen::MatrixXd out(m, static_cast<Eigen::Index>(alphas.size()));
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    const Eigen::VectorXd shrink = lambda.array() / (lambda.array() + alphas[a]);
    const Eigen::VectorXd fitted = (q * shrink.cwiseProduct(qty)).array() + ym;
    const Eigen::VectorXd leverage = (q2 * shrink).array() + 1.0 / static_cast<double>(m);
    const Eigen::VectorXd resid = (y - fitted).array() / (1.0 - leverage.array());
    out.col(static_cast<Eigen::Index>(a)) = y - resid;
  }
  return out;
}

RidgeReport ridge_loocv(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const std::vector<double>& alphas,
                        std::size_t jobs) {
  const auto n = x.rows();
  if (n != y.size()) throw Error("ridge_loocv: shape mismatch");
  if (n < 3) throw Error("ridge_loocv: need at least 3 rows, got " + std::to_string(n));
  if (alphas.empty()) throw Error("ridge_loocv: empty alpha grid");

  RidgeReport rep;
  rep.n = static_cast<std::size_t>(n);
  rep.predictions.resize(n);
  rep.chosen_alpha.assign(rep.n, 0.0);

  parallel_for(rep.n, jobs, [&](std::size_t held) {
    const auto h = static_cast<Eigen::Index>(held);
    Eigen::MatrixXd xt(n - 1, x.cols());
    Eigen::VectorXd yt(n - 1);
    for (Eigen::Index r = 0, k = 0; r < n; ++r) {
      if (r == h) continue;
      xt.row(k) = x.row(r);
      yt(k) = y(r);
      ++k;
    }
    const auto inner = ridge_loo_predictions(xt, yt, alphas);
    std::size_t best = 0;
    double best_mse = 0.0;
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      const double mse = (inner.col(static_cast<Eigen::Index>(a)) - yt).squaredNorm();
      if (a == 0 || mse < best_mse) {
        best_mse = mse;
        best = a;
      }
    }
    rep.chosen_alpha[held] = alphas[best];
    rep.predictions(h) = ridge_fit(xt, yt, alphas[best]).predict(x.row(h));
  });

  rep.rmse = std::sqrt((rep.predictions - y).squaredNorm() / static_cast<double>(n));
  rep.error_reduction = 1.0 - rep.rmse;
  return rep;
}

}  // namespace morphcx
