#include "morphcx/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "morphcx/error.hpp"
#include "morphcx/rng.hpp"

namespace morphcx {

namespace {

std::optional<double> pearson_r(std::span<const double> x, std::span<const double> y) {
  const auto n = x.size();
  if (n < 3) return std::nullopt;
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double permutation_p_value(std::span<const double> x, std::span<const double> y, double r,
                           const SignificanceOptions& sig) {
  auto rng = Rng::derive({sig.seed, x.size()});
  std::vector<double> shuffled(y.begin(), y.end());
  std::size_t extreme = 0;
  for (std::size_t k = 0; k < sig.permutations; ++k) {
    rng.shuffle(shuffled);
    const auto rp = pearson_r(x, shuffled);
    if (rp && std::fabs(*rp) >= std::fabs(r) - 1e-12) ++extreme;
  }
  return static_cast<double>(extreme + 1) / static_cast<double>(sig.permutations + 1);
}

Correlation finish(std::optional<double> r, std::span<const double> x, std::span<const double> y,
                   const SignificanceOptions& sig) {
  Correlation c;
  c.n = x.size();
  c.value = r;
  if (!r) return c;
  c.p_value = sig.test == SignificanceTest::Permutation ? permutation_p_value(x, y, *r, sig)
                                                        : t_test_p_value(*r, c.n);
  c.significant = c.p_value < sig.alpha;
  return c;
}

void check_lengths(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error("correlation inputs differ in length");
}

}  // namespace

double t_test_p_value(double r, std::size_t n) {
  if (n < 3) return 1.0;
  const double dof = static_cast<double>(n - 2);
  const double denom = 1.0 - r * r;
  if (denom <= 0.0) return 0.0;
  const double t = std::fabs(r) * std::sqrt(dof / denom);
  boost::math::students_t dist(dof);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, t));
}

std::vector<double> average_ranks(std::span<const double> x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i + 1;
    while (j < idx.size() && x[idx[j]] == x[idx[i]]) ++j;
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[idx[k]] = rank;
    i = j;
  }
  return ranks;
}

Correlation pearson(std::span<const double> x, std::span<const double> y, const SignificanceOptions& sig) {
  check_lengths(x, y);
  return finish(pearson_r(x, y), x, y, sig);
}

Correlation spearman(std::span<const double> x, std::span<const double> y, const SignificanceOptions& sig) {
  check_lengths(x, y);
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return finish(pearson_r(rx, ry), rx, ry, sig);
}

Correlation correlate(CorrelationMethod method, std::span<const double> x, std::span<const double> y,
                      const SignificanceOptions& sig) {
  return method == CorrelationMethod::Pearson ? pearson(x, y, sig) : spearman(x, y, sig);
}

std::optional<std::size_t> MeasureMatrix::column(std::string_view name) const {
  for (std::size_t c = 0; c < column_names.size(); ++c) {
    if (column_names[c] == name) return c;
  }
  return std::nullopt;
}

std::vector<std::size_t> MeasureMatrix::complete_rows(const std::vector<std::size_t>& columns) const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    if (std::all_of(columns.begin(), columns.end(), [&](std::size_t c) { return cells[r][c].has_value(); })) {
      out.push_back(r);
    }
  }
  return out;
}

Eigen::MatrixXd MeasureMatrix::dense(const std::vector<std::size_t>& rows,
                                     const std::vector<std::size_t>& columns) const {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const auto& v = cells[rows[i]][columns[j]];
      if (!v) throw Error("dense(): row " + row_ids[rows[i]] + " lacks " + column_names[columns[j]]);
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = *v;
    }
  }
  return m;
}

CorrelationMatrix correlation_matrix(const MeasureMatrix& m, CorrelationMethod method,
                                     const SignificanceOptions& sig) {
  CorrelationMatrix out;
  out.method = method;
  out.names = m.column_names;
  const auto p = m.n_cols();
  out.cells.assign(p, std::vector<Correlation>(p));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) {
      std::vector<double> x, y;
      for (const auto& row : m.cells) {
        if (row[i] && row[j]) {
          x.push_back(*row[i]);
          y.push_back(*row[j]);
        }
      }
      auto c = correlate(method, x, y, sig);
      if (i == j && c.value) {
        c.value = 1.0;
        c.p_value = 0.0;
        c.significant = true;
      }
      out.cells[i][j] = c;
      out.cells[j][i] = c;
    }
  }
  return out;
}

}  // namespace morphcx
