#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace morphcx {

enum class CorrelationMethod { Pearson, Spearman };

constexpr std::string_view method_name(CorrelationMethod m) {
  return m == CorrelationMethod::Pearson ? "pearson" : "spearman";
}

enum class SignificanceTest { TDistribution, Permutation };

struct SignificanceOptions {
  SignificanceTest test = SignificanceTest::TDistribution;
  double alpha = 0.05;
  std::size_t permutations = 9999;  ///< permutation test only
  std::uint64_t seed = 1;
};

/// value is nullopt when undefined (n < 3 or a constant input).
struct Correlation {
  std::optional<double> value;
  double p_value = 1.0;
  bool significant = false;
  std::size_t n = 0;
};

/// Two-sided p-value of t = r sqrt((n-2)/(1-r^2)) under Student's t with n-2 dof.
double t_test_p_value(double r, std::size_t n);

/// Mean rank (1-based) for ties.
std::vector<double> average_ranks(std::span<const double> x);

Correlation pearson(std::span<const double> x, std::span<const double> y, const SignificanceOptions& sig = {});
Correlation spearman(std::span<const double> x, std::span<const double> y, const SignificanceOptions& sig = {});
Correlation correlate(CorrelationMethod method, std::span<const double> x, std::span<const double> y,
                      const SignificanceOptions& sig = {});

/// Treebank x measure values with an availability mask (nullopt = unavailable).
struct MeasureMatrix {
  std::vector<std::string> row_ids;
  std::vector<std::string> row_languages;
  std::vector<std::string> column_names;
  std::vector<std::vector<std::optional<double>>> cells;  ///< [row][column]

  std::size_t n_rows() const noexcept { return row_ids.size(); }
  std::size_t n_cols() const noexcept { return column_names.size(); }
  std::optional<std::size_t> column(std::string_view name) const;

  /// Rows with a value in every listed column.
  std::vector<std::size_t> complete_rows(const std::vector<std::size_t>& columns) const;
  Eigen::MatrixXd dense(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& columns) const;
};

struct CorrelationMatrix {
  CorrelationMethod method = CorrelationMethod::Pearson;
  std::vector<std::string> names;
  std::vector<std::vector<Correlation>> cells;
};

/// Pairwise-complete correlations; cells with fewer than 3 complete rows or a
/// constant column are undefined. Defined diagonal cells are exactly 1.
CorrelationMatrix correlation_matrix(const MeasureMatrix& m, CorrelationMethod method,
                                     const SignificanceOptions& sig = {});

}  // namespace morphcx
