#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "chromfold/complex.hpp"

namespace chromfold {

enum class Chart {
  /// Barycentric coordinates in Δ^n; the affine chart drops the first coordinate.
  kBarycentric,
  /// Ambient coordinates, optionally reduced modulo a period.
  kAmbient,
};

inline constexpr double kConstructionTolerance = 1e-12;
inline constexpr double kTestTolerance = 1e-9;

/// Vertex positions of a complex.
class Realization {
 public:
  static Realization barycentric(std::vector<Eigen::VectorXd> positions);
  static Realization ambient(std::vector<Eigen::VectorXd> positions, double period = 0.0);

  Chart chart() const { return chart_; }
  double period() const { return period_; }
  std::size_t size() const { return positions_.size(); }
  const Eigen::VectorXd& position(VertexId v) const { return positions_.at(static_cast<std::size_t>(v)); }
  const std::vector<Eigen::VectorXd>& positions() const { return positions_; }

  /// Dimension of the affine chart.
  int chart_dim() const;
  /// Chart coordinates of a position (barycentric: drop coordinate 0).
  Eigen::VectorXd to_chart(const Eigen::VectorXd& position) const;
  /// Inverse of to_chart for barycentric realizations.
  Eigen::VectorXd from_chart(const Eigen::VectorXd& chart_point) const;

  /// Chart coordinates of the vertices of a top cell, one row per slot,
  /// with periodic shifts applied.
  Eigen::MatrixXd cell_points(const ChromaticComplex& complex, std::size_t cell) const;

 private:
  Realization(Chart chart, std::vector<Eigen::VectorXd> positions, double period);

  Chart chart_;
  std::vector<Eigen::VectorXd> positions_;
  double period_ = 0.0;
};

/// Standard realization of Δ^n: vertex i at e_i.
Realization standard_simplex_realization(int n);

/// Throws unless sizes match, barycentric rows are valid and no cell is degenerate.
void validate_realization(const ChromaticComplex& complex, const Realization& realization);

/// Edge-vector matrix [x_1 - x_0, ..., x_n - x_0] (columns) of a top cell.
Eigen::MatrixXd edge_matrix(const Eigen::MatrixXd& cell_points);

/// |det| / n! of each top cell in the chart. Throws on a degenerate cell.
std::vector<double> volumes(const ChromaticComplex& complex, const Realization& realization);

/// Largest Euclidean diameter of a top cell in the chart.
double mesh(const ChromaticComplex& complex, const Realization& realization);

}  // namespace chromfold
