#include "chromfold/realization.hpp"

#include <cmath>
#include <string>

#include "chromfold/error.hpp"

namespace chromfold {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double cell_diameter(const Eigen::MatrixXd& points) {
  double diameter = 0.0;
  for (Eigen::Index a = 0; a < points.rows(); ++a)
    for (Eigen::Index b = a + 1; b < points.rows(); ++b)
      diameter = std::max(diameter, (points.row(a) - points.row(b)).norm());
  return diameter;
}

}  // namespace

Realization::Realization(Chart chart, std::vector<Eigen::VectorXd> positions, double period)
    : chart_(chart), positions_(std::move(positions)), period_(period) {
  if (period_ < 0.0) throw Error("period must be non-negative");
  for (std::size_t v = 1; v < positions_.size(); ++v) {
    if (positions_[v].size() != positions_[0].size()) throw Error("positions have inconsistent lengths");
  }
}

Realization Realization::barycentric(std::vector<Eigen::VectorXd> positions) {
  for (std::size_t v = 0; v < positions.size(); ++v) {
    const auto& p = positions[v];
    if (p.size() == 0) throw Error("empty barycentric position");
    if (std::abs(p.sum() - 1.0) > kConstructionTolerance || p.minCoeff() < -kConstructionTolerance)
      throw Error("vertex " + std::to_string(v) + " is not a barycentric point");
  }
  return Realization(Chart::kBarycentric, std::move(positions), 0.0);
}

Realization Realization::ambient(std::vector<Eigen::VectorXd> positions, double period) {
  return Realization(Chart::kAmbient, std::move(positions), period);
}

int Realization::chart_dim() const {
  if (positions_.empty()) return 0;
  const auto len = static_cast<int>(positions_.front().size());
  return chart_ == Chart::kBarycentric ? len - 1 : len;
}

Eigen::VectorXd Realization::to_chart(const Eigen::VectorXd& position) const {
  if (chart_ == Chart::kBarycentric) return position.tail(position.size() - 1);
  return position;
}

Eigen::VectorXd Realization::from_chart(const Eigen::VectorXd& chart_point) const {
  if (chart_ != Chart::kBarycentric) return chart_point;
  Eigen::VectorXd b(chart_point.size() + 1);
  b(0) = 1.0 - chart_point.sum();
  b.tail(chart_point.size()) = chart_point;
  return b;
}

Eigen::MatrixXd Realization::cell_points(const ChromaticComplex& complex, std::size_t cell) const {
  const Cell& vertices = complex.top_cell(cell);
  Eigen::MatrixXd out(static_cast<Eigen::Index>(vertices.size()), chart_dim());
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    Eigen::VectorXd p = to_chart(position(vertices[k]));
    if (complex.periodic()) {
      const LatticeShift s = complex.shift(cell, k);
      for (std::size_t d = 0; d < s.size(); ++d) p(static_cast<Eigen::Index>(d)) += period_ * s[d];
    }
    out.row(static_cast<Eigen::Index>(k)) = p.transpose();
  }
  return out;
}

Realization standard_simplex_realization(int n) {
  std::vector<Eigen::VectorXd> positions;
  for (int i = 0; i <= n; ++i) positions.push_back(Eigen::VectorXd::Unit(n + 1, i));
  return Realization::barycentric(std::move(positions));
}

Eigen::MatrixXd edge_matrix(const Eigen::MatrixXd& cell_points) {
  const Eigen::Index k = cell_points.rows() - 1;
  Eigen::MatrixXd edges(cell_points.cols(), k);
  for (Eigen::Index j = 0; j < k; ++j) edges.col(j) = (cell_points.row(j + 1) - cell_points.row(0)).transpose();
  return edges;
}

std::vector<double> volumes(const ChromaticComplex& complex, const Realization& realization) {
  if (realization.size() != complex.vertex_count()) throw Error("realization does not match complex");
  if (realization.chart_dim() != complex.dim()) throw Error("chart dimension differs from complex dimension");
  const double norm = factorial(complex.dim());
  std::vector<double> out;
  out.reserve(complex.cell_count());
  for (std::size_t c = 0; c < complex.cell_count(); ++c) {
    const Eigen::MatrixXd pts = realization.cell_points(complex, c);
    const double det = complex.dim() == 0 ? 1.0 : edge_matrix(pts).determinant();
    const double scale = std::pow(std::max(cell_diameter(pts), 1e-300), complex.dim());
    if (std::abs(det) <= kConstructionTolerance * scale)
      throw Error("degenerate top cell " + std::to_string(c));
    out.push_back(std::abs(det) / norm);
  }
  return out;
}

void validate_realization(const ChromaticComplex& complex, const Realization& realization) {
  if (realization.size() != complex.vertex_count()) throw Error("realization does not match complex");
  if (realization.chart() == Chart::kBarycentric) {
    for (std::size_t v = 0; v < realization.size(); ++v) {
      const auto& p = realization.position(static_cast<VertexId>(v));
      if (std::abs(p.sum() - 1.0) > kConstructionTolerance || p.minCoeff() < -kConstructionTolerance)
        throw Error("vertex " + std::to_string(v) + " is not a barycentric point");
    }
  }
  (void)volumes(complex, realization);
}

double mesh(const ChromaticComplex& complex, const Realization& realization) {
  double m = 0.0;
  for (std::size_t c = 0; c < complex.cell_count(); ++c)
    m = std::max(m, cell_diameter(realization.cell_points(complex, c)));
  return m;
}

}  // namespace chromfold
