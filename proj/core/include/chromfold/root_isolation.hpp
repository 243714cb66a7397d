#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace chromfold {

/// Real polynomial, coefficients in increasing degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);

  const std::vector<double>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  double operator()(double t) const;
  /// Upper bound on |p'| over [lo, hi].
  double derivative_bound(double lo, double hi) const;

 private:
  std::vector<double> coeffs_;
};

/// q(t) = det(base + t * direction), recovered by interpolation at t = 0..n.
Polynomial determinant_polynomial(const Eigen::MatrixXd& base, const Eigen::MatrixXd& direction);

/// Searches [lo, hi] for a real root by sign checks and recursive bisection,
/// discarding an interval once |q(mid)| exceeds the derivative bound times the
/// half-width. Returns a root location, or nullopt when the whole interval is
/// certified root-free. An interval that survives `max_depth` halvings is
/// reported as a root.
std::optional<double> find_root(const Polynomial& q, double lo, double hi, int max_depth = 60);

}  // namespace chromfold
