#include "chromfold/root_isolation.hpp"

#include <cmath>

#include "chromfold/error.hpp"

namespace chromfold {

Polynomial::Polynomial(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double Polynomial::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Polynomial::derivative_bound(double lo, double hi) const {
  const double m = std::max(std::abs(lo), std::abs(hi));
  double bound = 0.0;
  double power = 1.0;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    bound += static_cast<double>(k) * std::abs(coeffs_[k]) * power;
    power *= m;
  }
  return bound;
}

Polynomial determinant_polynomial(const Eigen::MatrixXd& base, const Eigen::MatrixXd& direction) {
  if (base.rows() != base.cols() || direction.rows() != base.rows() || direction.cols() != base.cols())
    throw Error("pencil matrices must be square and of equal size");
  const Eigen::Index n = base.rows();
  if (n == 0) return Polynomial({1.0});
  Eigen::MatrixXd vandermonde(n + 1, n + 1);
  Eigen::VectorXd values(n + 1);
  for (Eigen::Index i = 0; i <= n; ++i) {
    const auto t = static_cast<double>(i);
    double power = 1.0;
    for (Eigen::Index j = 0; j <= n; ++j) {
      vandermonde(i, j) = power;
      power *= t;
    }
    values(i) = (base + t * direction).determinant();
  }
  const Eigen::VectorXd c = vandermonde.fullPivLu().solve(values);
  return Polynomial(std::vector<double>(c.data(), c.data() + c.size()));
}

namespace {

int sign(double v) { return (v > 0.0) - (v < 0.0); }

double bisect(const Polynomial& q, double a, double b) {
  double qa = q(a);
  for (int i = 0; i < 200 && b - a > 1e-15; ++i) {
    const double m = 0.5 * (a + b);
    const double qm = q(m);
    if (qm == 0.0) return m;
    if (sign(qm) == sign(qa)) {
      a = m;
      qa = qm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

std::optional<double> search(const Polynomial& q, double a, double b, double qa, double qb, int depth, int max_depth) {
  const double m = 0.5 * (a + b);
  const double qm = q(m);
  if (qm == 0.0) return m;
  if (sign(qm) != sign(qa)) return bisect(q, a, m);
  if (sign(qm) != sign(qb)) return bisect(q, m, b);
  if (std::abs(qm) > q.derivative_bound(a, b) * 0.5 * (b - a)) return std::nullopt;
  if (depth >= max_depth) return m;
  if (auto left = search(q, a, m, qa, qm, depth + 1, max_depth)) return left;
  return search(q, m, b, qm, qb, depth + 1, max_depth);
}

}  // namespace

std::optional<double> find_root(const Polynomial& q, double lo, double hi, int max_depth) {
  if (!(lo <= hi)) throw Error("empty search interval");
  const double qa = q(lo);
  const double qb = q(hi);
  if (qa == 0.0) return lo;
  if (qb == 0.0) return hi;
  if (sign(qa) != sign(qb)) return bisect(q, lo, hi);
  return search(q, lo, hi, qa, qb, 0, max_depth);
}

}  // namespace chromfold
