#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace chromfold {

/// Closed polyline in the plane: a discrete immersion S^1 -> R^2.
class ClosedCurve {
 public:
  /// Throws unless there are at least 3 points, consecutive points differ and
  /// every exterior angle has absolute value < π.
  explicit ClosedCurve(std::vector<Eigen::Vector2d> points);

  const std::vector<Eigen::Vector2d>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  /// Edge from point i to point i + 1 (cyclically).
  Eigen::Vector2d edge(std::size_t i) const;
  /// Signed angle from edge i - 1 to edge i.
  double exterior_angle(std::size_t i) const;
  double length() const;

  ClosedCurve reversed() const;

 private:
  std::vector<Eigen::Vector2d> points_;
};

/// `count` points on a circle, counterclockwise from angle 0.
ClosedCurve circle(std::size_t count, const Eigen::Vector2d& center = Eigen::Vector2d::Zero(), double radius = 1.0);

/// Bernoulli lemniscate sampled at `count` equally spaced parameters (a figure eight).
ClosedCurve lemniscate(std::size_t count);

/// Checks the ClosedCurve invariants without throwing.
bool is_generic_immersion(const std::vector<Eigen::Vector2d>& points);

/// Degree of the Gauss map: sum of exterior angles over 2π.
int turning_number(const ClosedCurve& curve);

/// Refines every edge and adds `waves` sinusoidal oscillations along the
/// normal over the whole (length-normalized) curve. Throws if the result is
/// not a generic immersion with the same turning number.
ClosedCurve corrugate(const ClosedCurve& curve, int waves, double amplitude);

/// `count` points equally spaced in arclength, starting at point 0.
std::vector<Eigen::Vector2d> resample(const ClosedCurve& curve, std::size_t count);

struct HomotopyFrames {
  std::vector<ClosedCurve> frames;
};

/// Regular homotopy between two curves of equal turning number. Interpolates
/// lifted tangent angles and log-speeds of length-resampled curves and closes
/// each frame by spreading the drift along the curve proportionally to speed.
/// If a frame degenerates, retries through corrugated copies of the inputs and
/// then through Laplacian-smoothed copies.
HomotopyFrames whitney_graustein(const ClosedCurve& from, const ClosedCurve& to, int steps);

using DiscMap = std::function<Eigen::Vector2d(const Eigen::Vector2d&)>;

/// p + (1/t) [f(p + t (x - p)) - f(p)], t in (0, 1].
Eigen::Vector2d alexander_contraction(const DiscMap& f, const Eigen::Vector2d& p, double t,
                                      const Eigen::Vector2d& x);

}  // namespace chromfold
