#include "chromfold/curves.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "chromfold/error.hpp"

namespace chromfold {

namespace {

using Points = std::vector<Eigen::Vector2d>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMaxResample = 1u << 16;

double cross(const Eigen::Vector2d& a, const Eigen::Vector2d& b) { return a.x() * b.y() - a.y() * b.x(); }

double turn(const Eigen::Vector2d& before, const Eigen::Vector2d& after) {
  return std::atan2(cross(before, after), before.dot(after));
}

Eigen::Vector2d edge_of(const Points& p, std::size_t i) { return p[(i + 1) % p.size()] - p[i]; }

double angle_sum(const Points& p) {
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) total += turn(edge_of(p, (i + p.size() - 1) % p.size()), edge_of(p, i));
  return total;
}

Eigen::Vector2d left_normal(const Eigen::Vector2d& e) { return Eigen::Vector2d(-e.y(), e.x()).normalized(); }

Points corrugate_points(const Points& p, int waves, double amplitude, const std::vector<int>& per_edge) {
  double length = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) length += edge_of(p, i).norm();
  Points out;
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Eigen::Vector2d e = edge_of(p, i);
    const Eigen::Vector2d normal = left_normal(e);
    const Eigen::Vector2d corner =
        (left_normal(edge_of(p, (i + p.size() - 1) % p.size())) + normal).normalized();
    const int m = per_edge[i];
    for (int j = 0; j < m; ++j) {
      const double f = static_cast<double>(j) / m;
      const Eigen::Vector2d n = j == 0 ? corner : normal;
      const double phase = kTwoPi * waves * (s + f * e.norm()) / length;
      out.push_back(p[i] + f * e + amplitude * std::sin(phase) * n);
    }
    s += e.norm();
  }
  return out;
}

struct Lifted {
  std::vector<double> angle;
  std::vector<double> log_speed;
};

Lifted lift(const Points& p, std::optional<double> reference) {
  Lifted out;
  double theta = std::atan2(edge_of(p, 0).y(), edge_of(p, 0).x());
  if (reference) theta = *reference + std::remainder(theta - *reference, kTwoPi);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) theta += turn(edge_of(p, i - 1), edge_of(p, i));
    out.angle.push_back(theta);
    out.log_speed.push_back(std::log(edge_of(p, i).norm()));
  }
  return out;
}

// Interpolated frame at time s, or nullopt when it is not a generic immersion
// with the expected turning number.
std::optional<Points> interpolate(const Points& a, const Lifted& la, const Points& b, const Lifted& lb, double s,
                                  int turning) {
  const std::size_t n = a.size();
  std::vector<Eigen::Vector2d> edges(n);
  Eigen::Vector2d drift = Eigen::Vector2d::Zero();
  double speed_total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = (1.0 - s) * la.angle[k] + s * lb.angle[k];
    const double speed = std::exp((1.0 - s) * la.log_speed[k] + s * lb.log_speed[k]);
    edges[k] = speed * Eigen::Vector2d(std::cos(theta), std::sin(theta));
    drift += edges[k];
    speed_total += speed;
  }
  Points frame(n);
  frame[0] = (1.0 - s) * a[0] + s * b[0];
  for (std::size_t k = 0; k + 1 < n; ++k) frame[k + 1] = frame[k] + edges[k] - drift * (edges[k].norm() / speed_total);
  if (!is_generic_immersion(frame)) return std::nullopt;
  if (std::lround(angle_sum(frame) / kTwoPi) != turning) return std::nullopt;
  return frame;
}

std::optional<std::vector<ClosedCurve>> direct_homotopy(const Points& a, const Points& b, int steps, int turning,
                                                        std::size_t& failed_frame) {
  const Lifted la = lift(a, std::nullopt);
  const Lifted lb = lift(b, la.angle[0]);
  std::vector<ClosedCurve> frames;
  for (int k = 0; k <= steps; ++k) {
    auto frame = interpolate(a, la, b, lb, static_cast<double>(k) / steps, turning);
    if (!frame) {
      failed_frame = static_cast<std::size_t>(k);
      return std::nullopt;
    }
    frames.emplace_back(std::move(*frame));
  }
  // Pin the endpoints to the inputs exactly.
  frames.front() = ClosedCurve(a);
  frames.back() = ClosedCurve(b);
  return frames;
}

Points midpoint_refine(const Points& p) {
  Points out;
  out.reserve(2 * p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.push_back(p[i]);
    out.push_back(0.5 * (p[i] + p[(i + 1) % p.size()]));
  }
  return out;
}

// p, then each step of p_i += (p_{i-1} - 2 p_i + p_{i+1}) / 4; nullopt once a
// step leaves the generic immersions of the given turning number.
std::optional<std::vector<ClosedCurve>> smoothing_path(const Points& start, int iterations, int turning) {
  std::vector<ClosedCurve> path{ClosedCurve(start)};
  Points p = start;
  const std::size_t n = p.size();
  for (int it = 0; it < iterations; ++it) {
    Points q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = p[i] + 0.25 * (p[(i + n - 1) % n] - 2.0 * p[i] + p[(i + 1) % n]);
    if (!is_generic_immersion(q) || std::lround(angle_sum(q) / kTwoPi) != turning) return std::nullopt;
    path.emplace_back(q);
    p = std::move(q);
  }
  return path;
}

}  // namespace

bool is_generic_immersion(const std::vector<Eigen::Vector2d>& points) {
  if (points.size() < 3) return false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Eigen::Vector2d e = edge_of(points, i);
    if (!(e.norm() > 0.0) || !e.allFinite()) return false;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double a = turn(edge_of(points, (i + points.size() - 1) % points.size()), edge_of(points, i));
    if (std::abs(a) >= std::numbers::pi - 1e-12) return false;
  }
  return true;
}

ClosedCurve::ClosedCurve(std::vector<Eigen::Vector2d> points) : points_(std::move(points)) {
  if (points_.size() < 3) throw Error("not generic immersed: a closed curve needs at least 3 points");
  if (!is_generic_immersion(points_)) throw Error("not generic immersed: zero edge or exterior angle of π");
}

Eigen::Vector2d ClosedCurve::edge(std::size_t i) const { return edge_of(points_, i % points_.size()); }

double ClosedCurve::exterior_angle(std::size_t i) const {
  return turn(edge((i + points_.size() - 1) % points_.size()), edge(i));
}

double ClosedCurve::length() const {
  double total = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) total += edge(i).norm();
  return total;
}

ClosedCurve ClosedCurve::reversed() const { return ClosedCurve(Points(points_.rbegin(), points_.rend())); }

ClosedCurve circle(std::size_t count, const Eigen::Vector2d& center, double radius) {
  Points p;
  for (std::size_t k = 0; k < count; ++k) {
    const double a = kTwoPi * static_cast<double>(k) / static_cast<double>(count);
    p.push_back(center + radius * Eigen::Vector2d(std::cos(a), std::sin(a)));
  }
  return ClosedCurve(std::move(p));
}

ClosedCurve lemniscate(std::size_t count) {
  Points p;
  for (std::size_t k = 0; k < count; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(count);
    const double d = 1.0 + std::sin(t) * std::sin(t);
    p.emplace_back(std::cos(t) / d, std::sin(t) * std::cos(t) / d);
  }
  return ClosedCurve(std::move(p));
}

int turning_number(const ClosedCurve& curve) {
  const double winding = angle_sum(curve.points()) / kTwoPi;
  const double rounded = std::round(winding);
  if (std::abs(winding - rounded) > 1e-9) throw Error("not generic immersed: angle sum is not a multiple of 2π");
  return static_cast<int>(rounded);
}

ClosedCurve corrugate(const ClosedCurve& curve, int waves, double amplitude) {
  if (waves < 1) throw Error("corrugation needs at least one wave");
  if (!(amplitude >= 0.0)) throw Error("corrugation amplitude must be non-negative");
  const Points& p = curve.points();
  const double length = curve.length();
  const double target = std::max(32.0 * waves, 4.0 * static_cast<double>(p.size()));
  std::vector<int> per_edge(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    per_edge[i] = std::max(1, static_cast<int>(std::ceil(curve.edge(i).norm() / length * target - 1e-9)));
  Points out = corrugate_points(p, waves, amplitude, per_edge);
  if (!is_generic_immersion(out) || std::lround(angle_sum(out) / kTwoPi) != turning_number(curve))
    throw Error("corrugation is not a generic immersion with the same turning number; use a smaller amplitude");
  return ClosedCurve(std::move(out));
}

std::vector<Eigen::Vector2d> resample(const ClosedCurve& curve, std::size_t count) {
  if (count < 3) throw Error("resampling needs at least 3 points");
  const double length = curve.length();
  Points out;
  out.reserve(count);
  std::size_t edge = 0;
  double start = 0.0;  // arclength at the start of `edge`
  for (std::size_t k = 0; k < count; ++k) {
    const double s = length * static_cast<double>(k) / static_cast<double>(count);
    while (edge + 1 < curve.size() && start + curve.edge(edge).norm() <= s) {
      start += curve.edge(edge).norm();
      ++edge;
    }
    const double f = (s - start) / curve.edge(edge).norm();
    out.push_back(curve.points()[edge] + f * curve.edge(edge));
  }
  return out;
}

HomotopyFrames whitney_graustein(const ClosedCurve& from, const ClosedCurve& to, int steps) {
  if (steps < 1) throw Error("a homotopy needs at least one step");
  const int turning = turning_number(from);
  const int target = turning_number(to);
  if (turning != target)
    throw Error("not regularly homotopic: turning numbers " + std::to_string(turning) + " and " +
                std::to_string(target) + " differ");

  // Sharp corners closer together than the sample spacing get merged into one
  // chord, so refine until both resampled curves keep their turning number.
  auto faithful = [&](const Points& p) {
    return is_generic_immersion(p) && std::lround(angle_sum(p) / kTwoPi) == turning;
  };
  std::size_t count = std::max<std::size_t>(64, 2 * std::max(from.size(), to.size()));
  Points a = resample(from, count);
  Points b = resample(to, count);
  while (!faithful(a) || !faithful(b)) {
    count *= 2;
    if (count > kMaxResample) throw Error("resampling does not preserve the curve; refine the input");
    a = resample(from, count);
    b = resample(to, count);
  }

  std::size_t failed = 0;
  if (auto frames = direct_homotopy(a, b, steps, turning, failed)) return {std::move(*frames)};

  // Corrugate both ends with the same refinement, ramp the amplitude up,
  // interpolate between the corrugated curves, then ramp back down.
  const double edge = std::min(from.length(), to.length()) / static_cast<double>(count);
  for (int waves : {4, 8, 16}) {
    const int per = std::max(2, static_cast<int>(std::ceil(32.0 * waves / static_cast<double>(count))));
    const std::vector<int> per_edge(count, per);
    const double amplitude = 0.25 * edge;
    const int ramp = std::max(2, steps / 4);
    auto ramped = [&](const Points& p, int k) { return corrugate_points(p, waves, amplitude * k / ramp, per_edge); };
    const Points ca = ramped(a, ramp);
    const Points cb = ramped(b, ramp);
    std::size_t inner_failed = 0;
    auto middle = direct_homotopy(ca, cb, steps, turning, inner_failed);
    if (!middle) {
      failed = inner_failed;
      continue;
    }
    std::vector<ClosedCurve> frames{ClosedCurve(a)};
    bool ok = true;
    for (int k = 1; k < ramp && ok; ++k) {
      Points p = ramped(a, k);
      ok = is_generic_immersion(p) && std::lround(angle_sum(p) / kTwoPi) == turning;
      if (ok) frames.emplace_back(std::move(p));
    }
    frames.insert(frames.end(), middle->begin(), middle->end());
    for (int k = ramp - 1; k >= 1 && ok; --k) {
      Points p = ramped(b, k);
      ok = is_generic_immersion(p) && std::lround(angle_sum(p) / kTwoPi) == turning;
      if (ok) frames.emplace_back(std::move(p));
    }
    if (!ok) continue;
    frames.emplace_back(b);
    return {std::move(frames)};
  }
  // Last resort: flow both ends by discrete Laplacian smoothing, which rounds
  // off sharp corners, and interpolate between the smoothed curves.
  // Midpoint refinement does not move the curve, so a refined copy can start
  // the flow without an extra frame.
  Points fine_a = a;
  Points fine_b = b;
  for (int refinement = 0; refinement < 3; ++refinement) {
    for (int iterations : {10, 25, 50, 100, 200}) {
      auto down = smoothing_path(fine_a, iterations, turning);
      auto up = smoothing_path(fine_b, iterations, turning);
      if (!down || !up) continue;
      std::size_t inner_failed = 0;
      auto middle = direct_homotopy(down->back().points(), up->back().points(), steps, turning, inner_failed);
      if (!middle) {
        failed = inner_failed;
        continue;
      }
      std::vector<ClosedCurve> frames{ClosedCurve(a)};
      frames.insert(frames.end(), down->begin() + 1, down->end() - 1);
      frames.insert(frames.end(), middle->begin(), middle->end());
      frames.insert(frames.end(), up->rbegin() + 1, up->rend() - 1);
      frames.emplace_back(b);
      return {std::move(frames)};
    }
    fine_a = midpoint_refine(fine_a);
    fine_b = midpoint_refine(fine_b);
  }
  throw Error("regular homotopy construction failed at frame " + std::to_string(failed));
}

Eigen::Vector2d alexander_contraction(const DiscMap& f, const Eigen::Vector2d& p, double t, const Eigen::Vector2d& x) {
  if (t == 0.0) throw Error("limit case; use affine limit p + df(p)(x-p)");
  if (!(t > 0.0 && t <= 1.0)) throw Error("contraction time must lie in (0, 1]");
  return p + (f(p + t * (x - p)) - f(p)) / t;
}

}  // namespace chromfold
