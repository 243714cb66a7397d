#include "chromfold/eversion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace chromfold {

Eigen::Vector3d rotate_about(const Eigen::Vector3d& axis, double angle, const Eigen::Vector3d& u) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return u * c + axis.cross(u) * s + axis * axis.dot(u) * (1.0 - c);
}

std::pair<Eigen::Vector3d, Eigen::Vector3d> eversion_field(const FormalEversionSample& sample) {
  return {(1.0 - 2.0 * sample.t) * sample.x, rotate_about(sample.x, std::numbers::pi * sample.t, sample.u)};
}

EversionCertificate verify_formal_immersion(const EversionGrid& grid) {
  EversionCertificate cert;
  cert.min_area = std::numeric_limits<double>::infinity();
  const int times = std::max(grid.times, 2);
  for (int i = 0; i < grid.polar; ++i) {
    const double theta = std::numbers::pi * (i + 0.5) / grid.polar;
    for (int j = 0; j < grid.azimuthal; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / grid.azimuthal;
      const Eigen::Vector3d x(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta));
      const Eigen::Vector3d u(std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi), -std::sin(theta));
      const Eigen::Vector3d v = x.cross(u);

      const Eigen::Vector3d start_u = eversion_field({0.0, x, u}).second;
      const Eigen::Vector3d start_v = eversion_field({0.0, x, v}).second;
      cert.max_start_error = std::max({cert.max_start_error, (start_u - u).norm(), (start_v - v).norm()});
      const Eigen::Vector3d end_u = eversion_field({1.0, x, u}).second;
      const Eigen::Vector3d end_v = eversion_field({1.0, x, v}).second;
      cert.max_end_error = std::max({cert.max_end_error, (end_u + u).norm(), (end_v + v).norm()});

      for (int k = 0; k < times; ++k) {
        const double t = static_cast<double>(k) / (times - 1);
        const Eigen::Vector3d fu = eversion_field({t, x, u}).second;
        const Eigen::Vector3d fv = eversion_field({t, x, v}).second;
        cert.min_area = std::min(cert.min_area, fu.cross(fv).norm());
        cert.max_norm_defect = std::max({cert.max_norm_defect, std::abs(fu.norm() - 1.0), std::abs(fv.norm() - 1.0)});
        ++cert.samples;
      }
    }
  }
  cert.pass = cert.min_area > 1.0 - 1e-9 && cert.max_start_error <= 1e-12 && cert.max_end_error <= 1e-12 &&
              cert.max_norm_defect <= 1e-12;
  return cert;
}

}  // namespace chromfold
