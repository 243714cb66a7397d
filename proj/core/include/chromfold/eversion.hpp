#pragma once

#include <cstddef>
#include <utility>

#include <Eigen/Dense>

namespace chromfold {

/// A point of S^2 × [0, 1] with a tangent vector at x.
struct FormalEversionSample {
  double t = 0.0;
  Eigen::Vector3d x;
  Eigen::Vector3d u;
};

/// Rotation of u by `angle` about the unit axis (Rodrigues).
Eigen::Vector3d rotate_about(const Eigen::Vector3d& axis, double angle, const Eigen::Vector3d& u);

/// ((1 - 2t) x, R_x^{πt} u): the formal homotopy from the inclusion of S^2
/// to the antipodal map.
std::pair<Eigen::Vector3d, Eigen::Vector3d> eversion_field(const FormalEversionSample& sample);

struct EversionGrid {
  int polar = 32;
  int azimuthal = 32;
  int times = 16;
};

struct EversionCertificate {
  bool pass = true;
  std::size_t samples = 0;
  double min_area = 0.0;         // min |F_t(u) × F_t(v)|
  double max_norm_defect = 0.0;  // max ||F_t(w)| - |w||
  double max_start_error = 0.0;  // |F_0 - df_0|
  double max_end_error = 0.0;    // |F_1 - df_1|
};

/// Checks on a grid that F_t is injective on every tangent plane and that
/// F_0, F_1 are the differentials of the inclusion and of its negative.
EversionCertificate verify_formal_immersion(const EversionGrid& grid);

}  // namespace chromfold
