#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "chromfold/complex.hpp"
#include "chromfold/realization.hpp"
#include "chromfold/subdivision.hpp"

namespace chromfold {

/// Flat torus R^n / L Z^n with its Kuhn triangulation.
///
/// Vertices are the integer points, colored by coordinate sum mod (n + 1).
/// The tangent bundle is trivial and exp(x, u) = x + u mod L.
class TorusModel {
 public:
  /// Requires n >= 1, L >= n + 1 and L divisible by n + 1.
  TorusModel(int n, int period);

  int dim() const { return n_; }
  int period() const { return period_; }
  const ComplexPtr& complex() const { return complex_; }
  const Realization& realization() const { return realization_; }

  Eigen::VectorXd exp(const Eigen::VectorXd& x, const Eigen::VectorXd& u) const;
  Eigen::VectorXd reduce(const Eigen::VectorXd& x) const;

 private:
  int n_;
  int period_;
  ComplexPtr complex_;
  Realization realization_;
};

/// Kuhn triangulation of the cube [0, size]^n, not periodic.
std::pair<ComplexPtr, Realization> kuhn_grid_patch(int n, int size);

/// Affine piece of S_r on one finest cell: S_r(x) = derivative * x + offset.
struct SectionPiece {
  std::size_t root_cell = 0;
  Eigen::MatrixXd points;  // lifted vertices, one row per slot
  Eigen::MatrixXd derivative;
  Eigen::VectorXd offset;
};

/// j^{(r)}(x) = exp_x^{-1}(S_r(x)) = S_r(x) - x on the flat torus.
class JiggledSection {
 public:
  JiggledSection(const TorusModel& model, IteratedFolding folding);

  const TorusModel& model() const { return *model_; }
  int order() const { return folding_.order; }
  const IteratedFolding& folding() const { return folding_; }
  const std::vector<SectionPiece>& pieces() const { return pieces_; }
  /// Largest disagreement of the section value at a vertex between the cells sharing it.
  double max_face_mismatch() const { return mismatch_; }

  /// Section value on the given piece at a lifted point of that piece.
  Eigen::VectorXd value(std::size_t piece, const Eigen::VectorXd& x) const;

 private:
  const TorusModel* model_;
  IteratedFolding folding_;
  std::vector<SectionPiece> pieces_;
  double mismatch_ = 0.0;
};

/// Throws if the section is not continuous to within 1e-9.
JiggledSection build_section(const TorusModel& model, int r, PlacementParameter mu,
                             std::size_t limit = size_limit());

/// n-plane field on TX given by the graph {(w, A w)}; A = -I is tangent to the
/// exponential foliation.
struct PlaneField {
  Eigen::MatrixXd matrix;

  static PlaneField exponential(int n) { return {-Eigen::MatrixXd::Identity(n, n)}; }
};

/// A_t = (1 - t) A_0 + t A_1.
struct FieldPencil {
  PlaneField from;
  PlaneField to;

  PlaneField at(double t) const { return {(1.0 - t) * from.matrix + t * to.matrix}; }
};

struct Witness {
  std::size_t cell = 0;
  std::vector<int> face;  // slots of the finest cell
  std::optional<double> t;
  Eigen::VectorXd kernel;
  Eigen::MatrixXd derivative;
  double singular_value = 0.0;
};

struct Certificate {
  bool pass = true;
  std::vector<Witness> witnesses;
};

inline constexpr double kRankTolerance = 1e-9;

/// Checks that no simplex of the jiggled image shares a tangent vector with
/// the plane field: (D - I - A) must be injective on every face direction space.
Certificate check_quasi_transverse(const JiggledSection& section, const PlaneField& field,
                                   std::size_t max_witnesses = 1);

/// Quasi-transversality for every member of a pencil. Full-dimensional cells
/// are certified through det(D - I - A_t) having no root in [0, 1]; lower
/// faces are sampled on 65 equally spaced values of t.
Certificate check_pencil(const JiggledSection& section, const FieldPencil& pencil,
                         std::size_t max_witnesses = 1);

/// Pencil certificate for a single affine piece with derivative D.
std::optional<double> pencil_root(const Eigen::MatrixXd& derivative, const FieldPencil& pencil);

/// Smallest r <= r_max whose section is quasi-transverse to all fields (and to
/// the pencils from -I to each field when requested).
std::optional<int> minimal_order(const TorusModel& model, const std::vector<PlaneField>& fields,
                                 bool include_pencils_to_exp, int r_max, PlacementParameter mu,
                                 std::size_t limit = size_limit());

/// Largest angle, over cells and face directions, between a tangent vector of
/// the jiggled image and the vertical fiber.
double verticality(const JiggledSection& section);

/// Flat version of the interpolation from the identity of TX to exp:
/// (x, u) -> (x + t u mod L, (1 - t) u).
std::pair<Eigen::VectorXd, Eigen::VectorXd> exp_slide(const TorusModel& model, double t,
                                                      const Eigen::VectorXd& x,
                                                      const Eigen::VectorXd& u);

}  // namespace chromfold
