#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "chromfold/complex.hpp"
#include "chromfold/error.hpp"
#include "chromfold/realization.hpp"
#include "chromfold/simplicial_map.hpp"

namespace chromfold {

/// How far inside Δ^n the inverted interior simplex is placed; 0 < mu <= 1.
class PlacementParameter {
 public:
  explicit PlacementParameter(double mu = 1.0);
  double value() const { return mu_; }

 private:
  double mu_;
};

/// Cells of χ(Δ^n) as views indexed by color: cell[i] is the view of the
/// vertex of color i. Built by induction on faces: the interior inverted
/// simplex spanned by the full-view vertices is joined to the already
/// subdivided proper faces. Sorted lexicographically.
std::vector<std::vector<ColorSet>> chromatic_template(int n);

/// One application of χ.
struct SubdivisionLevel {
  ComplexPtr base;
  ComplexPtr subdivided;
  /// Folding map: vertex (i, σ) goes to the carrier vertex of color i.
  SimplicialMap fold;
  /// Smallest base face containing each subdivided vertex (sorted base ids).
  std::vector<std::vector<VertexId>> carrier;
  /// Periodic complexes only: shift of each carrier vertex relative to the first one.
  std::vector<std::vector<LatticeShift>> carrier_shifts;
  /// Base top cell that each subdivided top cell refines.
  std::vector<std::size_t> parent_cell;
};

/// χ(Δ^n) together with its fold onto Δ^n.
SubdivisionLevel chromatic_subdivide_simplex(int n);

/// Applies χ cell by cell, using the colors of each base cell as the simplex
/// colors. Shared faces get the same subdivision. Throws if the base coloring
/// is not proper with dim + 1 colors per cell.
SubdivisionLevel chromatic_subdivide_complex(ComplexPtr base, std::size_t limit = size_limit());

/// Barycentric placement of vertex (color, view) of χ(Δ^n):
/// (Σ_{j∈σ} e_j + μ Σ_{j∈σ, j≠i} e_j) / (|σ| + μ(|σ|-1)).
Eigen::VectorXd placement(int color, ColorSet view, int n, PlacementParameter mu);

/// Realizes a subdivided complex from a realization of its base.
Realization realize(const SubdivisionLevel& level, const Realization& base, PlacementParameter mu);
/// Same, with the base realized as the standard simplex.
Realization realize(const SubdivisionLevel& level, PlacementParameter mu);

/// r stacked subdivisions over a base complex and the composite fold.
struct IteratedFolding {
  int order = 0;
  std::vector<SubdivisionLevel> levels;
  /// realizations[k] realizes the complex after k subdivisions.
  std::vector<Realization> realizations;
  /// finest complex -> base, equal to fold_1 ∘ ... ∘ fold_r.
  SimplicialMap composite_fold;
  /// Base top cell that each finest top cell refines.
  std::vector<std::size_t> root_cell;

  const ChromaticComplex& base() const;
  const ChromaticComplex& finest() const;
  const ComplexPtr& finest_ptr() const;
  const Realization& finest_realization() const { return realizations.back(); }
};

IteratedFolding iterate(int n, int r, PlacementParameter mu, std::size_t limit = size_limit());
IteratedFolding iterate(ComplexPtr base, const Realization& base_realization, int r,
                        PlacementParameter mu, std::size_t limit = size_limit());

/// Derivative of the realized composite fold on a finest top cell, in chart
/// coordinates (an n x n matrix).
Eigen::MatrixXd fold_derivative(const IteratedFolding& folding, std::size_t cell);

/// Smallest singular value of fold_derivative over all finest top cells.
double min_fold_singular_value(const IteratedFolding& folding);

/// Support of every finest vertex inside the base simplex of Δ^n, as colors.
std::vector<ColorSet> root_support(const IteratedFolding& folding);

/// Canonical structural name of every finest vertex, built from its color and
/// the names of its carrier vertices down to the base. `base_relabel` renames
/// base vertices (by id) before naming; empty means identity on colors.
std::vector<std::string> structural_names(const IteratedFolding& folding,
                                          const std::vector<int>& base_relabel = {});

struct LemmaReport {
  bool colors_bijective = true;
  bool determinants_nonzero = true;
  double min_abs_determinant = 0.0;
  bool heredity = true;
  double max_facet_position_error = 0.0;
  std::vector<std::string> failures;
  bool ok() const { return colors_bijective && determinants_nonzero && heredity; }
};

/// Certifies non-degeneracy (fold bijective on colors with nonzero Jacobian on
/// every top cell) and heredity (each facet restriction of χ^r(Δ^n) is
/// chromatically isomorphic to χ^r(Δ^{n-1}) compatibly with the folds and the
/// placement) for n >= 1.
LemmaReport certify_lemma(int n, int r, PlacementParameter mu);

/// Point location and the realized fold ŝ on an iterated subdivision of Δ^n.
class FoldEvaluator {
 public:
  explicit FoldEvaluator(const IteratedFolding& folding);

  /// Finest top cell containing a barycentric point and the barycentric
  /// coordinates with respect to its slots.
  std::pair<std::size_t, Eigen::VectorXd> locate(const Eigen::VectorXd& point) const;

  /// ŝ(x) in barycentric coordinates of Δ^n.
  Eigen::VectorXd fold(const Eigen::VectorXd& point) const;

  int dim() const { return dim_; }

 private:
  struct CellFrame {
    Eigen::VectorXd origin;
    Eigen::MatrixXd inverse;
  };
  Eigen::VectorXd local_coordinates(std::size_t level, std::size_t cell, const Eigen::VectorXd& chart) const;

  const IteratedFolding* folding_;
  int dim_;
  std::vector<std::vector<CellFrame>> frames_;                 // per level >= 1
  std::vector<std::vector<std::vector<std::size_t>>> children_;  // per level >= 1, by parent
};

/// H_t(x) = (1 - t) ŝ(x) + t x on barycentric points. Throws if x lies
/// outside the simplex by more than 1e-9 or t is outside [0, 1].
Eigen::VectorXd unfolding_homotopy(const FoldEvaluator& evaluator, double t, const Eigen::VectorXd& point);

}  // namespace chromfold
