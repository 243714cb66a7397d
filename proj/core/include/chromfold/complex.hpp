#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "chromfold/color_set.hpp"

namespace chromfold {

using VertexId = int;

/// Top cell given by vertex ids. Within a ChromaticComplex the ids are
/// stored in increasing color order, so slot k holds the k-th smallest color.
using Cell = std::vector<VertexId>;

/// Integer translation by multiples of the period, used by periodic complexes.
using LatticeShift = std::vector<int>;

/// A vertex labelled by its color and its view.
///
/// For subdivided complexes the view is the set of colors of the carrier
/// face; for plain base triangulations it is the singleton {color}.
struct ChromaticVertex {
  int color = 0;
  ColorSet view;

  friend bool operator==(const ChromaticVertex&, const ChromaticVertex&) = default;
  friend auto operator<=>(const ChromaticVertex& a, const ChromaticVertex& b) {
    if (auto c = a.color <=> b.color; c != 0) return c;
    return a.view <=> b.view;
  }
};

/// Pure simplicial complex of dimension `dim` stored by its top cells, with
/// colors pairwise distinct inside every top cell.
///
/// A complex may be periodic (a quotient of a lattice-invariant complex, as
/// for the flat torus). Each top-cell slot then carries a LatticeShift telling
/// which translate of the vertex the cell actually uses. Two faces with the
/// same vertex ids are the same face only if their relative shifts agree.
class ChromaticComplex {
 public:
  ChromaticComplex(int dim, std::vector<ChromaticVertex> vertices, std::vector<Cell> top_cells,
                   std::vector<std::vector<LatticeShift>> shifts = {});

  int dim() const { return dim_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<ChromaticVertex>& vertices() const { return vertices_; }
  const ChromaticVertex& vertex(VertexId v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const std::vector<Cell>& top_cells() const { return cells_; }
  const Cell& top_cell(std::size_t c) const { return cells_.at(c); }

  bool periodic() const { return !shifts_.empty(); }
  /// Zero shift for non-periodic complexes.
  LatticeShift shift(std::size_t cell, std::size_t slot) const;
  const std::vector<std::vector<LatticeShift>>& shifts() const { return shifts_; }

  /// Colors used by any vertex.
  ColorSet colors() const;

  /// Top cells containing each vertex.
  std::vector<std::vector<std::size_t>> vertex_cells() const;

 private:
  int dim_;
  std::vector<ChromaticVertex> vertices_;
  std::vector<Cell> cells_;
  std::vector<std::vector<LatticeShift>> shifts_;
};

using ComplexPtr = std::shared_ptr<const ChromaticComplex>;

/// Δ^n as a complex: vertex i has color i and view {i}.
ComplexPtr standard_simplex(int n);

/// Induced subcomplex on the vertices whose view excludes `dropped_color`,
/// with the remaining colors renumbered order-preservingly.
ChromaticComplex facet_subcomplex(const ChromaticComplex& complex, int dropped_color);

/// Top cells as sets of (color, view) labels, sorted. Equal results mean the
/// complexes are chromatically isomorphic when labels identify vertices.
std::vector<std::vector<ChromaticVertex>> label_cells(const ChromaticComplex& complex);

}  // namespace chromfold
