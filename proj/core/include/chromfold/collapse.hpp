#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "chromfold/complex.hpp"

namespace chromfold {

/// Sorted vertex ids.
using Simplex = std::vector<int>;

/// Finite simplicial complex stored with all of its faces.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Closure of the given simplices (ids are sorted internally).
  static SimplicialComplex from_cells(const std::vector<Simplex>& cells);
  /// Forgets colors and periodic shifts.
  static SimplicialComplex from_chromatic(const ChromaticComplex& complex);

  const std::set<Simplex>& simplices() const { return simplices_; }
  std::size_t size() const { return simplices_.size(); }
  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
  bool contains(const SimplicialComplex& other) const;
  /// Simplices that are not a proper face of another simplex.
  std::vector<Simplex> maximal_cells() const;
  int dim() const;

  /// Removes a simplex that has no proper coface; throws otherwise.
  void remove_maximal(const Simplex& s);

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::set<Simplex> simplices_;
};

/// Removal of `cell` together with its free facet `face`.
struct CollapseStep {
  Simplex cell;
  Simplex face;
  friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};

struct Filtration {
  std::vector<CollapseStep> steps;
};

/// A facet lying in exactly one simplex. Among free pairs the one whose cell
/// has the highest dimension wins, ties broken by the lexicographically
/// smallest face.
std::optional<CollapseStep> find_free_face(const SimplicialComplex& complex);

struct CollapseResult {
  bool success = false;
  Filtration filtration;
  /// The target on success, the stuck complex otherwise.
  SimplicialComplex remaining;
};

/// Greedy elementary collapses that never remove a simplex of `target`.
/// Throws if `target` is not a subcomplex of `complex`.
CollapseResult collapse_to(const SimplicialComplex& complex, const SimplicialComplex& target);

/// Applies a filtration step by step, checking that every face is free.
SimplicialComplex replay(const SimplicialComplex& complex, const Filtration& filtration);

/// Product of a base complex with [0, 1], triangulated by the Whitney rule.
///
/// A base cell [v_0 < ... < v_k] yields the k + 1 cells
/// [(v_0,0) ... (v_i,0), (v_i,1) ... (v_k,1)]. Vertex (v, h) has id 2v + h.
struct PrismComplex {
  SimplicialComplex base;
  std::vector<Simplex> top_cells;
  SimplicialComplex complex;

  static int vertex_id(int base_vertex, int level) { return 2 * base_vertex + level; }
  SimplicialComplex bottom() const;
  SimplicialComplex top() const;
};

PrismComplex whitney_prism(const SimplicialComplex& base);
PrismComplex whitney_prism(const ChromaticComplex& base);

}  // namespace chromfold
