#pragma once

#include <vector>

#include "chromfold/complex.hpp"

namespace chromfold {

/// Vertex map between two complexes.
class SimplicialMap {
 public:
  SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<VertexId> vertex_map,
                bool chromatic = false);

  const ChromaticComplex& source() const { return *source_; }
  const ChromaticComplex& target() const { return *target_; }
  const ComplexPtr& source_ptr() const { return source_; }
  const ComplexPtr& target_ptr() const { return target_; }
  const std::vector<VertexId>& vertex_map() const { return map_; }
  VertexId operator()(VertexId v) const { return map_.at(static_cast<std::size_t>(v)); }
  bool flagged_chromatic() const { return chromatic_; }

  /// `this ∘ inner`; requires inner.target() to be this->source().
  SimplicialMap after(const SimplicialMap& inner) const;

  static SimplicialMap identity(ComplexPtr complex);

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<VertexId> map_;
  bool chromatic_;
};

/// True iff every top cell maps onto a (possibly degenerate) simplex of the
/// target. Throws if the map hits an unknown target vertex.
bool is_simplicial(const SimplicialMap& map);

/// True iff color(v) == color(map(v)) for every source vertex.
bool preserves_colors(const SimplicialMap& map);

}  // namespace chromfold
