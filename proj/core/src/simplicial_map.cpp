#include "chromfold/simplicial_map.hpp"

#include <algorithm>
#include <string>

#include "chromfold/error.hpp"

namespace chromfold {

SimplicialMap::SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<VertexId> vertex_map, bool chromatic)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map)), chromatic_(chromatic) {
  if (!source_ || !target_) throw Error("simplicial map needs a source and a target");
  if (map_.size() != source_->vertex_count()) throw Error("vertex map is not total on the source");
}

SimplicialMap SimplicialMap::after(const SimplicialMap& inner) const {
  if (inner.target_ != source_ && inner.target().vertex_count() != source().vertex_count())
    throw Error("maps are not composable");
  std::vector<VertexId> composed(inner.map_.size());
  for (std::size_t v = 0; v < composed.size(); ++v) {
    const VertexId mid = inner.map_[v];
    if (mid < 0 || static_cast<std::size_t>(mid) >= map_.size()) throw Error("vertex map hits unknown vertex");
    composed[v] = map_[static_cast<std::size_t>(mid)];
  }
  return SimplicialMap(inner.source_, target_, std::move(composed), chromatic_ && inner.chromatic_);
}

SimplicialMap SimplicialMap::identity(ComplexPtr complex) {
  std::vector<VertexId> map(complex->vertex_count());
  for (std::size_t v = 0; v < map.size(); ++v) map[v] = static_cast<VertexId>(v);
  auto target = complex;
  return SimplicialMap(std::move(complex), std::move(target), std::move(map), true);
}

bool is_simplicial(const SimplicialMap& map) {
  const auto& target = map.target();
  for (VertexId image : map.vertex_map()) {
    if (image < 0 || static_cast<std::size_t>(image) >= target.vertex_count())
      throw Error("vertex map hits unknown target vertex " + std::to_string(image));
  }
  const auto incident = target.vertex_cells();
  for (const Cell& cell : map.source().top_cells()) {
    std::vector<VertexId> image;
    for (VertexId v : cell) image.push_back(map(v));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    const auto& candidates = incident[static_cast<std::size_t>(image.front())];
    const bool found = std::any_of(candidates.begin(), candidates.end(), [&](std::size_t c) {
      const Cell& t = target.top_cell(c);
      return std::all_of(image.begin(), image.end(),
                         [&](VertexId w) { return std::find(t.begin(), t.end(), w) != t.end(); });
    });
    if (!found) return false;
  }
  return true;
}

bool preserves_colors(const SimplicialMap& map) {
  for (std::size_t v = 0; v < map.vertex_map().size(); ++v) {
    if (map.source().vertex(static_cast<VertexId>(v)).color != map.target().vertex(map.vertex_map()[v]).color)
      return false;
  }
  return true;
}

}  // namespace chromfold
