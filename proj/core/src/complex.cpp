#include "chromfold/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "chromfold/error.hpp"

namespace chromfold {

ChromaticComplex::ChromaticComplex(int dim, std::vector<ChromaticVertex> vertices, std::vector<Cell> top_cells,
                                   std::vector<std::vector<LatticeShift>> shifts)
    : dim_(dim), vertices_(std::move(vertices)), cells_(std::move(top_cells)), shifts_(std::move(shifts)) {
  if (dim_ < 0) throw Error("complex dimension must be non-negative");
  if (!shifts_.empty() && shifts_.size() != cells_.size()) throw Error("shift table does not match top cells");
  for (const auto& v : vertices_) {
    if (v.color < 0 || v.color >= ColorSet::kMaxColors) throw Error("vertex color out of range");
    if (!v.view.contains(v.color)) throw Error("vertex color " + std::to_string(v.color) + " not in its view");
  }

  std::vector<bool> used(vertices_.size(), false);
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    Cell& cell = cells_[c];
    if (cell.size() != static_cast<std::size_t>(dim_) + 1)
      throw Error("top cell " + std::to_string(c) + " has " + std::to_string(cell.size()) + " vertices, expected " +
                  std::to_string(dim_ + 1));
    for (VertexId v : cell) {
      if (v < 0 || static_cast<std::size_t>(v) >= vertices_.size())
        throw Error("top cell " + std::to_string(c) + " references unknown vertex " + std::to_string(v));
      used[static_cast<std::size_t>(v)] = true;
    }
    std::vector<std::size_t> order(cell.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return vertices_[static_cast<std::size_t>(cell[a])].color < vertices_[static_cast<std::size_t>(cell[b])].color;
    });
    Cell sorted(cell.size());
    for (std::size_t k = 0; k < order.size(); ++k) sorted[k] = cell[order[k]];
    for (std::size_t k = 1; k < sorted.size(); ++k) {
      if (vertex(sorted[k]).color == vertex(sorted[k - 1]).color)
        throw Error("top cell " + std::to_string(c) + " repeats color " + std::to_string(vertex(sorted[k]).color));
    }
    if (!shifts_.empty()) {
      if (shifts_[c].size() != cell.size()) throw Error("shift row size mismatch in cell " + std::to_string(c));
      std::vector<LatticeShift> row(cell.size());
      for (std::size_t k = 0; k < order.size(); ++k) row[k] = shifts_[c][order[k]];
      shifts_[c] = std::move(row);
    }
    cell = std::move(sorted);
  }
  for (std::size_t v = 0; v < used.size(); ++v) {
    if (!used[v]) throw Error("vertex " + std::to_string(v) + " lies in no top cell");
  }
}

LatticeShift ChromaticComplex::shift(std::size_t cell, std::size_t slot) const {
  if (shifts_.empty()) return {};
  return shifts_.at(cell).at(slot);
}

ColorSet ChromaticComplex::colors() const {
  ColorSet s;
  for (const auto& v : vertices_) s = s.with(v.color);
  return s;
}

std::vector<std::vector<std::size_t>> ChromaticComplex::vertex_cells() const {
  std::vector<std::vector<std::size_t>> out(vertices_.size());
  for (std::size_t c = 0; c < cells_.size(); ++c)
    for (VertexId v : cells_[c]) out[static_cast<std::size_t>(v)].push_back(c);
  return out;
}

ComplexPtr standard_simplex(int n) {
  if (n < 0 || n >= ColorSet::kMaxColors) throw Error("simplex dimension out of range");
  std::vector<ChromaticVertex> vertices;
  Cell cell;
  for (int i = 0; i <= n; ++i) {
    vertices.push_back({i, ColorSet::singleton(i)});
    cell.push_back(i);
  }
  return std::make_shared<const ChromaticComplex>(n, std::move(vertices), std::vector<Cell>{cell});
}

ChromaticComplex facet_subcomplex(const ChromaticComplex& complex, int dropped_color) {
  if (complex.dim() == 0) throw Error("no proper facet");
  if (dropped_color < 0 || dropped_color > complex.dim())
    throw Error("dropped color " + std::to_string(dropped_color) + " outside 0.." + std::to_string(complex.dim()));

  std::map<VertexId, VertexId> renumber;
  std::vector<ChromaticVertex> vertices;
  std::set<Cell> facets;
  std::vector<Cell> cells;
  for (const Cell& cell : complex.top_cells()) {
    Cell facet;
    for (VertexId v : cell) {
      if (!complex.vertex(v).view.contains(dropped_color)) facet.push_back(v);
    }
    if (facet.size() != static_cast<std::size_t>(complex.dim())) continue;
    Cell sorted = facet;
    std::sort(sorted.begin(), sorted.end());
    if (!facets.insert(sorted).second) continue;
    Cell mapped;
    for (VertexId v : facet) {
      auto [it, inserted] = renumber.try_emplace(v, static_cast<VertexId>(vertices.size()));
      if (inserted) {
        const auto& old = complex.vertex(v);
        vertices.push_back({old.color > dropped_color ? old.color - 1 : old.color,
                            old.view.drop_and_renumber(dropped_color)});
      }
      mapped.push_back(it->second);
    }
    cells.push_back(std::move(mapped));
  }
  return ChromaticComplex(complex.dim() - 1, std::move(vertices), std::move(cells));
}

std::vector<std::vector<ChromaticVertex>> label_cells(const ChromaticComplex& complex) {
  std::vector<std::vector<ChromaticVertex>> out;
  out.reserve(complex.cell_count());
  for (const Cell& cell : complex.top_cells()) {
    std::vector<ChromaticVertex> labels;
    for (VertexId v : cell) labels.push_back(complex.vertex(v));
    std::sort(labels.begin(), labels.end());
    out.push_back(std::move(labels));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chromfold
