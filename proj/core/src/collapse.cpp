#include "chromfold/collapse.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "chromfold/error.hpp"

namespace chromfold {

namespace {

std::vector<Simplex> facets_of(const Simplex& s) {
  std::vector<Simplex> out;
  if (s.size() < 2) return out;
  for (std::size_t skip = 0; skip < s.size(); ++skip) {
    Simplex f;
    for (std::size_t k = 0; k < s.size(); ++k)
      if (k != skip) f.push_back(s[k]);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<int> vertex_set(const SimplicialComplex& complex) {
  std::vector<int> out;
  for (const Simplex& s : complex.simplices())
    if (s.size() == 1) out.push_back(s[0]);
  return out;
}

std::string describe(const Simplex& s) {
  std::string out = "[";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "]";
}

}  // namespace

SimplicialComplex SimplicialComplex::from_cells(const std::vector<Simplex>& cells) {
  SimplicialComplex out;
  for (Simplex cell : cells) {
    std::sort(cell.begin(), cell.end());
    if (std::adjacent_find(cell.begin(), cell.end()) != cell.end()) throw Error("simplex repeats a vertex");
    if (cell.empty() || cell.size() > 30) throw Error("simplex size out of range");
    const unsigned count = 1u << cell.size();
    for (unsigned mask = 1; mask < count; ++mask) {
      Simplex face;
      for (std::size_t k = 0; k < cell.size(); ++k)
        if (mask & (1u << k)) face.push_back(cell[k]);
      out.simplices_.insert(std::move(face));
    }
  }
  return out;
}

SimplicialComplex SimplicialComplex::from_chromatic(const ChromaticComplex& complex) {
  std::vector<Simplex> cells(complex.top_cells().begin(), complex.top_cells().end());
  return from_cells(cells);
}

bool SimplicialComplex::contains(const SimplicialComplex& other) const {
  return std::includes(simplices_.begin(), simplices_.end(), other.simplices_.begin(), other.simplices_.end());
}

std::vector<Simplex> SimplicialComplex::maximal_cells() const {
  std::set<Simplex> covered;
  for (const Simplex& s : simplices_)
    for (Simplex& f : facets_of(s)) covered.insert(std::move(f));
  std::vector<Simplex> out;
  for (const Simplex& s : simplices_)
    if (!covered.count(s)) out.push_back(s);
  return out;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const Simplex& s : simplices_) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

void SimplicialComplex::remove_maximal(const Simplex& s) {
  if (!contains(s)) throw Error("simplex " + describe(s) + " is not in the complex");
  for (int w : vertex_set(*this)) {
    if (std::binary_search(s.begin(), s.end(), w)) continue;
    Simplex bigger = s;
    bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), w), w);
    if (contains(bigger)) throw Error("simplex " + describe(s) + " is not maximal");
  }
  simplices_.erase(s);
}

std::optional<CollapseStep> find_free_face(const SimplicialComplex& complex) {
  std::map<Simplex, std::pair<int, const Simplex*>> cofaces;
  for (const Simplex& s : complex.simplices()) {
    for (Simplex& f : facets_of(s)) {
      auto& entry = cofaces[std::move(f)];
      ++entry.first;
      entry.second = &s;
    }
  }
  std::optional<CollapseStep> best;
  for (const auto& [face, entry] : cofaces) {
    if (entry.first != 1) continue;
    if (!best || face.size() > best->face.size()) best = CollapseStep{*entry.second, face};
  }
  return best;
}

CollapseResult collapse_to(const SimplicialComplex& complex, const SimplicialComplex& target) {
  if (!complex.contains(target)) throw Error("target is not a subcomplex");

  const std::vector<Simplex> simplices(complex.simplices().begin(), complex.simplices().end());
  std::map<Simplex, int> id;
  for (std::size_t k = 0; k < simplices.size(); ++k) id.emplace(simplices[k], static_cast<int>(k));

  const std::size_t count = simplices.size();
  std::vector<std::vector<int>> facets(count), cofaces(count);
  std::vector<int> live_cofaces(count, 0);
  std::vector<bool> alive(count, true), protect(count, false);
  for (std::size_t k = 0; k < count; ++k) {
    protect[k] = target.contains(simplices[k]);
    for (const Simplex& f : facets_of(simplices[k])) {
      const int fid = id.at(f);
      facets[k].push_back(fid);
      cofaces[static_cast<std::size_t>(fid)].push_back(static_cast<int>(k));
      ++live_cofaces[static_cast<std::size_t>(fid)];
    }
  }

  // Bigger faces first, then lexicographic (ids follow lexicographic order).
  std::set<std::pair<int, int>> queue;
  auto consider = [&](int f) {
    const auto u = static_cast<std::size_t>(f);
    if (alive[u] && !protect[u] && live_cofaces[u] == 1) queue.insert({-static_cast<int>(simplices[u].size()), f});
  };
  for (std::size_t k = 0; k < count; ++k) consider(static_cast<int>(k));

  CollapseResult result;
  while (!queue.empty()) {
    const int f = queue.begin()->second;
    queue.erase(queue.begin());
    const auto fu = static_cast<std::size_t>(f);
    if (!alive[fu] || protect[fu] || live_cofaces[fu] != 1) continue;
    int cell = -1;
    for (int c : cofaces[fu])
      if (alive[static_cast<std::size_t>(c)]) cell = c;
    const auto cu = static_cast<std::size_t>(cell);
    if (protect[cu]) continue;

    alive[cu] = false;
    alive[fu] = false;
    for (int g : facets[cu]) {
      --live_cofaces[static_cast<std::size_t>(g)];
      consider(g);
    }
    for (int h : facets[fu]) {
      --live_cofaces[static_cast<std::size_t>(h)];
      consider(h);
    }
    result.filtration.steps.push_back({simplices[cu], simplices[fu]});
  }

  std::vector<Simplex> rest;
  for (std::size_t k = 0; k < count; ++k)
    if (alive[k]) rest.push_back(simplices[k]);
  result.remaining = SimplicialComplex::from_cells(rest);
  result.success = result.remaining == target;
  return result;
}

SimplicialComplex replay(const SimplicialComplex& complex, const Filtration& filtration) {
  SimplicialComplex current = complex;
  for (std::size_t k = 0; k < filtration.steps.size(); ++k) {
    const auto& step = filtration.steps[k];
    const std::string where = "step " + std::to_string(k) + ": ";
    if (!current.contains(step.cell) || !current.contains(step.face))
      throw Error(where + "simplex already removed");
    if (step.face.size() + 1 != step.cell.size() ||
        !std::includes(step.cell.begin(), step.cell.end(), step.face.begin(), step.face.end()))
      throw Error(where + describe(step.face) + " is not a facet of " + describe(step.cell));
    for (int w : vertex_set(current)) {
      if (std::binary_search(step.face.begin(), step.face.end(), w)) continue;
      Simplex coface = step.face;
      coface.insert(std::upper_bound(coface.begin(), coface.end(), w), w);
      if (coface != step.cell && current.contains(coface)) throw Error(where + describe(step.face) + " is not free");
    }
    current.remove_maximal(step.cell);
    current.remove_maximal(step.face);
  }
  return current;
}

SimplicialComplex PrismComplex::bottom() const {
  std::vector<Simplex> cells;
  for (const Simplex& s : base.maximal_cells()) {
    Simplex lifted;
    for (int v : s) lifted.push_back(vertex_id(v, 0));
    cells.push_back(std::move(lifted));
  }
  return SimplicialComplex::from_cells(cells);
}

SimplicialComplex PrismComplex::top() const {
  std::vector<Simplex> cells;
  for (const Simplex& s : base.maximal_cells()) {
    Simplex lifted;
    for (int v : s) lifted.push_back(vertex_id(v, 1));
    cells.push_back(std::move(lifted));
  }
  return SimplicialComplex::from_cells(cells);
}

PrismComplex whitney_prism(const SimplicialComplex& base) {
  PrismComplex prism;
  prism.base = base;
  for (const Simplex& s : base.maximal_cells()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex cell;
      for (std::size_t k = 0; k <= i; ++k) cell.push_back(PrismComplex::vertex_id(s[k], 0));
      for (std::size_t k = i; k < s.size(); ++k) cell.push_back(PrismComplex::vertex_id(s[k], 1));
      prism.top_cells.push_back(std::move(cell));
    }
  }
  prism.complex = SimplicialComplex::from_cells(prism.top_cells);
  return prism;
}

PrismComplex whitney_prism(const ChromaticComplex& base) {
  return whitney_prism(SimplicialComplex::from_chromatic(base));
}

}  // namespace chromfold
