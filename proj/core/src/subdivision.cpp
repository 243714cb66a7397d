#include "chromfold/subdivision.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>

namespace chromfold {

PlacementParameter::PlacementParameter(double mu) : mu_(mu) {
  if (!(mu > 0.0 && mu <= 1.0)) throw Error("placement parameter mu must lie in (0, 1], got " + std::to_string(mu));
}

std::vector<std::vector<ColorSet>> chromatic_template(int n) {
  if (n < 0 || n + 1 >= ColorSet::kMaxColors) throw Error("simplex dimension out of range");
  using Partial = std::vector<ColorSet>;
  std::map<std::uint32_t, std::vector<Partial>> memo;
  memo[0] = {Partial(static_cast<std::size_t>(n) + 1)};

  // Cells of χ on the face spanned by `face`: every proper subface is already
  // subdivided; the colors outside it see the whole face.
  auto cells_of = [&](auto&& self, std::uint32_t face) -> const std::vector<Partial>& {
    if (auto it = memo.find(face); it != memo.end()) return it->second;
    std::vector<Partial> out;
    for (std::uint32_t sub = (face - 1) & face;; sub = (sub - 1) & face) {
      const ColorSet inner = ColorSet::from_bits(face) - ColorSet::from_bits(sub);
      for (const Partial& cell : self(self, sub)) {
        Partial joined = cell;
        for (int c : inner.members()) joined[static_cast<std::size_t>(c)] = ColorSet::from_bits(face);
        out.push_back(std::move(joined));
      }
      if (sub == 0) break;
    }
    return memo[face] = std::move(out);
  };

  std::vector<Partial> cells = cells_of(cells_of, ColorSet::full(n).bits());
  std::sort(cells.begin(), cells.end());
  return cells;
}

SubdivisionLevel chromatic_subdivide_complex(ComplexPtr base, std::size_t limit) {
  if (!base) throw Error("null base complex");
  const int n = base->dim();
  const auto tmpl = chromatic_template(n);
  for (std::size_t c = 0; c < base->cell_count(); ++c)
    for (VertexId v : base->top_cell(c))
      if (base->vertex(v).color > n)
        throw Error("improper coloring: top cell " + std::to_string(c) + " uses color " +
                    std::to_string(base->vertex(v).color) + " outside 0.." + std::to_string(n));
  if (base->cell_count() > limit / tmpl.size())
    throw SizeLimitError("size limit: subdivision would produce " + std::to_string(base->cell_count()) + " x " +
                         std::to_string(tmpl.size()) + " top cells (limit " + std::to_string(limit) + ")");

  std::map<std::pair<std::vector<int>, int>, VertexId> index;
  std::vector<ChromaticVertex> vertices;
  std::vector<Cell> cells;
  std::vector<std::vector<LatticeShift>> shifts;
  std::vector<std::vector<VertexId>> carrier;
  std::vector<std::vector<LatticeShift>> carrier_shifts;
  std::vector<VertexId> fold;
  std::vector<std::size_t> parent;
  cells.reserve(base->cell_count() * tmpl.size());
  parent.reserve(cells.capacity());

  const bool periodic = base->periodic();
  for (std::size_t c = 0; c < base->cell_count(); ++c) {
    const Cell& bc = base->top_cell(c);
    for (const auto& pattern : tmpl) {
      Cell cell(bc.size());
      std::vector<LatticeShift> cell_shift(periodic ? bc.size() : 0);
      for (std::size_t i = 0; i < bc.size(); ++i) {
        std::vector<std::size_t> slots;
        for (int s : pattern[i].members()) slots.push_back(static_cast<std::size_t>(s));
        std::sort(slots.begin(), slots.end(), [&](std::size_t a, std::size_t b) { return bc[a] < bc[b]; });
        const std::size_t first = slots.front();
        const LatticeShift origin = base->shift(c, first);

        std::vector<int> key;
        std::vector<VertexId> ids;
        std::vector<LatticeShift> rel;
        ColorSet view;
        for (std::size_t s : slots) {
          ids.push_back(bc[s]);
          key.push_back(bc[s]);
          view = view.with(base->vertex(bc[s]).color);
          if (periodic) {
            LatticeShift d = base->shift(c, s);
            for (std::size_t k = 0; k < d.size(); ++k) d[k] -= origin[k];
            key.insert(key.end(), d.begin(), d.end());
            rel.push_back(std::move(d));
          }
        }
        const int color = base->vertex(bc[i]).color;
        auto [it, inserted] = index.try_emplace({std::move(key), color}, static_cast<VertexId>(vertices.size()));
        if (inserted) {
          vertices.push_back({color, view});
          carrier.push_back(std::move(ids));
          if (periodic) carrier_shifts.push_back(std::move(rel));
          fold.push_back(bc[i]);
        }
        cell[i] = it->second;
        if (periodic) cell_shift[i] = origin;
      }
      cells.push_back(std::move(cell));
      if (periodic) shifts.push_back(std::move(cell_shift));
      parent.push_back(c);
    }
  }

  auto subdivided = std::make_shared<const ChromaticComplex>(n, std::move(vertices), std::move(cells), std::move(shifts));
  SimplicialMap fold_map(subdivided, base, std::move(fold), true);
  return SubdivisionLevel{base, subdivided, std::move(fold_map), std::move(carrier), std::move(carrier_shifts),
                          std::move(parent)};
}

SubdivisionLevel chromatic_subdivide_simplex(int n) { return chromatic_subdivide_complex(standard_simplex(n)); }

Eigen::VectorXd placement(int color, ColorSet view, int n, PlacementParameter mu) {
  if (!view.contains(color)) throw Error("color not in view");
  Eigen::VectorXd p = Eigen::VectorXd::Zero(n + 1);
  for (int j : view.members()) p(j) = j == color ? 1.0 : 1.0 + mu.value();
  return p / (view.size() + mu.value() * (view.size() - 1));
}

Realization realize(const SubdivisionLevel& level, const Realization& base, PlacementParameter mu) {
  if (base.size() != level.base->vertex_count()) throw Error("base realization does not match base complex");
  const auto& complex = *level.subdivided;
  std::vector<Eigen::VectorXd> positions;
  positions.reserve(complex.vertex_count());
  for (std::size_t v = 0; v < complex.vertex_count(); ++v) {
    const auto& label = complex.vertex(static_cast<VertexId>(v));
    const auto& ids = level.carrier[v];
    Eigen::VectorXd p = Eigen::VectorXd::Zero(base.position(ids.front()).size());
    for (std::size_t k = 0; k < ids.size(); ++k) {
      const double w = level.base->vertex(ids[k]).color == label.color ? 1.0 : 1.0 + mu.value();
      Eigen::VectorXd q = base.position(ids[k]);
      if (!level.carrier_shifts.empty()) {
        const auto& s = level.carrier_shifts[v][k];
        for (std::size_t d = 0; d < s.size(); ++d) q(static_cast<Eigen::Index>(d)) += base.period() * s[d];
      }
      p += w * q;
    }
    const auto size = static_cast<double>(ids.size());
    positions.push_back(p / (size + mu.value() * (size - 1.0)));
  }
  if (base.chart() == Chart::kBarycentric) return Realization::barycentric(std::move(positions));
  return Realization::ambient(std::move(positions), base.period());
}

Realization realize(const SubdivisionLevel& level, PlacementParameter mu) {
  return realize(level, standard_simplex_realization(level.base->dim()), mu);
}

const ChromaticComplex& IteratedFolding::base() const { return composite_fold.target(); }
const ChromaticComplex& IteratedFolding::finest() const { return composite_fold.source(); }
const ComplexPtr& IteratedFolding::finest_ptr() const { return composite_fold.source_ptr(); }

IteratedFolding iterate(ComplexPtr base, const Realization& base_realization, int r, PlacementParameter mu,
                        std::size_t limit) {
  if (r < 0) throw Error("iteration order must be non-negative");
  IteratedFolding out{r, {}, {base_realization}, SimplicialMap::identity(base), {}};
  out.root_cell.resize(base->cell_count());
  for (std::size_t c = 0; c < out.root_cell.size(); ++c) out.root_cell[c] = c;

  ComplexPtr current = base;
  for (int k = 1; k <= r; ++k) {
    SubdivisionLevel level = chromatic_subdivide_complex(current, limit);
    out.realizations.push_back(realize(level, out.realizations.back(), mu));
    std::vector<std::size_t> roots(level.parent_cell.size());
    for (std::size_t c = 0; c < roots.size(); ++c) roots[c] = out.root_cell[level.parent_cell[c]];
    out.root_cell = std::move(roots);
    out.composite_fold = out.composite_fold.after(level.fold);
    current = level.subdivided;
    out.levels.push_back(std::move(level));
  }
  return out;
}

IteratedFolding iterate(int n, int r, PlacementParameter mu, std::size_t limit) {
  return iterate(standard_simplex(n), standard_simplex_realization(n), r, mu, limit);
}

Eigen::MatrixXd fold_derivative(const IteratedFolding& folding, std::size_t cell) {
  const Eigen::MatrixXd x = folding.finest_realization().cell_points(folding.finest(), cell);
  const Eigen::MatrixXd y = folding.realizations.front().cell_points(folding.base(), folding.root_cell.at(cell));
  return edge_matrix(y) * edge_matrix(x).inverse();
}

double min_fold_singular_value(const IteratedFolding& folding) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < folding.finest().cell_count(); ++c) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(fold_derivative(folding, c));
    best = std::min(best, svd.singularValues().minCoeff());
  }
  return best;
}

std::vector<ColorSet> root_support(const IteratedFolding& folding) {
  const auto& base = folding.base();
  std::vector<ColorSet> support(base.vertex_count());
  for (std::size_t v = 0; v < support.size(); ++v) support[v] = ColorSet::singleton(base.vertex(static_cast<VertexId>(v)).color);
  for (const auto& level : folding.levels) {
    std::vector<ColorSet> next(level.subdivided->vertex_count());
    for (std::size_t v = 0; v < next.size(); ++v)
      for (VertexId b : level.carrier[v]) next[v] = next[v] | support[static_cast<std::size_t>(b)];
    support = std::move(next);
  }
  return support;
}

std::vector<std::string> structural_names(const IteratedFolding& folding, const std::vector<int>& base_relabel) {
  const auto& base = folding.base();
  std::vector<std::string> names(base.vertex_count());
  for (std::size_t v = 0; v < names.size(); ++v)
    names[v] = std::to_string(base_relabel.empty() ? base.vertex(static_cast<VertexId>(v)).color : base_relabel[v]);
  for (const auto& level : folding.levels) {
    std::vector<std::string> next(level.subdivided->vertex_count());
    for (std::size_t v = 0; v < next.size(); ++v) {
      std::vector<std::string> parts;
      for (VertexId b : level.carrier[v]) parts.push_back(names[static_cast<std::size_t>(b)]);
      std::sort(parts.begin(), parts.end());
      std::string name = "[" + names[static_cast<std::size_t>(level.fold(static_cast<VertexId>(v)))] + "|";
      for (std::size_t k = 0; k < parts.size(); ++k) name += (k ? "," : "") + parts[k];
      next[v] = name + "]";
    }
    names = std::move(next);
  }
  return names;
}

LemmaReport certify_lemma(int n, int r, PlacementParameter mu) {
  LemmaReport report;
  const IteratedFolding full = iterate(n, r, mu);
  const auto& finest = full.finest();
  report.min_abs_determinant = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < finest.cell_count(); ++c) {
    ColorSet image;
    for (VertexId v : finest.top_cell(c)) image = image.with(full.base().vertex(full.composite_fold(v)).color);
    if (image != ColorSet::full(n)) {
      report.colors_bijective = false;
      report.failures.push_back("fold not bijective on cell " + std::to_string(c));
    }
    const double det = n == 0 ? 1.0 : std::abs(fold_derivative(full, c).determinant());
    report.min_abs_determinant = std::min(report.min_abs_determinant, det);
    if (!(det > kConstructionTolerance)) {
      report.determinants_nonzero = false;
      report.failures.push_back("vanishing fold Jacobian on cell " + std::to_string(c));
    }
  }
  if (n == 0) return report;

  const IteratedFolding lower = iterate(n - 1, r, mu);
  const auto lower_names = structural_names(lower);
  std::set<std::vector<std::string>> lower_cells;
  std::map<std::string, Eigen::VectorXd> lower_positions;
  for (std::size_t c = 0; c < lower.finest().cell_count(); ++c) {
    std::vector<std::string> cell;
    for (VertexId v : lower.finest().top_cell(c)) {
      cell.push_back(lower_names[static_cast<std::size_t>(v)]);
      lower_positions[lower_names[static_cast<std::size_t>(v)]] = lower.finest_realization().position(v);
    }
    std::sort(cell.begin(), cell.end());
    lower_cells.insert(std::move(cell));
  }

  const auto support = root_support(full);
  for (int j = 0; j <= n; ++j) {
    std::vector<int> relabel(static_cast<std::size_t>(n) + 1);
    for (int c = 0; c <= n; ++c) relabel[static_cast<std::size_t>(c)] = c > j ? c - 1 : c;
    const auto names = structural_names(full, relabel);
    std::set<std::vector<std::string>> facet_cells;
    for (const Cell& cell : finest.top_cells()) {
      std::vector<std::string> facet;
      for (VertexId v : cell) {
        if (support[static_cast<std::size_t>(v)].contains(j)) continue;
        facet.push_back(names[static_cast<std::size_t>(v)]);
        Eigen::VectorXd p = full.finest_realization().position(v);
        Eigen::VectorXd dropped(n);
        for (int k = 0, m = 0; k <= n; ++k)
          if (k != j) dropped(m++) = p(k);
        const auto it = lower_positions.find(names[static_cast<std::size_t>(v)]);
        if (it == lower_positions.end()) {
          report.heredity = false;
          report.failures.push_back("facet " + std::to_string(j) + ": vertex " + names[static_cast<std::size_t>(v)] +
                                    " has no counterpart");
          continue;
        }
        report.max_facet_position_error =
            std::max(report.max_facet_position_error, (dropped - it->second).lpNorm<Eigen::Infinity>());
      }
      if (facet.size() != static_cast<std::size_t>(n)) continue;
      std::sort(facet.begin(), facet.end());
      facet_cells.insert(std::move(facet));
    }
    if (facet_cells != lower_cells) {
      report.heredity = false;
      report.failures.push_back("facet " + std::to_string(j) + " is not a copy of the lower-dimensional subdivision");
    }
  }
  if (report.max_facet_position_error > kTestTolerance) {
    report.heredity = false;
    report.failures.push_back("facet positions disagree with the lower-dimensional placement");
  }
  return report;
}

FoldEvaluator::FoldEvaluator(const IteratedFolding& folding) : folding_(&folding), dim_(folding.base().dim()) {
  if (folding.realizations.front().chart() != Chart::kBarycentric)
    throw Error("fold evaluation needs a barycentric realization");
  frames_.resize(folding.levels.size());
  children_.resize(folding.levels.size());
  for (std::size_t k = 0; k < folding.levels.size(); ++k) {
    const auto& level = folding.levels[k];
    const auto& real = folding.realizations[k + 1];
    frames_[k].reserve(level.subdivided->cell_count());
    children_[k].resize(level.base->cell_count());
    for (std::size_t c = 0; c < level.subdivided->cell_count(); ++c) {
      const Eigen::MatrixXd pts = real.cell_points(*level.subdivided, c);
      frames_[k].push_back({pts.row(0).transpose(), dim_ == 0 ? Eigen::MatrixXd() : edge_matrix(pts).inverse().eval()});
      children_[k][level.parent_cell[c]].push_back(c);
    }
  }
}

Eigen::VectorXd FoldEvaluator::local_coordinates(std::size_t level, std::size_t cell, const Eigen::VectorXd& chart) const {
  Eigen::VectorXd lambda(dim_ + 1);
  if (dim_ == 0) {
    lambda(0) = 1.0;
    return lambda;
  }
  const auto& frame = frames_[level][cell];
  const Eigen::VectorXd rest = frame.inverse * (chart - frame.origin);
  lambda(0) = 1.0 - rest.sum();
  lambda.tail(dim_) = rest;
  return lambda;
}

std::pair<std::size_t, Eigen::VectorXd> FoldEvaluator::locate(const Eigen::VectorXd& point) const {
  const Eigen::VectorXd chart = point.tail(point.size() - 1);
  if (folding_->levels.empty()) {
    Eigen::MatrixXd base_pts = folding_->realizations.front().cell_points(folding_->base(), 0);
    Eigen::VectorXd lambda(dim_ + 1);
    if (dim_ == 0) {
      lambda(0) = 1.0;
    } else {
      const Eigen::VectorXd rest = edge_matrix(base_pts).inverse() * (chart - base_pts.row(0).transpose());
      lambda(0) = 1.0 - rest.sum();
      lambda.tail(dim_) = rest;
    }
    return {0, lambda};
  }

  auto best_of = [&](std::size_t level, const std::vector<std::size_t>& candidates) {
    std::size_t best = candidates.front();
    double best_score = -std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_lambda;
    for (std::size_t c : candidates) {
      Eigen::VectorXd lambda = local_coordinates(level, c, chart);
      const double score = lambda.minCoeff();
      if (score > best_score) {
        best_score = score;
        best = c;
        best_lambda = std::move(lambda);
      }
    }
    return std::tuple{best, best_score, best_lambda};
  };

  std::vector<std::size_t> candidates;
  for (const auto& group : children_[0]) candidates.insert(candidates.end(), group.begin(), group.end());
  std::size_t cell = 0;
  Eigen::VectorXd lambda;
  for (std::size_t k = 0; k < frames_.size(); ++k) {
    auto [best, score, coords] = best_of(k, candidates);
    if (score < -kTestTolerance) {
      std::vector<std::size_t> all(frames_[k].size());
      for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
      std::tie(best, score, coords) = best_of(k, all);
    }
    cell = best;
    lambda = std::move(coords);
    if (k + 1 < frames_.size()) candidates = children_[k + 1][cell];
  }
  return {cell, lambda};
}

Eigen::VectorXd FoldEvaluator::fold(const Eigen::VectorXd& point) const {
  const auto [cell, lambda] = locate(point);
  const auto& base_real = folding_->realizations.front();
  const Cell& root = folding_->base().top_cell(folding_->root_cell[cell]);
  Eigen::VectorXd image = Eigen::VectorXd::Zero(point.size());
  for (std::size_t k = 0; k < root.size(); ++k) image += lambda(static_cast<Eigen::Index>(k)) * base_real.position(root[k]);
  return image;
}

Eigen::VectorXd unfolding_homotopy(const FoldEvaluator& evaluator, double t, const Eigen::VectorXd& point) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error("homotopy time must lie in [0, 1]");
  if (point.size() != evaluator.dim() + 1) throw Error("point has the wrong number of barycentric coordinates");
  if (std::abs(point.sum() - 1.0) > kTestTolerance || point.minCoeff() < -kTestTolerance)
    throw Error("point lies outside the simplex");
  return (1.0 - t) * evaluator.fold(point) + t * point;
}

}  // namespace chromfold
