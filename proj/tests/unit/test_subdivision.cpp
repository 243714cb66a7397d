#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "chromfold/error.hpp"
#include "chromfold/jiggling.hpp"
#include "chromfold/subdivision.hpp"

using namespace chromfold;

namespace {

// Ordered set partitions of a k-set: a(k) = Σ_{j=1..k} C(k, j) a(k - j).
std::uint64_t fubini_recurrence(int k) {
  std::vector<std::uint64_t> a(static_cast<std::size_t>(k) + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= k; ++m) {
    std::uint64_t binom = 1;
    for (int j = 1; j <= m; ++j) {
      binom = binom * static_cast<std::uint64_t>(m - j + 1) / static_cast<std::uint64_t>(j);
      a[static_cast<std::size_t>(m)] += binom * a[static_cast<std::size_t>(m - j)];
    }
  }
  return a[static_cast<std::size_t>(k)];
}

// Cells of χ(Δ^n) from the membership predicate: an assignment color -> view
// is a cell iff i ∈ σ_i, the views form a chain, and i ∈ σ_j implies σ_i ⊆ σ_j.
std::vector<std::vector<ColorSet>> predicate_cells(int n) {
  std::vector<std::vector<ColorSet>> out;
  const std::uint32_t sets = 1u << (n + 1);
  std::vector<ColorSet> views(static_cast<std::size_t>(n) + 1);
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
          const ColorSet& sa = views[static_cast<std::size_t>(a)];
          const ColorSet& sb = views[static_cast<std::size_t>(b)];
          if (!sa.subset_of(sb) && !sb.subset_of(sa)) return;
          if (sb.contains(a) && !sa.subset_of(sb)) return;
        }
      out.push_back(views);
      return;
    }
    for (std::uint32_t bits = 1; bits < sets; ++bits) {
      const ColorSet s = ColorSet::from_bits(bits);
      if (!s.contains(i)) continue;
      views[static_cast<std::size_t>(i)] = s;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

Eigen::VectorXd bary(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index k = 0;
  for (double x : v) out[k++] = x;
  return out;
}

VertexId find_vertex(const ChromaticComplex& k, int color, ColorSet view) {
  for (std::size_t v = 0; v < k.vertex_count(); ++v)
    if (k.vertex(static_cast<VertexId>(v)) == ChromaticVertex{color, view}) return static_cast<VertexId>(v);
  return -1;
}

}  // namespace

TEST(ChromaticTemplate, MatchesMembershipPredicate) {
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(chromatic_template(n), predicate_cells(n)) << "n=" << n;
}

TEST(ChromaticSubdivision, CountsAreFubini) {
  for (int n = 0; n <= 4; ++n)
    EXPECT_EQ(chromatic_subdivide_simplex(n).subdivided->cell_count(), fubini_recurrence(n + 1)) << "n=" << n;
}

TEST(ChromaticSubdivision, PointIsIdentity) {
  auto level = chromatic_subdivide_simplex(0);
  EXPECT_EQ(level.subdivided->vertex_count(), 1u);
  EXPECT_EQ(level.fold.vertex_map(), (std::vector<VertexId>{0}));
}

TEST(ChromaticSubdivision, DimensionOneExplicit) {
  auto level = chromatic_subdivide_simplex(1);
  const auto& k = *level.subdivided;
  EXPECT_EQ(k.vertex_count(), 4u);
  std::set<std::vector<ChromaticVertex>> cells;
  for (const auto& c : label_cells(k)) cells.insert(c);
  const ColorSet s0 = ColorSet::of({0}), s1 = ColorSet::of({1}), s01 = ColorSet::of({0, 1});
  std::set<std::vector<ChromaticVertex>> expected{
      {{0, s0}, {1, s01}},
      {{0, s01}, {1, s01}},
      {{0, s01}, {1, s1}},
  };
  EXPECT_EQ(cells, expected);
}

TEST(ChromaticSubdivision, FoldSendsVertexToItsColor) {
  for (int n = 0; n <= 3; ++n) {
    auto level = chromatic_subdivide_simplex(n);
    EXPECT_TRUE(is_simplicial(level.fold));
    EXPECT_TRUE(preserves_colors(level.fold));
    for (std::size_t v = 0; v < level.subdivided->vertex_count(); ++v)
      EXPECT_EQ(level.fold(static_cast<VertexId>(v)), level.subdivided->vertex(static_cast<VertexId>(v)).color);
  }
}

TEST(Placement, HandValues) {
  const PlacementParameter one(1.0);
  EXPECT_LT((placement(0, ColorSet::of({0}), 1, one) - bary({1, 0})).norm(), 1e-15);
  EXPECT_LT((placement(0, ColorSet::of({0, 1}), 1, one) - bary({1.0 / 3, 2.0 / 3})).norm(), 1e-15);
  EXPECT_LT((placement(1, ColorSet::of({0, 1}), 1, one) - bary({2.0 / 3, 1.0 / 3})).norm(), 1e-15);
  EXPECT_LT((placement(0, ColorSet::of({0, 1, 2}), 2, one) - bary({0.2, 0.4, 0.4})).norm(), 1e-15);
  // mu = 1/2, view {0,1}, color 0: (e0 + e1 + e1/2) / (2 + 1/2).
  EXPECT_LT((placement(0, ColorSet::of({0, 1}), 1, PlacementParameter(0.5)) - bary({0.4, 0.6})).norm(), 1e-15);
}

TEST(Placement, RejectsMuOutsideUnitInterval) {
  EXPECT_THROW(PlacementParameter(0.0), Error);
  EXPECT_THROW(PlacementParameter(1.5), Error);
  EXPECT_THROW(PlacementParameter(-0.1), Error);
  EXPECT_NO_THROW(PlacementParameter(1.0));
}

TEST(Placement, SupportIsExactlyTheView) {
  for (int n = 1; n <= 3; ++n) {
    auto level = chromatic_subdivide_simplex(n);
    auto r = realize(level, PlacementParameter(0.7));
    for (std::size_t v = 0; v < level.subdivided->vertex_count(); ++v) {
      const auto& vert = level.subdivided->vertex(static_cast<VertexId>(v));
      const auto& p = r.position(static_cast<VertexId>(v));
      for (int j = 0; j <= n; ++j) EXPECT_EQ(p[j] > 0.0, vert.view.contains(j));
    }
  }
}

TEST(Placement, InteriorSimplexIsInverted) {
  // The full-view vertices form a simplex whose vertex of color i lies opposite e_i.
  auto level = chromatic_subdivide_simplex(2);
  auto r = realize(level, PlacementParameter(1.0));
  for (int i = 0; i <= 2; ++i) {
    const auto& p = r.position(find_vertex(*level.subdivided, i, ColorSet::full(2)));
    for (int j = 0; j <= 2; ++j)
      if (j != i) EXPECT_GT(p[j], p[i]);
  }
}

TEST(Iterate, OrderZeroIsIdentity) {
  for (int n = 0; n <= 3; ++n) {
    auto f = iterate(n, 0, PlacementParameter(1.0));
    EXPECT_EQ(f.finest().cell_count(), 1u);
    std::vector<VertexId> id(static_cast<std::size_t>(n) + 1);
    std::iota(id.begin(), id.end(), 0);
    EXPECT_EQ(f.composite_fold.vertex_map(), id);
  }
}

TEST(Iterate, DimensionOneOrderTwo) {
  auto f = iterate(1, 2, PlacementParameter(1.0));
  ASSERT_EQ(f.finest().cell_count(), 9u);
  for (std::size_t c = 0; c < 9; ++c) EXPECT_NEAR(std::abs(fold_derivative(f, c)(0, 0)), 9.0, 1e-9);
}

TEST(Iterate, CountsMultiply) {
  EXPECT_EQ(iterate(2, 3, PlacementParameter(1.0)).finest().cell_count(), 2197u);
  EXPECT_EQ(iterate(3, 2, PlacementParameter(1.0)).finest().cell_count(), 75u * 75u);
}

TEST(Iterate, CompositeIsCompositionOfLevels) {
  auto f = iterate(2, 3, PlacementParameter(1.0));
  for (std::size_t v = 0; v < f.finest().vertex_count(); ++v) {
    VertexId x = static_cast<VertexId>(v);
    for (auto it = f.levels.rbegin(); it != f.levels.rend(); ++it) x = it->fold(x);
    EXPECT_EQ(f.composite_fold(static_cast<VertexId>(v)), x);
  }
}

TEST(Iterate, SizeLimit) {
  try {
    iterate(2, 4, PlacementParameter(1.0), 10000);
    FAIL();
  } catch (const SizeLimitError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("size limit", 0), 0u);
  }
}

TEST(Iterate, StrongGradientGrows) {
  for (int n = 1; n <= 2; ++n) {
    double previous = min_fold_singular_value(iterate(n, 1, PlacementParameter(1.0)));
    for (int r = 2; r <= 3; ++r) {
      const double current = min_fold_singular_value(iterate(n, r, PlacementParameter(1.0)));
      EXPECT_GT(current, 1.5 * previous) << "n=" << n << " r=" << r;
      previous = current;
    }
  }
}

TEST(Iterate, MeshShrinks) {
  double previous = 0.0;
  for (int r = 0; r <= 3; ++r) {
    auto f = iterate(2, r, PlacementParameter(1.0));
    const double m = mesh(f.finest(), f.finest_realization());
    if (r > 0) EXPECT_LT(m / previous, 0.9) << "r=" << r;
    previous = m;
  }
}

TEST(Lemma, CertificateHolds) {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 2; ++r) {
      auto report = certify_lemma(n, r, PlacementParameter(1.0));
      EXPECT_TRUE(report.ok()) << "n=" << n << " r=" << r;
      EXPECT_LT(report.max_facet_position_error, 1e-9);
    }
}

TEST(SubdivideComplex, SingleCellMatchesSimplex) {
  auto a = chromatic_subdivide_complex(standard_simplex(2));
  EXPECT_EQ(label_cells(*a.subdivided), label_cells(*chromatic_subdivide_simplex(2).subdivided));
}

TEST(SubdivideComplex, TwoTrianglesShareEdge) {
  std::vector<ChromaticVertex> v{{0, ColorSet::of({0})},
                                 {1, ColorSet::of({1})},
                                 {2, ColorSet::of({2})},
                                 {0, ColorSet::of({0})}};
  auto base = std::make_shared<const ChromaticComplex>(2, v, std::vector<Cell>{{0, 1, 2}, {3, 1, 2}});
  auto level = chromatic_subdivide_complex(base);
  EXPECT_EQ(level.subdivided->cell_count(), 26u);
  std::size_t on_edge = 0;
  for (const auto& c : level.carrier)
    if (std::all_of(c.begin(), c.end(), [](VertexId b) { return b == 1 || b == 2; })) ++on_edge;
  EXPECT_EQ(on_edge, 4u);
  // 13 + 13 vertices of χ(Δ^2) = 12 each, minus the 4 shared.
  EXPECT_EQ(level.subdivided->vertex_count(), 12u + 12u - 4u);
}

TEST(SubdivideComplex, TorusThreeByThree) {
  TorusModel torus(2, 3);
  EXPECT_EQ(torus.complex()->cell_count(), 18u);
  EXPECT_EQ(chromatic_subdivide_complex(torus.complex()).subdivided->cell_count(), 234u);
}

TEST(SubdivideComplex, ImproperColoringNamesCell) {
  std::vector<ChromaticVertex> v{{0, ColorSet::of({0})}, {3, ColorSet::of({3})}};
  auto base = std::make_shared<const ChromaticComplex>(1, v, std::vector<Cell>{{0, 1}});
  try {
    chromatic_subdivide_complex(base);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("top cell 0"), std::string::npos);
  }
}

TEST(Unfolding, EndpointsAndMiddleEdge) {
  auto f = iterate(1, 1, PlacementParameter(1.0));
  FoldEvaluator eval(f);
  const Eigen::VectorXd mid = bary({0.5, 0.5});
  for (double t : {0.0, 0.25, 0.5, 0.75, 1.0})
    EXPECT_LT((unfolding_homotopy(eval, t, mid) - mid).norm(), 1e-12) << t;
  const Eigen::VectorXd x = bary({0.9, 0.1});
  EXPECT_LT((unfolding_homotopy(eval, 1.0, x) - x).norm(), 1e-15);
  // Outer third: ŝ stretches [0, 1/3] onto [0, 1], so 0.1 -> 0.3.
  EXPECT_LT((unfolding_homotopy(eval, 0.0, x) - bary({0.7, 0.3})).norm(), 1e-12);
}

TEST(Unfolding, RejectsPointsOutsideSimplex) {
  auto f = iterate(2, 1, PlacementParameter(1.0));
  FoldEvaluator eval(f);
  EXPECT_THROW(unfolding_homotopy(eval, 0.5, bary({1.1, -0.1, 0.0})), Error);
  EXPECT_THROW(unfolding_homotopy(eval, 1.5, bary({1.0, 0.0, 0.0})), Error);
}

TEST(Unfolding, FoldFixesVertices) {
  auto f = iterate(2, 2, PlacementParameter(1.0));
  FoldEvaluator eval(f);
  const auto& fin = f.finest();
  for (std::size_t v = 0; v < fin.vertex_count(); ++v) {
    const Eigen::VectorXd image = eval.fold(f.finest_realization().position(static_cast<VertexId>(v)));
    Eigen::VectorXd expected = Eigen::VectorXd::Zero(3);
    expected[fin.vertex(static_cast<VertexId>(v)).color] = 1.0;
    EXPECT_LT((image - expected).norm(), 1e-9);
  }
}
