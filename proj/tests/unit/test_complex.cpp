#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chromfold/complex.hpp"
#include "chromfold/error.hpp"
#include "chromfold/io.hpp"
#include "chromfold/realization.hpp"
#include "chromfold/simplicial_map.hpp"
#include "chromfold/subdivision.hpp"

using namespace chromfold;

namespace {

// Volume of a simplex from its pairwise distances (Cayley-Menger), used as an
// oracle independent of the determinant in volumes().
double cayley_menger_volume(const std::vector<Eigen::VectorXd>& p) {
  const int k = static_cast<int>(p.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Ones(k + 1, k + 1);
  m(0, 0) = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m(i + 1, j + 1) = (p[i] - p[j]).squaredNorm();
  const int n = k - 1;
  double factorial = 1.0;
  for (int i = 2; i <= n; ++i) factorial *= i;
  const double sign = (n + 1) % 2 == 0 ? 1.0 : -1.0;
  return std::sqrt(sign * m.determinant() / (std::pow(2.0, n) * factorial * factorial));
}

ComplexPtr chi(int n) { return chromatic_subdivide_simplex(n).subdivided; }

}  // namespace

TEST(ColorSet, LexicographicOrder) {
  EXPECT_LT(ColorSet::of({0}), ColorSet::of({0, 1}));
  EXPECT_LT(ColorSet::of({0, 1}), ColorSet::of({1}));
  EXPECT_LT(ColorSet::of({0, 2}), ColorSet::of({1}));
  EXPECT_LT(ColorSet::of({0, 1, 2}), ColorSet::of({0, 2}));
  EXPECT_EQ(ColorSet::of({2, 0}), ColorSet::of({0, 2}));
}

TEST(ColorSet, DropAndRenumber) {
  EXPECT_EQ(ColorSet::of({0, 2, 3}).drop_and_renumber(1), ColorSet::of({0, 1, 2}));
  EXPECT_EQ(ColorSet::of({0, 1}).drop_and_renumber(1), ColorSet::of({0}));
  EXPECT_EQ(ColorSet::full(2).members(), (std::vector<int>{0, 1, 2}));
}

TEST(ChromaticComplex, RejectsRepeatedColorInCell) {
  std::vector<ChromaticVertex> v{{0, ColorSet::of({0})}, {0, ColorSet::of({0, 1})}};
  EXPECT_THROW(ChromaticComplex(1, v, {{0, 1}}), Error);
}

TEST(ChromaticComplex, RejectsUnusedVertex) {
  std::vector<ChromaticVertex> v{{0, ColorSet::of({0})}, {1, ColorSet::of({1})}, {1, ColorSet::of({0, 1})}};
  EXPECT_THROW(ChromaticComplex(1, v, {{0, 1}}), Error);
}

TEST(ChromaticComplex, CellsStoredInColorOrder) {
  std::vector<ChromaticVertex> v{{1, ColorSet::of({1})}, {0, ColorSet::of({0})}};
  ChromaticComplex k(1, v, {{0, 1}});
  EXPECT_EQ(k.top_cell(0), (Cell{1, 0}));
}

TEST(FacetSubcomplex, ChiOneDropOneIsSingleVertex) {
  auto facet = facet_subcomplex(*chi(1), 1);
  EXPECT_EQ(facet.dim(), 0);
  ASSERT_EQ(facet.vertex_count(), 1u);
  EXPECT_EQ(facet.vertex(0).color, 0);
  EXPECT_EQ(facet.vertex(0).view, ColorSet::of({0}));
}

TEST(FacetSubcomplex, FacetOfSimplexIsSimplex) {
  for (int n = 1; n <= 4; ++n)
    for (int j = 0; j <= n; ++j)
      EXPECT_EQ(label_cells(facet_subcomplex(*standard_simplex(n), j)), label_cells(*standard_simplex(n - 1)));
}

TEST(FacetSubcomplex, ChiTwoDropTwoIsChiOne) {
  auto facet = facet_subcomplex(*chi(2), 2);
  EXPECT_EQ(facet.cell_count(), 3u);
  EXPECT_EQ(facet.vertex_count(), 4u);
  EXPECT_EQ(label_cells(facet), label_cells(*chi(1)));
}

TEST(FacetSubcomplex, PointHasNoFacet) {
  try {
    facet_subcomplex(*standard_simplex(0), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("no proper facet"), std::string::npos);
  }
}

TEST(FacetSubcomplex, DropOrderCommutes) {
  auto k = chi(3);
  for (int a = 0; a <= 3; ++a)
    for (int b = a + 1; b <= 3; ++b) {
      // Dropping a then b (renumbered to b - 1) equals dropping b then a.
      auto first = facet_subcomplex(facet_subcomplex(*k, a), b - 1);
      auto second = facet_subcomplex(facet_subcomplex(*k, b), a);
      EXPECT_EQ(label_cells(first), label_cells(second)) << a << "," << b;
    }
}

TEST(SimplicialMap, IdentityIsSimplicial) {
  auto k = chi(2);
  EXPECT_TRUE(is_simplicial(SimplicialMap::identity(k)));
}

TEST(SimplicialMap, FoldOfChiOneIsSimplicialAndChromatic) {
  auto level = chromatic_subdivide_simplex(1);
  EXPECT_TRUE(is_simplicial(level.fold));
  EXPECT_TRUE(preserves_colors(level.fold));
}

TEST(SimplicialMap, NonEdgeImageIsNotSimplicial) {
  // Send the boundary vertices (0,{0}) and (1,{0,1}) of an edge of χ(Δ^2)
  // to two vertices of χ(Δ^2) that span no edge: the corners (0,{0}) and (1,{1}).
  auto k = chi(2);
  auto find = [&](int color, ColorSet view) {
    for (std::size_t v = 0; v < k->vertex_count(); ++v)
      if (k->vertex(static_cast<VertexId>(v)) == ChromaticVertex{color, view}) return static_cast<VertexId>(v);
    return -1;
  };
  std::vector<VertexId> map(k->vertex_count());
  std::iota(map.begin(), map.end(), 0);
  map[static_cast<std::size_t>(find(1, ColorSet::of({0, 1})))] = find(1, ColorSet::of({1}));
  EXPECT_FALSE(is_simplicial(SimplicialMap(k, k, map)));
}

TEST(SimplicialMap, UnknownTargetVertexThrows) {
  auto k = chi(1);
  std::vector<VertexId> map(k->vertex_count(), 0);
  map[0] = 99;
  EXPECT_THROW(is_simplicial(SimplicialMap(k, standard_simplex(1), map)), Error);
}

TEST(Volumes, UnitInterval) {
  auto v = volumes(*standard_simplex(1), standard_simplex_realization(1));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NEAR(v[0], 1.0, 1e-15);
}

TEST(Volumes, ChiOneEqualThirds) {
  auto level = chromatic_subdivide_simplex(1);
  auto v = volumes(*level.subdivided, realize(level, PlacementParameter(1.0)));
  ASSERT_EQ(v.size(), 3u);
  for (double x : v) EXPECT_NEAR(x, 1.0 / 3.0, 1e-15);
}

TEST(Volumes, ChiTwoSumsToChartArea) {
  auto level = chromatic_subdivide_simplex(2);
  auto r = realize(level, PlacementParameter(1.0));
  auto v = volumes(*level.subdivided, r);
  ASSERT_EQ(v.size(), 13u);
  for (double x : v) EXPECT_GT(x, 0.0);
  EXPECT_NEAR(std::accumulate(v.begin(), v.end(), 0.0), 0.5, 1e-12);
}

TEST(Volumes, AgreesWithCayleyMenger) {
  for (int n = 1; n <= 3; ++n) {
    auto level = chromatic_subdivide_simplex(n);
    auto r = realize(level, PlacementParameter(0.5));
    auto v = volumes(*level.subdivided, r);
    for (std::size_t c = 0; c < v.size(); ++c) {
      std::vector<Eigen::VectorXd> pts;
      for (VertexId id : level.subdivided->top_cell(c)) pts.push_back(r.to_chart(r.position(id)));
      EXPECT_NEAR(v[c], cayley_menger_volume(pts), 1e-12) << "n=" << n << " cell " << c;
    }
  }
}

TEST(Volumes, DegenerateCellNamed) {
  std::vector<ChromaticVertex> v{{0, ColorSet::of({0})}, {1, ColorSet::of({1})}};
  ChromaticComplex k(1, v, {{0, 1}});
  Eigen::VectorXd p(2);
  p << 0.5, 0.5;
  auto r = Realization::barycentric({p, p});
  try {
    volumes(k, r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("cell 0"), std::string::npos);
  }
}

TEST(Realization, RejectsBadBarycentricRow) {
  Eigen::VectorXd p(2);
  p << 0.6, 0.6;
  EXPECT_THROW(Realization::barycentric({p}), Error);
}

TEST(Mesh, KnownValues) {
  EXPECT_NEAR(mesh(*standard_simplex(1), standard_simplex_realization(1)), 1.0, 1e-15);
  auto level = chromatic_subdivide_simplex(1);
  EXPECT_NEAR(mesh(*level.subdivided, realize(level, PlacementParameter(1.0))), 1.0 / 3.0, 1e-15);
}

TEST(Json, ComplexRoundTrip) {
  auto level = chromatic_subdivide_simplex(2);
  auto r = realize(level, PlacementParameter(1.0));
  const std::string text = complex_to_json(*level.subdivided, &r);
  auto doc = complex_from_json(text);
  EXPECT_EQ(label_cells(doc.complex), label_cells(*level.subdivided));
  ASSERT_TRUE(doc.realization.has_value());
  for (std::size_t v = 0; v < r.size(); ++v)
    EXPECT_LT((doc.realization->position(static_cast<VertexId>(v)) - r.position(static_cast<VertexId>(v))).norm(),
              1e-15);
  EXPECT_EQ(complex_to_json(doc.complex, &*doc.realization), text);
}

TEST(Json, MalformedInputThrows) {
  EXPECT_THROW(complex_from_json("{\"dim\": 1}"), Error);
  EXPECT_THROW(complex_from_json("not json"), Error);
}
