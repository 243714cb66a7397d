#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "chromfold/error.hpp"
#include "chromfold/jiggling.hpp"

using namespace chromfold;

namespace {

PlaneField scalar(double a) { return {Eigen::MatrixXd::Constant(1, 1, a)}; }

Eigen::MatrixXd m1(double d) { return Eigen::MatrixXd::Constant(1, 1, d); }

}  // namespace

TEST(TorusModel, Validation) {
  EXPECT_THROW(TorusModel(2, 4), Error);
  EXPECT_THROW(TorusModel(2, 2), Error);
  EXPECT_THROW(TorusModel(0, 3), Error);
  EXPECT_NO_THROW(TorusModel(1, 2));
  EXPECT_NO_THROW(TorusModel(3, 4));
}

TEST(TorusModel, KuhnCounts) {
  EXPECT_EQ(TorusModel(1, 2).complex()->cell_count(), 2u);
  EXPECT_EQ(TorusModel(2, 3).complex()->cell_count(), 18u);
  EXPECT_EQ(TorusModel(2, 3).complex()->vertex_count(), 9u);
  EXPECT_EQ(TorusModel(3, 4).complex()->cell_count(), 64u * 6u);
}

TEST(TorusModel, ExpWrapsAround) {
  TorusModel t(2, 3);
  Eigen::VectorXd x(2), u(2);
  x << 2.5, 0.5;
  u << 1.0, -1.0;
  Eigen::VectorXd expected(2);
  expected << 0.5, 2.5;
  EXPECT_LT((t.exp(x, u) - expected).norm(), 1e-15);
}

TEST(Section, OrderZeroIsZero) {
  TorusModel t(2, 3);
  auto s = build_section(t, 0, PlacementParameter(1.0));
  ASSERT_EQ(s.pieces().size(), 18u);
  for (const auto& p : s.pieces()) {
    EXPECT_LT((p.derivative - Eigen::MatrixXd::Identity(2, 2)).norm(), 1e-12);
    EXPECT_LT(p.offset.norm(), 1e-12);
  }
}

TEST(Section, CircleOrderOneSlopes) {
  TorusModel t(1, 2);
  auto s = build_section(t, 1, PlacementParameter(1.0));
  ASSERT_EQ(s.pieces().size(), 6u);
  std::multiset<long> slopes;
  for (const auto& p : s.pieces()) slopes.insert(std::lround(p.derivative(0, 0)));
  EXPECT_EQ(slopes, (std::multiset<long>{-3, -3, 3, 3, 3, 3}));
}

TEST(Section, TorusPieceCount) {
  TorusModel t(2, 3);
  EXPECT_EQ(build_section(t, 1, PlacementParameter(1.0)).pieces().size(), 234u);
}

TEST(Section, ContinuousAcrossFaces) {
  for (int n = 1; n <= 3; ++n) {
    TorusModel t(n, n + 1);
    const int r = n == 3 ? 1 : 2;
    EXPECT_LT(build_section(t, r, PlacementParameter(0.8)).max_face_mismatch(), 1e-9) << n;
  }
}

TEST(Section, FoldsEachCellOntoItself) {
  TorusModel t(2, 3);
  auto s = build_section(t, 2, PlacementParameter(1.0));
  const auto& f = s.folding();
  for (std::size_t c = 0; c < f.finest().cell_count(); ++c) {
    ColorSet image;
    for (VertexId v : f.finest().top_cell(c)) {
      const VertexId b = f.composite_fold(v);
      const auto& root = f.base().top_cell(f.root_cell[c]);
      EXPECT_NE(std::find(root.begin(), root.end(), b), root.end());
      image = image.with(f.base().vertex(b).color);
    }
    EXPECT_EQ(image, ColorSet::full(2));
  }
}

TEST(QuasiTransverse, ExponentialFieldAlwaysPasses) {
  for (int n = 1; n <= 2; ++n)
    for (int r = 0; r <= 2; ++r) {
      TorusModel t(n, n + 1);
      EXPECT_TRUE(check_quasi_transverse(build_section(t, r, PlacementParameter(1.0)), PlaneField::exponential(n)).pass);
    }
}

TEST(QuasiTransverse, ScalarFieldTwo) {
  TorusModel t(1, 2);
  auto fail = check_quasi_transverse(build_section(t, 1, PlacementParameter(1.0)), scalar(2.0));
  EXPECT_FALSE(fail.pass);
  ASSERT_EQ(fail.witnesses.size(), 1u);
  EXPECT_NEAR(fail.witnesses[0].derivative(0, 0), 3.0, 1e-9);
  EXPECT_NEAR(std::abs(fail.witnesses[0].kernel(0)), 1.0, 1e-12);
  EXPECT_TRUE(check_quasi_transverse(build_section(t, 2, PlacementParameter(1.0)), scalar(2.0)).pass);
}

TEST(Pencil, LinearExamples) {
  EXPECT_FALSE(pencil_root(m1(3.0), {scalar(-1.0), scalar(1.0)}).has_value());
  auto root = pencil_root(m1(3.0), {scalar(-1.0), scalar(3.0)});
  ASSERT_TRUE(root.has_value());
  EXPECT_NEAR(*root, 0.75, 1e-6);
}

TEST(Pencil, ConstantExponentialPencilPasses) {
  for (int n = 1; n <= 2; ++n) {
    TorusModel t(n, n + 1);
    auto s = build_section(t, 1, PlacementParameter(1.0));
    EXPECT_TRUE(check_pencil(s, {PlaneField::exponential(n), PlaneField::exponential(n)}).pass);
  }
}

TEST(Pencil, SectionWitnessCarriesTime) {
  TorusModel t(1, 2);
  auto cert = check_pencil(build_section(t, 1, PlacementParameter(1.0)), {scalar(-1.0), scalar(3.0)});
  EXPECT_FALSE(cert.pass);
  ASSERT_FALSE(cert.witnesses.empty());
  ASSERT_TRUE(cert.witnesses[0].t.has_value());
  EXPECT_NEAR(*cert.witnesses[0].t, 0.75, 1e-6);
}

TEST(Pencil, AgreesWithDenseSampling) {
  // Determinant certificate versus a sign scan of det(D - I - A_t) on a fine grid.
  TorusModel t(2, 3);
  auto s = build_section(t, 1, PlacementParameter(1.0));
  Eigen::MatrixXd a(2, 2);
  a << 0.5, 1.0, -2.0, 0.25;
  FieldPencil pencil{PlaneField::exponential(2), {a}};
  for (const auto& piece : s.pieces()) {
    bool sign_change = false;
    double first = 0.0;
    for (int k = 0; k <= 4000; ++k) {
      const double time = k / 4000.0;
      const double d = (piece.derivative - Eigen::MatrixXd::Identity(2, 2) - pencil.at(time).matrix).determinant();
      if (k == 0) first = d;
      if (d * first <= 0.0) sign_change = true;
    }
    if (sign_change) EXPECT_TRUE(pencil_root(piece.derivative, pencil).has_value());
  }
}

TEST(MinimalOrder, ScalarExamples) {
  TorusModel t(1, 2);
  const PlacementParameter mu(1.0);
  EXPECT_EQ(minimal_order(t, {PlaneField::exponential(1)}, false, 3, mu), 0);
  EXPECT_EQ(minimal_order(t, {scalar(0.0)}, false, 3, mu), 1);
  // The zero section already misses the graph of w -> 2w, so r = 0 suffices
  // for the field alone; the pencil from -I reaches A = 3 - 1 = 2 at t = 1 on
  // the outer thirds of r = 1, so adding pencils pushes the answer to 2.
  EXPECT_EQ(minimal_order(t, {scalar(2.0)}, false, 3, mu), 0);
  EXPECT_EQ(minimal_order(t, {scalar(2.0)}, true, 3, mu), 2);
}

TEST(Verticality, CircleValues) {
  TorusModel t(1, 2);
  EXPECT_NEAR(verticality(build_section(t, 1, PlacementParameter(1.0))), std::atan(0.5), 1e-12);
  EXPECT_NEAR(verticality(build_section(t, 2, PlacementParameter(1.0))), std::atan(1.0 / 8.0), 1e-12);
}

TEST(Verticality, DecreasesWithOrder) {
  for (int n = 1; n <= 2; ++n) {
    TorusModel t(n, n + 1);
    double previous = verticality(build_section(t, 1, PlacementParameter(1.0)));
    for (int r = 2; r <= 3; ++r) {
      const double v = verticality(build_section(t, r, PlacementParameter(1.0)));
      EXPECT_LT(v, previous) << "n=" << n << " r=" << r;
      previous = v;
    }
  }
}

TEST(ExpSlide, EndpointsAndLeaves) {
  TorusModel t(2, 3);
  Eigen::VectorXd x(2), u(2);
  x << 0.25, 1.5;
  u << 0.5, -0.75;
  auto [x0, u0] = exp_slide(t, 0.0, x, u);
  EXPECT_LT((x0 - x).norm(), 1e-15);
  EXPECT_LT((u0 - u).norm(), 1e-15);
  auto [x1, u1] = exp_slide(t, 1.0, x, u);
  EXPECT_LT((x1 - t.exp(x, u)).norm(), 1e-15);
  EXPECT_LT(u1.norm(), 1e-15);
  for (double s : {0.1, 0.3, 0.6, 0.9}) {
    auto [xs, us] = exp_slide(t, s, x, u);
    EXPECT_LT((t.reduce(xs + us) - t.exp(x, u)).norm(), 1e-12);
  }
  EXPECT_THROW(exp_slide(t, 1.5, x, u), Error);
}
