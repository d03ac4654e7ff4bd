#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include <latintrade/latintrade.hpp>

using namespace latintrade;

namespace {

double distance(LatticePoint a, LatticePoint b) {
  const auto p = to_plane(a), q = to_plane(b);
  return std::hypot(p[0] - q[0], p[1] - q[1]);
}

void expect_unit_triangle(const LatticeTriangle &t) {
  EXPECT_NEAR(distance(t.black, t.white), 1.0, 1e-12);
  EXPECT_NEAR(distance(t.white, t.star), 1.0, 1e-12);
  EXPECT_NEAR(distance(t.star, t.black), 1.0, 1e-12);
  EXPECT_EQ(color_of(t.black), VertexColor::black);
  EXPECT_EQ(color_of(t.white), VertexColor::white);
  EXPECT_EQ(color_of(t.star), VertexColor::star);
}

// Signed area sign of black -> white -> star.
double turn(const LatticeTriangle &t) {
  const auto a = to_plane(t.black), b = to_plane(t.white), c = to_plane(t.star);
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

} // namespace

TEST(Lattice, AxisConvention) {
  EXPECT_EQ(color_of({0, 0}), VertexColor::black);
  EXPECT_EQ(color_of({1, 0}), VertexColor::star);
  const auto p = to_plane(black_basis_1), q = to_plane(black_basis_2);
  EXPECT_NEAR(p[0], 1.5, 1e-12);
  EXPECT_NEAR(p[1], std::sqrt(3.0) / 2, 1e-12);
  EXPECT_NEAR(q[0], 1.5, 1e-12);
  EXPECT_NEAR(q[1], -std::sqrt(3.0) / 2, 1e-12);
}

TEST(Lattice, RotationIsByOneHundredTwentyDegrees) {
  for (LatticePoint p : {LatticePoint{1, 0}, LatticePoint{0, 1}, LatticePoint{3, -2}}) {
    const auto a = to_plane(p), b = to_plane(rotate_120(p));
    const double c = std::cos(2 * std::numbers::pi / 3), s = std::sin(2 * std::numbers::pi / 3);
    EXPECT_NEAR(b[0], c * a[0] - s * a[1], 1e-12);
    EXPECT_NEAR(b[1], s * a[0] + c * a[1], 1e-12);
    EXPECT_EQ(rotate_120(rotate_120(rotate_120(p))), p);
    EXPECT_EQ(norm2_times4(rotate_120(p)), norm2_times4(p));
  }
}

TEST(Lattice, TrianglesAreUnitAndColoured) {
  for (int k = 0; k < 3; ++k) {
    for (const auto &b : {LatticePoint{0, 0}, from_black_basis(2, -3)}) {
      const auto s = shaded_triangle(b, k), u = unshaded_triangle(b, k);
      expect_unit_triangle(s);
      expect_unit_triangle(u);
      EXPECT_EQ(orientation_of(s), k);
      EXPECT_GT(turn(s), 0);
      EXPECT_LT(turn(u), 0);
    }
  }
  const auto above = to_plane(centroid_times3(shaded_triangle({0, 0}, 0)));
  EXPECT_NEAR(above[0], 0.0, 1e-12);
  EXPECT_GT(above[1], 0.0);
  const auto lower_left = to_plane(centroid_times3(shaded_triangle({0, 0}, 1)));
  EXPECT_LT(lower_left[0], 0.0);
  EXPECT_LT(lower_left[1], 0.0);
}

TEST(Lattice, ShadedAndUnshadedTileAroundEachVertex) {
  // Six triangles meet at a black vertex, alternating shaded and unshaded.
  std::set<LatticePoint> around;
  for (int k = 0; k < 3; ++k) {
    around.insert(shaded_triangle({0, 0}, k).white);
    around.insert(shaded_triangle({0, 0}, k).star);
    around.insert(unshaded_triangle({0, 0}, k).white);
    around.insert(unshaded_triangle({0, 0}, k).star);
  }
  EXPECT_EQ(around.size(), 6u);
  for (const auto &p : around)
    EXPECT_EQ(norm2_times4(p), 4);
}

TEST(Reducer, RepresentativesAreCanonical) {
  for (const auto &spec : lattice_specs_up_to(9)) {
    const auto g1 = from_black_basis(spec.v1[0], spec.v1[1]);
    const auto g2 = from_black_basis(spec.v2[0], spec.v2[1]);
    const LatticeReducer r(g1, g2);
    EXPECT_EQ(r.index(), 3 * spec.index());
    std::set<LatticePoint> reps;
    for (long long i = -8; i <= 8; ++i) {
      for (long long j = -8; j <= 8; ++j) {
        const LatticePoint x{i, j};
        const auto y = r.reduce(x);
        reps.insert(y);
        EXPECT_EQ(r.reduce(x + g1), y);
        EXPECT_EQ(r.reduce(x - g2), y);
        EXPECT_EQ(r.reduce(y), y);
        // x - y lies in the lattice: solve with the integer basis.
        const auto d = x - y;
        const long long det = g1.i * g2.j - g1.j * g2.i;
        EXPECT_EQ((d.i * g2.j - d.j * g2.i) % det, 0);
        EXPECT_EQ((g1.i * d.j - g1.j * d.i) % det, 0);
      }
    }
    EXPECT_EQ(static_cast<long long>(reps.size()), r.index());
  }
}

TEST(Reducer, RejectsDependentVectors) {
  EXPECT_THROW(LatticeReducer({1, 1}, {2, 2}), std::invalid_argument);
}
