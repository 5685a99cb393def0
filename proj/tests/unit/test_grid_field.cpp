#include <gtest/gtest.h>

#include "stqm/errors.hpp"
#include "stqm/field.hpp"
#include "stqm/gaussian.hpp"

using namespace stqm;

TEST(Grid, NodeCoordinatesAndIndexing) {
  const Grid2D g(16, 8, 0.5, 2.0, -4.0, 1.0);
  EXPECT_DOUBLE_EQ(g.x(0), -4.0);
  EXPECT_DOUBLE_EQ(g.x(15), 3.5);
  EXPECT_DOUBLE_EQ(g.y(7), 15.0);
  EXPECT_EQ(g.index(3, 2), 35u);
  EXPECT_EQ(g.size(), 128u);
  EXPECT_DOUBLE_EQ(g.cell_area(), 1.0);
  EXPECT_FALSE(g.is_square());
  EXPECT_TRUE(g.contains({0.0, 1.0}));
  EXPECT_FALSE(g.contains({3.6, 2.0}));
}

TEST(Grid, RejectsDegenerateShapes) {
  EXPECT_THROW(Grid2D(4, 16, 1.0, 1.0, 0.0, 0.0), ConfigError);
  EXPECT_THROW(Grid2D(16, 16, 0.0, 1.0, 0.0, 0.0), ConfigError);
  EXPECT_THROW(Grid2D(16, 16, 1.0, -1.0, 0.0, 0.0), ConfigError);
  EXPECT_THROW(Grid2D(16, 16, 1.0, 1.0, std::nan(""), 0.0), ConfigError);
}

TEST(Grid, NyquistUsesCoarserAxis) {
  const Grid2D g(16, 16, 0.5, 2.0, 0.0, 0.0);
  EXPECT_DOUBLE_EQ(g.nyquist(), std::numbers::pi / 2.0);
}

TEST(Field, InnerProductIsConjugateLinearInFirstSlot) {
  const Grid2D g(8, 8, 1.0, 1.0, 0.0, 0.0);
  const auto a = ComplexField::from_function(g, [](double x, double y) { return Complex(x, y); });
  const auto b = ComplexField::from_function(g, [](double x, double) { return Complex(1.0, x); });
  const Complex s(0.3, -1.2);
  EXPECT_LT(std::abs(inner_product(s * a, b) - std::conj(s) * inner_product(a, b)), 1e-12);
  EXPECT_LT(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))), 1e-12);
  EXPECT_NEAR(norm_squared(a), inner_product(a, a).real(), 1e-12);
}

TEST(Field, MismatchedGridsAreRejected) {
  const ComplexField a(Grid2D(8, 8, 1.0, 1.0, 0.0, 0.0));
  const ComplexField b(Grid2D(8, 8, 1.0, 1.0, 1.0, 0.0));
  EXPECT_THROW(a + b, std::logic_error);
  EXPECT_THROW(inner_product(a, b), std::logic_error);
}

TEST(Field, BoundaryMassGuardNamesTheTime) {
  const Grid2D g(32, 32, 1.0, 1.0, 0.0, 0.0);
  auto f = ComplexField::from_function(g, [](double x, double) { return x < 1.0 ? 1.0 : 0.0; });
  EXPECT_GT(boundary_mass_fraction(f), 0.9);
  try {
    check_boundary_mass(f, "probe", 42.0);
    FAIL() << "expected GeometryError";
  } catch (const GeometryError& e) {
    ASSERT_TRUE(e.time().has_value());
    EXPECT_DOUBLE_EQ(*e.time(), 42.0);
    EXPECT_NE(std::string(e.what()).find("t=42"), std::string::npos);
  }
  EXPECT_EQ(boundary_mass_fraction(ComplexField(g)), 0.0);
}

TEST(Gaussian, DiscretelyNormalizedWithRequestedMoments) {
  const Grid2D g(256, 256, 0.5, 0.5, -64.0, -64.0);
  const ComplexField f = gaussian_packet(g, {3.0, -2.0, 4.0, 0.7, -0.2});
  EXPECT_NEAR(norm_squared(f), 1.0, 1e-13);
  const Point c = mean_position(f);
  EXPECT_NEAR(c.x, 3.0, 1e-10);
  EXPECT_NEAR(c.y, -2.0, 1e-10);
  const Point s = position_spread(f);
  EXPECT_NEAR(s.x, 4.0, 1e-8);
  EXPECT_NEAR(s.y, 4.0, 1e-8);
  const Point k = mean_momentum(f);
  EXPECT_NEAR(k.x, 0.7, 1e-10);
  EXPECT_NEAR(k.y, -0.2, 1e-10);
}

TEST(Gaussian, RejectsBadWidthAndEdgeCenters) {
  const Grid2D g(64, 64, 1.0, 1.0, -32.0, -32.0);
  EXPECT_THROW(gaussian_packet(g, {0.0, 0.0, 0.0, 0.0, 0.0}), ConfigError);
  EXPECT_THROW(gaussian_packet(g, {0.0, 0.0, 5.0, 0.0, 0.0}), GeometryError);
  EXPECT_NO_THROW(gaussian_packet(g, {0.0, 0.0, 3.0, 0.0, 0.0}));
}
