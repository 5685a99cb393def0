#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "stqm/fft.hpp"
#include "stqm/gaussian.hpp"
#include "stqm/spectral.hpp"

using namespace stqm;

namespace {

ComplexField random_field(const Grid2D& g, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> n;
  return ComplexField::from_function(g, [&](double, double) { return Complex(n(rng), n(rng)); });
}

}  // namespace

TEST(Fft, RoundTripAndParseval) {
  const Grid2D g(32, 16, 0.5, 1.5, -3.0, 2.0);
  const ComplexField f = random_field(g, 7);
  EXPECT_LT(max_abs_difference(inverse_fft(g, forward_fft(f)), f), 1e-13);
  const ComplexField h = random_field(g, 8);
  EXPECT_LT(std::abs(spectral_inner_product(f, h) - inner_product(f, h)), 1e-11);
}

TEST(Fft, WavenumbersInFftOrder) {
  const auto k = wavenumbers(8, 0.5);
  const double dk = 2.0 * std::numbers::pi / 4.0;
  const std::vector<double> expect{0, dk, 2 * dk, 3 * dk, -4 * dk, -3 * dk, -2 * dk, -dk};
  ASSERT_EQ(k.size(), expect.size());
  for (std::size_t m = 0; m < k.size(); ++m) EXPECT_NEAR(k[m], expect[m], 1e-14);
}

TEST(Fft, RealFieldHasHermitianSpectrum) {
  const Grid2D g(16, 16, 1.0, 1.0, 0.0, 0.0);
  std::mt19937 rng(3);
  std::normal_distribution<double> n;
  const auto f = ComplexField::from_function(g, [&](double, double) { return Complex(n(rng), 0.0); });
  const auto s = forward_fft(f);
  for (int j = 0; j < 16; ++j) {
    for (int i = 0; i < 16; ++i) {
      const Complex a = s[g.index(i, j)];
      const Complex b = s[g.index((16 - i) % 16, (16 - j) % 16)];
      EXPECT_LT(std::abs(a - std::conj(b)), 1e-12);
    }
  }
}

TEST(Spectral, GradientOfPlaneWaveIsExact) {
  const Grid2D g(32, 32, 1.0, 1.0, 0.0, 0.0);
  const double kx = 2.0 * std::numbers::pi * 3.0 / 32.0;
  const double ky = -2.0 * std::numbers::pi * 5.0 / 32.0;
  const auto f = ComplexField::from_function(g, [&](double x, double y) { return std::polar(1.0, kx * x + ky * y); });
  const auto [gx, gy] = spectral_gradient(f);
  EXPECT_LT(max_abs_difference(gx, Complex(0.0, kx) * f), 1e-12);
  EXPECT_LT(max_abs_difference(gy, Complex(0.0, ky) * f), 1e-12);
  EXPECT_LT(max_abs_difference(spectral_divergence(gx, gy), Complex(-(kx * kx + ky * ky), 0.0) * f), 1e-11);
}

TEST(Spectral, TranslateMovesPacketByFractionalShift) {
  const Grid2D g(128, 128, 1.0, 1.0, -64.0, -64.0);
  const ComplexField f = gaussian_packet(g, {0.0, 0.0, 5.0, 0.3, 0.0});
  const ComplexField moved = spectral_translate(f, {2.5, -1.25});
  const Point c = mean_position(moved);
  EXPECT_NEAR(c.x, 2.5, 1e-9);
  EXPECT_NEAR(c.y, -1.25, 1e-9);
  EXPECT_NEAR(norm_squared(moved), 1.0, 1e-12);
}

TEST(Spectral, MomentumConeIsHalfOpenAndExcludesZero) {
  const double q = std::numbers::pi / 4.0;
  EXPECT_TRUE(in_momentum_cone(1.0, 0.0, 0.0, q));
  EXPECT_TRUE(in_momentum_cone(1.0, -1.0, 0.0, q));
  EXPECT_FALSE(in_momentum_cone(1.0, 1.0, 0.0, q));
  EXPECT_TRUE(in_momentum_cone(1.0, 1.0, std::numbers::pi / 2.0, q));
  EXPECT_FALSE(in_momentum_cone(0.0, 0.0, 0.0, q));
  EXPECT_TRUE(in_momentum_cone(-1.0, 0.01, std::numbers::pi, q));
}

TEST(Spectral, ConeSplitPartitionsTheField) {
  const Grid2D g(64, 64, 1.0, 1.0, -32.0, -32.0);
  const ComplexField f = random_field(g, 11);
  const auto [inside, rest] = momentum_cone_split(f, 0.3, 0.5);
  EXPECT_LT(max_abs_difference(inside + rest, f), 1e-12);
  EXPECT_LT(std::abs(inner_product(inside, rest)), 1e-9);
  EXPECT_NEAR(momentum_cone_fraction(f, 0.3, 0.5), norm_squared(inside) / norm_squared(f), 1e-12);
}

TEST(Spectral, PacketSitsInsideItsCone) {
  const Grid2D g(256, 256, 1.0, 1.0, -128.0, -128.0);
  const ComplexField f = gaussian_packet(g, {0.0, 0.0, 10.0, 0.8, 0.0});
  EXPECT_GT(momentum_cone_fraction(f, 0.0, std::numbers::pi / 4.0), 1.0 - 1e-12);
  EXPECT_LT(momentum_cone_fraction(f, std::numbers::pi / 2.0, std::numbers::pi / 4.0), 1e-12);
}
