#include <gtest/gtest.h>

#include <numbers>

#include "stqm/gaussian.hpp"
#include "stqm/observables.hpp"

using namespace stqm;

namespace {

const Grid2D kGrid(256, 256, 1.0, 1.0, -128.0, -128.0);

ComplexField density(const ComplexField& psi) { return multiply(conj(psi), psi); }

}  // namespace

TEST(Observables, GaussianWidthAndSymmetry) {
  const ComplexField rho = density(gaussian_packet(kGrid, {10.0, -5.0, 7.0, 0.3, 0.0}));
  EXPECT_NEAR(width_along_axis(rho, {0.0, std::nullopt}), 7.0, 1e-9);
  EXPECT_NEAR(width_along_axis(rho, {std::numbers::pi / 2.0, std::nullopt}), 7.0, 1e-9);
  EXPECT_LT(std::abs(skewness_along_axis(rho, {0.0, std::nullopt})), 1e-9);
  EXPECT_EQ(modality(rho, 0.05), 1);
}

TEST(Observables, TwoLumpsAreBimodalWithRegionRestriction) {
  const ComplexField psi = Complex(std::sqrt(0.5)) * gaussian_packet(kGrid, {-50.0, 0.0, 6.0, 0.0, 0.0}) +
                           Complex(std::sqrt(0.5)) * gaussian_packet(kGrid, {50.0, 0.0, 6.0, 0.0, 0.0});
  const ComplexField rho = density(psi);
  EXPECT_EQ(modality(rho, 0.05), 2);
  EXPECT_GT(width_along_axis(rho, {0.0, std::nullopt}), 45.0);
  const ObservableFrame right{0.0, HalfPlane{{0.0, 0.0}, {1.0, 0.0}}};
  EXPECT_NEAR(width_along_axis(rho, right), 6.0, 1e-6);
}

TEST(Observables, SkewedProfile) {
  const ComplexField rho = ComplexField::from_function(kGrid, [](double x, double y) {
    const double e = std::exp(-y * y / 50.0);
    return x >= 0.0 ? Complex(e * std::exp(-x / 5.0)) : Complex(0.0);
  });
  // Sampled on unit spacing this is a geometric distribution with ratio q,
  // whose skewness is (1 + q) / sqrt(q).
  const double q = std::exp(-0.2);
  const double expected = (1.0 + q) / std::sqrt(q);
  EXPECT_NEAR(skewness_along_axis(rho, {0.0, std::nullopt}), expected, 1e-6);
  EXPECT_NEAR(skewness_along_axis(rho, {std::numbers::pi, std::nullopt}), -expected, 1e-6);
}

TEST(Observables, CorridorMassAndRatio) {
  const ComplexField rho = density(gaussian_packet(kGrid, {40.0, 0.0, 5.0, 0.0, 0.0}));
  const Rect near{20.0, 60.0, -20.0, 20.0};
  const Rect far{-60.0, -20.0, -20.0, 20.0};
  EXPECT_NEAR(corridor_mass(rho, near), 1.0, 1e-4);
  const SnapshotObservables o = compute_observables(rho, {0.0, std::nullopt}, near, far, 0.05);
  EXPECT_GT(o.corridor_ratio(), 1e10);
  const SnapshotObservables flipped = compute_observables(rho, {0.0, std::nullopt}, far, far, 0.05);
  EXPECT_NEAR(flipped.corridor_ratio(), 1.0, 0.0);
}

TEST(Observables, HalfPlaneAndAxisDirection) {
  const Point d = axis_direction(std::numbers::pi / 2.0);
  EXPECT_EQ(d.x, 0.0);
  EXPECT_EQ(d.y, 1.0);
  const HalfPlane h{{1.0, 1.0}, {1.0, -1.0}};
  EXPECT_TRUE(h.contains(3.0, 3.0));
  EXPECT_TRUE(h.contains(3.0, 0.0));
  EXPECT_FALSE(h.contains(0.0, 3.0));
}
