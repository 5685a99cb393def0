#include <gtest/gtest.h>

#include "stqm/errors.hpp"
#include "stqm/gaussian.hpp"
#include "stqm/oracle.hpp"
#include "stqm/propagator.hpp"
#include "support.hpp"

using namespace stqm;

namespace {

const Grid2D kGrid(256, 256, 1.0, 1.0, -100.0, -128.0);
const GaussianSpec kPacket{0.0, 0.0, 8.0, 0.5, 0.1};

EvolutionSpec span(double a, double b, double dt = 1.0) {
  EvolutionSpec e;
  e.t_start = a;
  e.t_end = b;
  e.dt = dt;
  e.guard_interval = 20.0;
  return e;
}

}  // namespace

TEST(Propagator, FreeEvolutionMatchesOracle) {
  const ComplexField psi = evolve_retarded(gaussian_packet(kGrid, kPacket), span(0.0, 80.0));
  EXPECT_LT(l2_distance(psi, oracle_field(kGrid, kPacket, 80.0)), 1e-10);
  EXPECT_NEAR(position_spread(psi).x, stqm::fixtures::textbook_sigma(8.0, 80.0), 1e-8);
}

TEST(Propagator, FreeResultIndependentOfStepSize) {
  const ComplexField psi0 = gaussian_packet(kGrid, kPacket);
  const ComplexField a = evolve_retarded(psi0, span(0.0, 40.0, 1.0));
  const ComplexField b = evolve_retarded(psi0, span(0.0, 40.0, 0.25));
  EXPECT_LT(l2_distance(a, b), 1e-12);
}

TEST(Propagator, NormPreservedPerStep) {
  ComplexField psi = gaussian_packet(kGrid, kPacket);
  for (int s = 0; s < 20; ++s) {
    const ComplexField next = propagate(psi, 1.0);
    EXPECT_LT(std::abs(norm_squared(next) - norm_squared(psi)), 1e-13);
    psi = next;
  }
}

TEST(Propagator, AdvancedUndoesRetardedUnderConjugation) {
  const ComplexField f = gaussian_packet(kGrid, kPacket);
  const ComplexField forward = evolve_retarded(f, span(10.0, 50.0));
  // Same operator for the same span.
  EXPECT_LT(l2_distance(evolve_advanced(f, span(50.0, 10.0)), forward), 1e-13);
  // conj(U conj(U f)) = f.
  const ComplexField back = conj(evolve_advanced(conj(forward), span(50.0, 10.0)));
  EXPECT_LT(l2_distance(back, f), 1e-12);
}

TEST(Propagator, ZeroSpanIsIdentity) {
  const ComplexField f = gaussian_packet(kGrid, kPacket);
  EXPECT_EQ(max_abs_difference(evolve_retarded(f, span(5.0, 5.0)), f), 0.0);
}

TEST(Propagator, RejectsWrongDirectionsAndFractionalSteps) {
  const ComplexField f = gaussian_packet(kGrid, kPacket);
  EXPECT_THROW(evolve_retarded(f, span(10.0, 0.0)), ConfigError);
  EXPECT_THROW(evolve_advanced(f, span(0.0, 10.0)), ConfigError);
  EXPECT_THROW(evolve_retarded(f, span(0.0, 10.5)), ConfigError);
  EXPECT_THROW(evolve_retarded(f, span(0.0, 10.0, 0.0)), ConfigError);
}

TEST(Propagator, BoundaryGuardReportsClockTime) {
  const ComplexField f = gaussian_packet(kGrid, {0.0, 0.0, 8.0, 3.0, 0.0});
  try {
    evolve_retarded(f, span(0.0, 200.0));
    FAIL() << "expected GeometryError";
  } catch (const GeometryError& e) {
    ASSERT_TRUE(e.time().has_value());
    EXPECT_GT(*e.time(), 0.0);
    EXPECT_LE(*e.time(), 200.0);
  }
  try {
    evolve_advanced(f, span(500.0, 300.0));
    FAIL() << "expected GeometryError";
  } catch (const GeometryError& e) {
    ASSERT_TRUE(e.time().has_value());
    EXPECT_LT(*e.time(), 500.0);
  }
}

TEST(Propagator, StrangStepsAreSecondOrderWithPotential) {
  std::vector<double> v(kGrid.size());
  for (int j = 0; j < kGrid.ny(); ++j) {
    for (int i = 0; i < kGrid.nx(); ++i) {
      const double x = kGrid.x(i), y = kGrid.y(j);
      v[kGrid.index(i, j)] = 1e-4 * (x * x + y * y);
    }
  }
  const ComplexField f = gaussian_packet(kGrid, {0.0, 0.0, 8.0, 0.2, 0.0});
  const ComplexField ref = propagate(f, 8.0, 0.0625, v);
  const double e1 = l2_distance(propagate(f, 8.0, 1.0, v), ref);
  const double e2 = l2_distance(propagate(f, 8.0, 0.5, v), ref);
  EXPECT_NEAR(e1 / e2, 4.0, 0.3);
  EXPECT_NEAR(norm_squared(propagate(f, 8.0, 1.0, v)), 1.0, 1e-12);
}
