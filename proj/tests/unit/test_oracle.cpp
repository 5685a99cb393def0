#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "stqm/oracle.hpp"
#include "support.hpp"

using namespace stqm;
using stqm::fixtures::textbook_sigma;

namespace {

// Crank-Nicolson for i psi_t = -psi_xx / 2 on a 1D line with a Thomas solve.
std::vector<Complex> crank_nicolson(std::vector<Complex> psi, double dx, double dt, int steps) {
  const std::size_t n = psi.size();
  const Complex r(0.0, dt / (4.0 * dx * dx));
  const Complex diag = 1.0 + 2.0 * r;
  std::vector<Complex> rhs(n), c(n), d(n);
  for (int s = 0; s < steps; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const Complex left = i > 0 ? psi[i - 1] : 0.0;
      const Complex right = i + 1 < n ? psi[i + 1] : 0.0;
      rhs[i] = (1.0 - 2.0 * r) * psi[i] + r * (left + right);
    }
    c[0] = -r / diag;
    d[0] = rhs[0] / diag;
    for (std::size_t i = 1; i < n; ++i) {
      const Complex m = diag + r * c[i - 1];
      c[i] = -r / m;
      d[i] = (rhs[i] + r * d[i - 1]) / m;
    }
    psi[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) psi[i] = d[i] - c[i] * psi[i + 1];
  }
  return psi;
}

double spread(const std::vector<Complex>& psi, double x0, double dx) {
  double w = 0, m1 = 0, m2 = 0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double x = x0 + dx * static_cast<double>(i);
    const double p = std::norm(psi[i]);
    w += p;
    m1 += p * x;
    m2 += p * x * x;
  }
  const double mean = m1 / w;
  return std::sqrt(m2 / w - mean * mean);
}

}  // namespace

TEST(Oracle, WidthMatchesTextbookDispersion) {
  const GaussianSpec s{0.0, 0.0, 20.0, 0.4, 0.0};
  for (double t : {0.0, 500.0, 1000.0, 1500.0, 2000.0, -700.0}) {
    EXPECT_NEAR(oracle_free_gaussian(s, t).sigma, textbook_sigma(20.0, t), 1e-12) << t;
  }
  EXPECT_NEAR(oracle_free_gaussian(s, 500.0).sigma, 23.585, 5e-4);
  EXPECT_NEAR(oracle_free_gaussian(s, 2000.0).sigma, 53.852, 5e-4);
  const auto st = oracle_free_gaussian(s, 1000.0);
  EXPECT_DOUBLE_EQ(st.center.x, 400.0);
  EXPECT_DOUBLE_EQ(st.center.y, 0.0);
  EXPECT_NEAR(st.phase, -80.0, 1e-12);
}

TEST(Oracle, WidthAgreesWithCrankNicolsonAtT500) {
  const double dx = 0.5, sigma = 20.0;
  const double x0 = -400.0;
  std::vector<Complex> psi(1601);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double x = x0 + dx * static_cast<double>(i);
    psi[i] = std::exp(-x * x / (4.0 * sigma * sigma));
  }
  const auto out = crank_nicolson(psi, dx, 0.5, 1000);
  EXPECT_NEAR(spread(out, x0, dx), oracle_free_gaussian({0, 0, sigma, 0, 0}, 500.0).sigma, 1e-3);
}

TEST(Oracle, FieldIsUnitNormAndCentered) {
  const Grid2D g(256, 256, 1.0, 1.0, -128.0, -128.0);
  const GaussianSpec s{-20.0, 10.0, 8.0, 0.3, -0.1};
  const ComplexField f = oracle_field(g, s, 60.0);
  EXPECT_NEAR(norm_squared(f), 1.0, 1e-10);
  const Point c = mean_position(f);
  EXPECT_NEAR(c.x, -2.0, 1e-8);
  EXPECT_NEAR(c.y, 4.0, 1e-8);
}

TEST(Oracle, OverlapMatchesQuadrature) {
  const Grid2D g(512, 512, 0.5, 0.5, -128.0, -128.0);
  const GaussianSpec a{5.0, -3.0, 6.0, 0.2, 0.1};
  const GaussianSpec b{-4.0, 2.0, 9.0, 0.35, -0.05};
  const Complex numeric = inner_product(oracle_field(g, a, 30.0), oracle_field(g, b, -20.0));
  EXPECT_LT(std::abs(oracle_overlap(a, 30.0, b, -20.0) - numeric), 1e-10);
  EXPECT_NEAR(std::abs(oracle_overlap(a, 15.0, a, 15.0)), 1.0, 1e-13);
}

TEST(Oracle, DefaultDetectorOverlapModulus) {
  // D1 at (800,0) against the source evolved 2000 units: per-axis overlap of a fresh
  // sigma-20 packet with one of complex width sigma(1 + 2.5 i).
  const GaussianSpec source{0.0, 0.0, 20.0, 0.4, 0.0};
  const GaussianSpec d1{800.0, 0.0, 20.0, 0.4, 0.0};
  const double per_axis = std::sqrt(2.0 / std::abs(Complex(2.0, 2.5)));
  EXPECT_NEAR(std::abs(oracle_overlap(d1, 0.0, source, 2000.0)), per_axis * per_axis, 1e-12);
  EXPECT_NEAR(0.5 * std::norm(oracle_overlap(d1, 0.0, source, 2000.0)), 0.195, 5e-4);
}
