#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "koebe/error.hpp"
#include "koebe/rootfind.hpp"
#include "test_support.hpp"

using namespace koebe;
using koebe::testing::Rng;

namespace {

// Companion-matrix eigenvalues: an oracle that shares nothing with Aberth.
std::vector<Complex> companion_roots(const Polynomial& p) {
  const auto q = p.trimmed();
  const auto d = static_cast<Eigen::Index>(q.nominal_degree());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) m(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < d; ++i) m(i, d - 1) = -q[static_cast<std::size_t>(i)] / q[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  std::vector<Complex> out(es.eigenvalues().data(), es.eigenvalues().data() + d);
  return out;
}

}  // namespace

TEST(FindRoots, Linear) {
  const auto rs = find_roots(Polynomial({-0.5, 1.0}));
  ASSERT_EQ(rs.roots.size(), 1u);
  EXPECT_EQ(rs.roots[0], Complex(0.5));
  EXPECT_EQ(rs.residuals[0], 0.0);
  EXPECT_TRUE(rs.converged);
}

TEST(FindRoots, PlusMinusI) {
  const auto rs = find_roots(Polynomial({1.0, 0.0, 1.0}));
  ASSERT_EQ(rs.roots.size(), 2u);
  EXPECT_LT(koebe::testing::match_distance(rs.roots, {Complex(0, 1), Complex(0, -1)}), 1e-14);
  for (double r : rs.residuals) EXPECT_LE(r, 1e-14);
}

TEST(FindRoots, ExtremalShape) {
  // (1+z)^3 = 1  =>  1 + z in {1, e^{2 pi i/3}, e^{-2 pi i/3}}.
  const auto rs = find_roots(Polynomial({0.0, 3.0, 3.0, 1.0}));
  const double h = std::sqrt(3.0) / 2.0;
  EXPECT_LT(koebe::testing::match_distance(rs.roots, {0.0, {-1.5, h}, {-1.5, -h}}), 1e-13);
  EXPECT_EQ(rs.roots[0], Complex{});  // deflated exactly
}

TEST(FindRoots, DeflatesZerosAndIgnoresHighZeros) {
  const Polynomial p({0.0, 0.0, 2.0, 1.0}, 7);  // z^2 (z + 2), nominal degree 7
  const auto rs = find_roots(p);
  ASSERT_EQ(rs.roots.size(), 3u);
  EXPECT_EQ(rs.roots[0], Complex{});
  EXPECT_EQ(rs.roots[1], Complex{});
  EXPECT_EQ(rs.roots[2], Complex(-2.0));
}

TEST(FindRoots, RejectsConstants) {
  EXPECT_THROW(find_roots(Polynomial({}, 4)), PreconditionError);
  EXPECT_THROW(find_roots(Polynomial({3.0}, 4)), PreconditionError);
}

TEST(FindRoots, TripleRootWithRelaxedAccuracy) {
  const auto p = Polynomial(koebe::testing::from_roots({0.5, 0.5, 0.5}));
  const auto rs = find_roots(p);
  ASSERT_EQ(rs.roots.size(), 3u);
  for (const auto& r : rs.roots) EXPECT_LT(std::abs(r - 0.5), 1e-5);
}

TEST(FindRoots, AgreesWithCompanionEigenvalues) {
  Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const auto p = koebe::testing::random_poly(rng, 2 + t % 11, 1.0, 0.1);
    const auto rs = find_roots(p);
    ASSERT_TRUE(rs.converged);
    EXPECT_LT(koebe::testing::match_distance(rs.roots, companion_roots(p)), 1e-7) << t;
  }
}

TEST(FindRoots, ResidualCertificate) {
  Rng rng(43);
  for (int t = 0; t < 300; ++t) {
    const std::size_t d = 1 + t % 12;
    const auto p = koebe::testing::random_poly(rng, d);
    const auto rs = find_roots(p);
    ASSERT_TRUE(rs.converged);
    ASSERT_EQ(rs.roots.size(), d);
    for (std::size_t i = 0; i < d; ++i) {
      const double bound = 1e-10 * rs.scale * std::pow(1.0 + std::abs(rs.roots[i]), double(d));
      EXPECT_LE(rs.residuals[i], bound);
      EXPECT_EQ(rs.residuals[i], std::abs(p(rs.roots[i])));
    }
  }
}

TEST(FindRoots, VietaClosure) {
  Rng rng(47);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + t % 10;
    const auto p = koebe::testing::random_poly(rng, d, 1.0, 0.3);
    const auto rs = find_roots(p);
    Complex sum = 0.0, prod = 1.0;
    for (const auto& r : rs.roots) {
      sum += r;
      prod *= r;
    }
    const Complex want_sum = -p[d - 1] / p[d];
    const Complex want_prod = (d % 2 ? -1.0 : 1.0) * p[0] / p[d];
    EXPECT_LE(std::abs(sum - want_sum), 1e-8 * std::max(1.0, std::abs(want_sum)));
    EXPECT_LE(std::abs(prod - want_prod), 1e-8 * std::max(1.0, std::abs(want_prod)));
  }
}

TEST(FindRoots, ReciprocalDuality) {
  Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + t % 8;
    auto p = koebe::testing::random_poly(rng, d, 1.0, 0.1);
    std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
    while (std::abs(c[0]) < 0.1) c[0] = koebe::testing::random_complex(rng);
    p = Polynomial(c);
    std::vector<Complex> inv;
    for (const auto& r : find_roots(p).roots) inv.push_back(1.0 / r);
    EXPECT_LT(koebe::testing::match_distance(inv, find_roots(n_inverse(p)).roots), 1e-8);
  }
}

TEST(FindRoots, DeterministicAndBatchMatchesSerial) {
  Rng rng(59);
  std::vector<Polynomial> ps;
  for (int t = 0; t < 64; ++t) ps.push_back(koebe::testing::random_poly(rng, 1 + t % 12));
  const auto batch = find_roots_batch(ps);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto a = find_roots(ps[i]);
    EXPECT_EQ(a.roots, find_roots(ps[i]).roots);
    EXPECT_EQ(a.roots, batch[i].roots);
  }
}

TEST(FindRoots, HighDegreeAndWideScale) {
  // Roots of unity at degree 64 and a polynomial with a huge Cauchy radius.
  std::vector<Complex> c(65);
  c[0] = -1.0;
  c[64] = 1.0;
  const auto rs = find_roots(Polynomial(c));
  ASSERT_TRUE(rs.converged);
  for (const auto& r : rs.roots) EXPECT_NEAR(std::abs(r), 1.0, 1e-12);

  const auto wide = find_roots(Polynomial(koebe::testing::from_roots({1e6, -1e-3, 2.0})));
  ASSERT_TRUE(wide.converged);
  EXPECT_LT(koebe::testing::match_distance(wide.roots, {1e6, -1e-3, 2.0}), 1e-6);
}

TEST(Classify, Examples) {
  const auto unit = Disk::unit();
  EXPECT_EQ(classify(0.5, unit, 1e-9), Placement::inside);
  EXPECT_EQ(classify(2.0, unit, 1e-9), Placement::outside);
  EXPECT_EQ(classify(1.0000000001, unit, 1e-6), Placement::marginal);
  EXPECT_EQ(classify(Complex(3.0, 1.0), Disk({3.0, 0.0}, 2.0), 1e-9), Placement::inside);
}

TEST(Classify, RootSetAndMarginValidation) {
  RootSet rs;
  rs.roots = {0.5, 2.0, 1.0};
  const auto dc = classify_roots(rs, Disk::unit(), 1e-9);
  EXPECT_EQ(dc.verdicts,
            (std::vector{Placement::inside, Placement::outside, Placement::marginal}));
  EXPECT_TRUE(dc.any(Placement::marginal));
  EXPECT_FALSE(dc.all(Placement::inside));
  EXPECT_THROW(classify_roots(rs, Disk::unit(), 0.0), PreconditionError);
}
