#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "koebe/covering.hpp"
#include "koebe/error.hpp"
#include "test_support.hpp"

using namespace koebe;
using koebe::testing::Rng;

namespace {

// Manufactures an omitted value: start beyond the largest boundary modulus
// along the direction of q(z0) and step outward until membership agrees.
Complex omitted_value(const Polynomial& q, Rng& rng) {
  const double reach = koebe::testing::dense_circle_min(
      scale_by(q, -1.0).coeffs(), 1.0, 1);  // |q(1)|, just to get a scale
  double top = reach;
  for (int j = 0; j < 2048; ++j)
    top = std::max(top, std::abs(q(std::polar(1.0, 2.0 * std::numbers::pi * j / 2048))));
  Complex dir = q(koebe::testing::random_complex(rng, 0.7));
  if (std::abs(dir) == 0.0) dir = 1.0;
  Complex w = dir / std::abs(dir) * top * 1.01;
  while (membership(q, w, Disk::unit()).verdict == Membership::inside) w *= 1.1;
  return w;
}

}  // namespace

TEST(Membership, Examples) {
  const auto a = membership(Polynomial({0.0, 1.0}), 0.5, Disk::unit());
  EXPECT_EQ(a.verdict, Membership::inside);
  ASSERT_TRUE(a.witness_preimage);
  EXPECT_NEAR(std::abs(*a.witness_preimage - 0.5), 0.0, 1e-15);

  // q - w0 = -w0 (1 - z)^n: the only preimage is z = 1, on the circle, so
  // the omitted value is reported as a boundary point, never as inside.
  const Complex w0(0.3, -0.4);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto b = membership(extremal_lemma3(n, w0), w0, Disk::unit());
    EXPECT_EQ(b.verdict, Membership::boundary_marginal) << n;
    EXPECT_FALSE(b.witness_preimage);
  }


  const auto c = membership(Polynomial({0.0, 0.0, 1.0}), -0.25, Disk::unit());
  EXPECT_EQ(c.verdict, Membership::inside);
  ASSERT_TRUE(c.witness_preimage);
  EXPECT_NEAR(std::abs(*c.witness_preimage), 0.5, 1e-15);
  EXPECT_NEAR(c.witness_preimage->real(), 0.0, 1e-15);
}

TEST(Membership, BoundaryAndPreconditions) {
  EXPECT_EQ(membership(Polynomial({0.0, 1.0}), 1.0, Disk::unit()).verdict,
            Membership::boundary_marginal);
  EXPECT_THROW(membership(Polynomial({2.0}, 3), 1.0, Disk::unit()), PreconditionError);
}

TEST(Membership, WitnessInvariant) {
  Rng rng(73);
  for (int t = 0; t < 200; ++t) {
    const auto q = koebe::testing::random_poly(rng, 1 + t % 8);
    const Complex w = koebe::testing::random_complex(rng, 2.0);
    const auto m = membership(q, w, Disk::unit());
    if (m.verdict != Membership::inside) continue;
    ASSERT_TRUE(m.witness_preimage);
    EXPECT_LE(std::abs(q(*m.witness_preimage) - w), 1e-8 * (1.0 + std::abs(w)));
    EXPECT_LT(std::abs(*m.witness_preimage), 1.0 - kDefaultMargin);
  }
}

TEST(CoefficientBound, ExtremalIsSharpInEveryCoefficient) {
  const Complex w(-0.6, 1.1);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto rep = lemma3_bound_check(extremal_lemma3(n, w), w);
    EXPECT_TRUE(rep.pass);
    ASSERT_EQ(rep.terms.size(), n);
    for (const auto& t : rep.terms)
      EXPECT_LE(std::abs(t.slack), 1e-9 * t.bound) << "n=" << n << " k=" << t.k;
  }
}

TEST(CoefficientBound, IdentityMap) {
  for (const Complex w : {Complex(1.0, 0.0), Complex(0.0, -2.0), Complex(-3.0, 4.0)}) {
    const auto rep = lemma3_bound_check(Polynomial({0.0, 1.0}), w);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.terms[0].coefficient, 1.0);
  }
}

TEST(CoefficientBound, RandomDegreeFiveWithManufacturedOmittedValue) {
  Rng rng(79);
  for (int t = 0; t < 40; ++t) {
    const auto q = koebe::testing::random_normalized(rng, 5, false);
    const Complex w = omitted_value(q, rng);
    const auto rep = lemma3_bound_check(q, w);
    EXPECT_TRUE(rep.pass);
    // Independent per-k check with binomials from a hand-written table.
    const double c5[] = {1, 5, 10, 10, 5, 1};
    for (std::size_t k = 1; k <= 5; ++k)
      EXPECT_LE(std::abs(q[k]), c5[k] * std::abs(w) * (1.0 + 1e-10));
  }
}

TEST(CoefficientBound, Preconditions) {
  EXPECT_THROW(lemma3_bound_check(Polynomial({1.0, 1.0}), 5.0), PreconditionError);
  EXPECT_THROW(lemma3_bound_check(Polynomial({0.0, 1.0}), 0.5), PreconditionError);
}

TEST(Extremals, Expansions) {
  const Complex w(2.0, -1.0);
  EXPECT_EQ(extremal_lemma3(1, w), Polynomial({0.0, w}));
  EXPECT_EQ(extremal_corollary3(2, 1.0), Polynomial({0.0, 1.0, 0.5}));
  for (std::size_t n = 1; n <= 12; ++n)
    for (double r : {0.5, 1.0, 2.0, 3.7}) {
      const auto q = extremal_corollary3(n, r);
      EXPECT_EQ(q[0], Complex{});
      EXPECT_EQ(q[1], Complex(1.0));
      // Closed form against the unexpanded formula.
      const Complex z(0.3 * r, -0.2 * r);
      const Complex ref = r / double(n) * (std::pow(1.0 + z / r, double(n)) - 1.0);
      EXPECT_LT(std::abs(q(z) - ref), 1e-13 * (1.0 + std::abs(ref)));
    }
  EXPECT_EQ(extremal_lemma3(4, w)[0], Complex{});
  EXPECT_THROW(extremal_lemma3(0, w), PreconditionError);
  EXPECT_THROW(extremal_lemma3(2, 0.0), PreconditionError);
  EXPECT_THROW(extremal_corollary3(2, 0.0), PreconditionError);
}

TEST(InradiusOracle, IdentityMap) {
  const auto est = inradius_oracle(Polynomial({0.0, 1.0}), 1.0);
  EXPECT_NEAR(est.inradius, 1.0, 1e-12);
}

TEST(InradiusOracle, CubicExtremalAttainsAtMinusOneThird) {
  const auto est = inradius_oracle(extremal_corollary3(3, 1.0), 1.0);
  EXPECT_NEAR(est.inradius, 1.0 / 3.0, 1e-3);
  EXPECT_NEAR(std::abs(est.point + 1.0 / 3.0), 0.0, 1e-3);
}

TEST(InradiusOracle, QuadraticAttainsAtMinusOneHalf) {
  const Polynomial q({0.0, 1.0, 0.5});
  const auto est = inradius_oracle(q, 1.0);
  EXPECT_NEAR(est.inradius, 0.5, 1e-3);
  EXPECT_NEAR(std::abs(est.point + 0.5), 0.0, 1e-3);
  EXPECT_NE(membership(q, -0.5, Disk::unit()).verdict, Membership::inside);
}

TEST(InradiusOracle, Degenerate) {
  EXPECT_EQ(inradius_oracle(Polynomial({}, 3), 1.0).inradius, 0.0);
  EXPECT_THROW(inradius_oracle(Polynomial({1.0, 1.0}), 1.0), PreconditionError);
  EXPECT_THROW(inradius_oracle(Polynomial({0.0, 1.0}), 1.0, 100), PreconditionError);
}

TEST(InradiusOracle, KeptSamplesAreApproachedFromInside) {
  Rng rng(83);
  for (int t = 0; t < 8; ++t) {
    const auto q = koebe::testing::random_normalized(rng, 2 + t % 7, false);
    const auto est = inradius_oracle(q, 1.0, 1024);
    for (std::size_t i = 0; i < est.boundary.size(); i += 7) {
      const auto& s = est.boundary[i];
      const Complex w = q(std::polar(1.0, s.theta)) * (1.0 - 1e-4);
      EXPECT_EQ(membership(q, w, Disk::unit()).verdict, Membership::inside)
          << "t=" << t << " theta=" << s.theta;
    }
  }
}

TEST(Covering, IdentityMap) {
  const auto cert = covering_lower_bound(Polynomial({0.0, 1.0}), 1.0);
  EXPECT_EQ(cert.bound, 1.0);
  EXPECT_EQ(cert.spot_checks_inside, 64);
  EXPECT_EQ(cert.status, CertificateStatus::verified);
}

TEST(Covering, ExtremalBoundIsOneThird) {
  const auto cert = covering_lower_bound(extremal_corollary3(3, 1.0), 1.0);
  EXPECT_NEAR(cert.bound, 1.0 / 3.0, 1e-16);
  EXPECT_EQ(cert.status, CertificateStatus::verified);
  EXPECT_NEAR(cert.oracle_inradius, 1.0 / 3.0, 1e-3 / 3.0);
}

TEST(Covering, RandomQuarticVerified) {
  Rng rng(89);
  for (int t = 0; t < 10; ++t) {
    const auto q = koebe::testing::random_normalized(rng, 4, true);
    const auto cert = covering_lower_bound(q, 1.0);
    EXPECT_GE(cert.bound, 0.25);
    EXPECT_EQ(cert.status, CertificateStatus::verified) << t;
  }
}

TEST(Covering, ExtremalRadiusOnLargerDisks) {
  Rng rng(97);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 2 + t % 6;
    const double r = t % 2 ? 2.0 : 0.5;
    const auto q = koebe::testing::random_normalized(rng, n, true);
    const double target = r / double(n) * (1.0 - 1e-6);
    EXPECT_EQ(spot_check_circle(q, r, target, 64), 64) << t;
    EXPECT_GE(covering_lower_bound(q, r).bound, r / double(n) * (1.0 - 1e-15));
  }
}

TEST(Covering, ZeroPolynomialAndPreconditions) {
  const auto cert = covering_lower_bound(Polynomial({}, 3), 1.0);
  EXPECT_EQ(cert.bound, 0.0);
  EXPECT_EQ(cert.spot_checks, 0);
  EXPECT_THROW(covering_lower_bound(Polynomial({1.0, 1.0}), 1.0), PreconditionError);
  EXPECT_THROW(covering_lower_bound(Polynomial({0.0, 1.0}), -1.0), PreconditionError);
}
