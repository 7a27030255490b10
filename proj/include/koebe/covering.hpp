#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "koebe/poly.hpp"
#include "koebe/rootfind.hpp"

namespace koebe {

enum class Membership { inside, outside, boundary_marginal };

const char* to_string(Membership m) noexcept;

struct MembershipResult {
  Membership verdict = Membership::boundary_marginal;
  /// A root of q - w strictly inside the source disk; set iff inside.
  std::optional<Complex> witness_preimage;
  double residual = 0.0;  ///< |q(witness) - w| when inside
};

/// Is w in q(d)? Solves q(z) = w and classifies the preimages against d.
/// Throws PreconditionError for constant q, IndeterminateError if the root
/// solve does not converge.
MembershipResult membership(const Polynomial& q, Complex w, const Disk& d,
                            double margin = kDefaultMargin);

struct CoefficientBound {
  std::size_t k = 0;
  double coefficient = 0.0;  ///< |q_k|
  double bound = 0.0;        ///< C(n, k) |w|
  double slack = 0.0;        ///< bound - coefficient
  bool pass = false;
};

struct CoefficientBoundReport {
  Membership membership = Membership::outside;
  std::vector<CoefficientBound> terms;  ///< k = 1..n
  bool pass = false;
};

/// |q_k| <= C(n, k) |w| for an omitted value w, n the nominal degree.
/// Requires q(0) == 0 exactly and w not inside q(open unit disk); the latter
/// is checked with `membership` and a PreconditionError raised if violated.
CoefficientBoundReport lemma3_bound_check(const Polynomial& q, Complex w,
                                double margin = kDefaultMargin);

struct BoundarySample {
  double theta = 0.0;
  double modulus = 0.0;
};

struct InradiusEstimate {
  /// +infinity when no sampled boundary point survived the filter.
  double inradius = 0.0;
  double theta = 0.0;  ///< source-circle angle of the minimizer
  Complex point{};     ///< q(R e^{i theta})
  bool refined = false;
  int grid = 0;
  std::vector<BoundarySample> boundary;  ///< kept samples (theta, |w|)
};

inline constexpr int kDefaultOracleGrid = 4096;

/// Brute-force inradius at the origin of q(open disk of radius R).
///
/// Samples w_j = q(R e^{2 pi i j / grid}) and keeps the ones membership does
/// not place inside q(disk); those lie on the image boundary. Returns the
/// smallest kept |w_j| (ties to the lowest j), sharpened by a local search
/// in theta between the neighbouring samples. Over-estimates the true
/// inradius by at most the image-curve arc spacing.
InradiusEstimate inradius_oracle(const Polynomial& q, double radius,
                                 int grid = kDefaultOracleGrid,
                                 double margin = kDefaultMargin);

enum class CertificateStatus { verified, refuted };

const char* to_string(CertificateStatus s) noexcept;

struct CoveringOptions {
  int spot_checks = 64;
  double shrink = 1e-6;  ///< spot checks at bound (1 - shrink)
  int grid = kDefaultOracleGrid;
  double grid_tolerance = 5e-3;  ///< relative to R
  double margin = kDefaultMargin;
};

struct CoveringCertificate {
  double radius = 1.0;  ///< R
  double bound = 0.0;   ///< R n(q(R.)/R)
  double oracle_inradius = 0.0;
  int grid_size = 0;
  double grid_tolerance = 0.0;  ///< absolute
  int spot_checks = 0;
  int spot_checks_inside = 0;
  std::vector<BoundarySample> uncovered_boundary_samples;
  CertificateStatus status = CertificateStatus::refuted;
};

/// Guaranteed covering radius of q(open disk of radius R) around 0,
/// R * n(rescale(q, R)), checked two ways: membership of points just inside
/// the claimed circle and the brute-force oracle. Requires q(0) == 0.
CoveringCertificate covering_lower_bound(const Polynomial& q, double radius,
                                         const CoveringOptions& opt = {});

/// Interior spot check alone: `count` points on |w| = circle_radius, all of
/// which must be inside q(open disk of radius R). Returns how many were.
int spot_check_circle(const Polynomial& q, double radius, double circle_radius,
                      int count, double margin = kDefaultMargin);

/// w - w (1 - z)^n, expanded; constant term exactly 0.
Polynomial extremal_lemma3(std::size_t n, Complex w);

/// (R/n)((1 + z/R)^n - 1), expanded; constant 0 and linear coefficient 1.
Polynomial extremal_corollary3(std::size_t n, double radius);

}  // namespace koebe
