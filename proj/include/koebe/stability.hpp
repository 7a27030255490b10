#pragma once

#include <optional>

#include "koebe/poly.hpp"
#include "koebe/rootfind.hpp"

namespace koebe {

/// Three-valued answer for questions floating point cannot always settle.
enum class Tri { no, yes, marginal };

const char* to_string(Tri t) noexcept;

enum class Stability { stable, unstable, marginal };

const char* to_string(Stability s) noexcept;

struct StabilityVerdict {
  Stability verdict = Stability::marginal;
  /// Offending root when unstable, or the root that fell in the margin band.
  std::optional<Complex> root;
  /// min |chi*| over the boundary grid, reported when stable (> 0).
  std::optional<double> boundary_min_modulus;
  double margin = kDefaultMargin;
};

inline constexpr int kDefaultBoundaryGrid = 1024;

/// Root-based Schur test: stable iff every root of chi is inside the open
/// unit disk by more than `margin`. Requires a_n != 0 at the nominal degree.
StabilityVerdict is_schur_stable(const Polynomial& chi, double margin = kDefaultMargin,
                                 int grid = kDefaultBoundaryGrid);

/// Winding number of p around 0 along the circle |z| = radius together with
/// the smallest |p| seen. Starts from `grid` equispaced samples and bisects
/// any step whose argument jump exceeds pi/4.
struct BoundaryScan {
  int winding = 0;
  double min_modulus = 0.0;
  Complex argmin{};
  int evaluations = 0;
};

BoundaryScan scan_boundary(const Polynomial& p, double radius, int grid = kDefaultBoundaryGrid);

struct OmissionReport {
  Tri verdict = Tri::marginal;
  Tri root_side = Tri::marginal;  ///< from the roots of the polynomial
  Tri grid_side = Tri::marginal;  ///< from the boundary scan
  BoundaryScan scan;
  double floor = 0.0;  ///< boundary modulus at or below which the scan abstains
};

/// Whether 0 is omitted from p(closed unit disk). The root route and the
/// boundary route (argument principle + minimum modulus) are evaluated
/// independently; `verdict` is their common answer, or marginal when they
/// differ or either abstains.
OmissionReport zero_omitted_closed_disk(const Polynomial& chistar,
                                        double margin = kDefaultMargin,
                                        int grid = kDefaultBoundaryGrid);

enum class Agreement { agree, disagree, marginal, not_applicable };

const char* to_string(Agreement a) noexcept;

struct EquivalenceSides {
  Agreement agreement = Agreement::not_applicable;
  Tri lhs = Tri::marginal;
  Tri rhs = Tri::marginal;
};

/// Both root-location / omitted-value equivalences evaluated side by side.
///
/// `stability`: "all zeros of chi in the open disk" (roots) against
/// "0 not in chi*(closed disk)" (boundary scan of chi*); needs a_n != 0.
/// `omission`: "0 not in chi(open disk)" (boundary scan of chi) against
/// "all zeros of chi* in the closed disk" (roots of chi*); needs a_0 != 0.
struct EquivalenceReport {
  EquivalenceSides stability;
  EquivalenceSides omission;
};

/// Throws PreconditionError when neither a_n nor a_0 is nonzero.
EquivalenceReport lemma_equivalence_check(const Polynomial& chi,
                                          double margin = kDefaultMargin,
                                          int grid = kDefaultBoundaryGrid);

}  // namespace koebe
