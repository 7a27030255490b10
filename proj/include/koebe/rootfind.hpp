#pragma once

#include <vector>

#include "koebe/poly.hpp"

namespace koebe {

/// Default absolute band width on |root - center| - radius used by every
/// disk classification in the library.
inline constexpr double kDefaultMargin = 1e-9;

struct RootSet {
  std::vector<Complex> roots;     ///< one per unit of actual degree
  std::vector<double> residuals;  ///< |p(root)|, recomputed after the solve
  double scale = 0.0;             ///< max_k |a_k| of the input
  bool converged = false;
  int sweeps = 0;                 ///< Aberth sweeps used by the accepted attempt
  /// Weierstrass inclusion radii: every connected component of the disks
  /// |z - roots[i]| <= inclusion_radii[i] holds as many true roots as it has
  /// disks. Empty for hand-built sets, which are then taken as exact.
  std::vector<double> inclusion_radii;
};

/// All roots of `p` by Aberth-Ehrlich simultaneous iteration.
///
/// Zero low-order coefficients are deflated first (those roots are exactly
/// 0) and high-order zeros are ignored, so `roots.size()` is the actual
/// degree. Start points sit on the Cauchy-bound circle at a fixed angle
/// offset; a root is frozen once its Newton-Aberth step falls below
/// 1e-14 (1 + |z|) or its residual is at rounding level. After 200 sweeps
/// the solve is retried once from a circle twice as large; if that also
/// stalls `converged` is false. Deterministic.
///
/// Throws PreconditionError if p has actual degree 0.
RootSet find_roots(const Polynomial& p);

/// Solves many polynomials; parallel across inputs, each solve serial.
std::vector<RootSet> find_roots_batch(const std::vector<Polynomial>& ps);

enum class Placement { inside, outside, marginal };

const char* to_string(Placement p) noexcept;

/// Connected components of overlapping inclusion disks, as index lists in
/// ascending order. Singletons when the set has no inclusion radii.
std::vector<std::vector<std::size_t>> root_clusters(const RootSet& rs);

struct DiskClassification {
  std::vector<Placement> verdicts;

  bool any(Placement p) const noexcept;
  bool all(Placement p) const noexcept;
};

/// inside: |r - c| < radius - margin; outside: |r - c| > radius + margin;
/// marginal otherwise. The disk's closure flag plays no part.
Placement classify(Complex root, const Disk& disk, double margin);

/// Per-root verdicts. When the set carries inclusion radii, each root is
/// judged together with its whole cluster (connected component of
/// overlapping inclusion disks): inside only if every disk of the cluster
/// is inside by more than the margin, likewise for outside. A multiple root
/// sitting on the circle therefore comes out marginal however its computed
/// copies scatter.
DiskClassification classify_roots(const RootSet& rs, const Disk& disk,
                                  double margin = kDefaultMargin);

}  // namespace koebe
