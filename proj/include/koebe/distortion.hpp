#pragma once

#include "koebe/poly.hpp"

namespace koebe {

enum class WitnessBranch {
  general,           ///< constructed through q and a root solve
  equal_values,      ///< p(z1) == p(z2) within tolerance: zeta = z1
  vanishing_slope,   ///< p'(z1) ~ 0: zeta = z2 and rhs = 0
};

const char* to_string(WitnessBranch b) noexcept;

/// A point zeta with p(zeta) = p(z2) and
/// |p(z1) - p(z2)| >= (1/n) |p'(z1)| |z1 - zeta|.
struct DistortionWitness {
  Complex z1{}, z2{}, zeta{};
  std::size_t degree = 0;  ///< n, the actual degree of p
  double residual = 0.0;   ///< |p(zeta) - p(z2)|
  double lhs = 0.0;        ///< |p(z1) - p(z2)|
  double rhs = 0.0;        ///< |p'(z1)| |z1 - zeta| / n
  double slack = 0.0;      ///< lhs - rhs
  Complex w{};             ///< (p(z1) - p(z2)) / p'(z1)
  double radius = 0.0;     ///< R = n |w|
  Complex eta{};           ///< z1 - zeta
  WitnessBranch branch = WitnessBranch::general;

  bool residual_ok = false;  ///< residual <= 1e-8 (1 + |p(z2)|)
  bool slack_ok = false;     ///< slack >= -1e-9 (1 + lhs)
  bool eta_ok = false;       ///< |eta| <= R (1 + 1e-9)

  bool holds() const noexcept { return residual_ok && slack_ok && eta_ok; }
};

/// q(z) = (p(z1) - p(z1 - z)) / p'(z1), expanded at p's actual degree with
/// q_0 = 0 and q_1 = 1 set exactly. PreconditionError if
/// |p'(z1)| <= 1e-12 * scale(p).
Polynomial q_construction(const Polynomial& p, Complex z1);

/// Builds the witness through q: w = q(z1 - z2), R = n|w|, eta the
/// smallest-modulus solution of q(eta) = w (ties to the smaller argument),
/// zeta = z1 - eta. The invariant flags are evaluated, not assumed.
/// Throws IndeterminateError if the root solve fails to converge.
DistortionWitness distortion_witness(const Polynomial& p, Complex z1, Complex z2);

}  // namespace koebe
