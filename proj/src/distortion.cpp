#include "koebe/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "koebe/error.hpp"
#include "koebe/rootfind.hpp"

namespace koebe {

namespace {

constexpr double kSlopeTol = 1e-12;
constexpr double kResidualTol = 1e-8;
constexpr double kSlackTol = 1e-9;
constexpr double kRadiusTol = 1e-9;

void finish(DistortionWitness& wt, const Polynomial& p, Complex p2) {
  wt.residual = std::abs(p(wt.zeta) - p2);
  wt.residual_ok = wt.residual <= kResidualTol * (1.0 + std::abs(p2));
  wt.slack = wt.lhs - wt.rhs;
  wt.slack_ok = wt.slack >= -kSlackTol * (1.0 + wt.lhs);
  wt.eta_ok = std::abs(wt.eta) <= wt.radius * (1.0 + kRadiusTol);
}

}  // namespace

const char* to_string(WitnessBranch b) noexcept {
  switch (b) {
    case WitnessBranch::general: return "general";
    case WitnessBranch::equal_values: return "equal_values";
    case WitnessBranch::vanishing_slope: return "vanishing_slope";
  }
  return "?";
}

Polynomial q_construction(const Polynomial& p, Complex z1) {
  if (!is_finite(z1)) throw PreconditionError("z1 is not finite");
  const Polynomial base = p.trimmed();
  const Complex slope = derivative(base)(z1);
  if (!(std::abs(slope) > kSlopeTol * base.scale()))
    throw PreconditionError("p'(z1) vanishes; q is undefined");
  // p(z1 - z) = reflect(shift(p, z1)); q = -(that - p(z1)) / p'(z1).
  const Polynomial around = reflect(shift(base, z1));
  std::vector<Complex> c(around.coeffs().begin(), around.coeffs().end());
  for (auto& x : c) x = -x / slope;
  c[0] = 0.0;
  if (c.size() > 1) c[1] = 1.0;
  return Polynomial(std::move(c));
}

DistortionWitness distortion_witness(const Polynomial& p, Complex z1, Complex z2) {
  if (!is_finite(z1) || !is_finite(z2)) throw PreconditionError("points must be finite");
  const std::size_t n = p.actual_degree();
  if (n < 1) throw PreconditionError("distortion witness needs degree >= 1");

  DistortionWitness wt;
  wt.z1 = z1;
  wt.z2 = z2;
  wt.degree = n;
  const Complex p1 = p(z1), p2 = p(z2);
  const Complex slope = derivative(p)(z1);
  wt.lhs = std::abs(p1 - p2);

  if (wt.lhs <= kResidualTol * (1.0 + std::abs(p2))) {
    wt.branch = WitnessBranch::equal_values;
    wt.zeta = z1;
    finish(wt, p, p2);
    return wt;
  }
  if (!(std::abs(slope) > kSlopeTol * p.scale())) {
    // The slope is treated as zero, so the right-hand side is zero too.
    wt.branch = WitnessBranch::vanishing_slope;
    wt.zeta = z2;
    wt.eta = z1 - z2;
    finish(wt, p, p2);
    wt.eta_ok = true;  // no disk radius to respect without a slope
    return wt;
  }

  const Polynomial q = q_construction(p, z1);
  wt.w = (p1 - p2) / slope;
  wt.radius = static_cast<double>(n) * std::abs(wt.w);

  const Polynomial chi = subtract_const(q, wt.w);
  const auto rs = find_roots(chi);
  if (!rs.converged) throw IndeterminateError("distortion: root solve of q - w did not converge");

  // A multiple root comes back as a scattered cluster. A root of
  // multiplicity m is a simple root of the (m-1)-th derivative, so Newton on
  // that derivative from the cluster centroid recovers it to full precision;
  // the result replaces the cluster only if its residual is no worse.
  std::vector<Complex> candidates;
  for (const auto& cluster : root_clusters(rs)) {
    if (cluster.size() > 1) {
      Complex z = 0.0;
      double worst = 0.0;
      for (std::size_t i : cluster) {
        z += rs.roots[i];
        worst = std::max(worst, rs.residuals[i]);
      }
      z /= static_cast<double>(cluster.size());
      Polynomial f = chi;
      for (std::size_t m = 1; m < cluster.size(); ++m) f = derivative(f);
      const Polynomial df = derivative(f);
      for (int it = 0; it < 30; ++it) {
        const Complex slope_f = df(z);
        if (slope_f == Complex{}) break;
        const Complex step = f(z) / slope_f;
        z -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
      }
      if (is_finite(z) && std::abs(chi(z)) <= worst) {
        candidates.push_back(z);
        continue;
      }
    }
    for (std::size_t i : cluster) candidates.push_back(rs.roots[i]);
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double a = std::abs(candidates[i]), b = std::abs(candidates[best]);
    const bool tie = std::abs(a - b) <= 1e-12 * std::max(1.0, b);
    if ((!tie && a < b) || (tie && std::arg(candidates[i]) < std::arg(candidates[best])))
      best = i;
  }
  wt.eta = candidates[best];
  wt.zeta = z1 - wt.eta;
  wt.rhs = std::abs(slope) * std::abs(wt.eta) / static_cast<double>(n);
  finish(wt, p, p2);
  return wt;
}

}  // namespace koebe
