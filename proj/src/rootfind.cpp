#include "koebe/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "koebe/error.hpp"
#include "parallel.hpp"

namespace koebe {

namespace {

constexpr int kMaxSweeps = 200;
constexpr double kStepTol = 1e-14;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Attempt {
  std::vector<Complex> roots;
  bool converged = false;
  int sweeps = 0;
};

// Newton ratio p(z)/p'(z) plus a flag telling whether |p(z)| is already at
// the rounding-error level of Horner's scheme. Outside the unit circle the
// reversed polynomial is evaluated at 1/z so nothing overflows.
struct NewtonRatio {
  Complex ratio;
  bool at_noise_floor = false;
};

NewtonRatio newton_ratio(std::span<const Complex> b, Complex z) {
  const std::size_t d = b.size() - 1;
  const double noise = kEps;
  if (std::abs(z) <= 1.0) {
    Complex p = b[d], dp = 0.0;
    double bound = std::abs(b[d]);
    const double az = std::abs(z);
    for (std::size_t k = d; k-- > 0;) {
      dp = dp * z + p;
      p = p * z + b[k];
      bound = bound * az + std::abs(b[k]);
    }
    const bool floor = std::abs(p) <= noise * bound;
    return {dp == Complex{} ? p : p / dp, floor};
  }
  // r(y) = y^d p(1/y) has coefficients b reversed.
  const Complex y = 1.0 / z;
  const double ay = std::abs(y);
  Complex r = b[0], dr = 0.0;
  double bound = std::abs(b[0]);
  for (std::size_t k = 1; k <= d; ++k) {
    dr = dr * y + r;
    r = r * y + b[k];
    bound = bound * ay + std::abs(b[k]);
  }
  // p/p' = z r / (d r - y r')
  const Complex denom = static_cast<double>(d) * r - y * dr;
  const bool floor = std::abs(r) <= noise * bound;
  return {denom == Complex{} ? z * r : z * r / denom, floor};
}

Attempt aberth(std::span<const Complex> b, double radius, double offset) {
  const std::size_t d = b.size() - 1;
  Attempt a;
  a.roots.resize(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + offset;
    a.roots[k] = std::polar(radius, angle);
  }
  std::vector<bool> frozen(d, false);
  std::size_t active = d;
  for (int sweep = 1; sweep <= kMaxSweeps && active > 0; ++sweep) {
    a.sweeps = sweep;
    for (std::size_t i = 0; i < d; ++i) {
      if (frozen[i]) continue;
      const Complex zi = a.roots[i];
      const auto nr = newton_ratio(b, zi);
      if (nr.at_noise_floor) {
        frozen[i] = true;
        --active;
        continue;
      }
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == i || a.roots[j] == zi) continue;
        repulsion += 1.0 / (zi - a.roots[j]);
      }
      const Complex step = nr.ratio / (1.0 - nr.ratio * repulsion);
      if (!is_finite(step)) continue;
      a.roots[i] = zi - step;
      if (std::abs(step) < kStepTol * (1.0 + std::abs(a.roots[i]))) {
        frozen[i] = true;
        --active;
      }
    }
  }
  a.converged = active == 0;
  return a;
}

// d |b(z_i)| / (|b_d| prod_{j != i} |z_i - z_j|), with |b(z_i)| padded by a
// Horner rounding bound so that the radii stay valid in floating point.
std::vector<double> inclusion_radii(std::span<const Complex> b, std::span<const Complex> z) {
  const std::size_t d = b.size() - 1;
  std::vector<double> radii(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    Complex v = b[d];
    double bound = std::abs(b[d]);
    const double az = std::abs(z[i]);
    for (std::size_t k = d; k-- > 0;) {
      v = v * z[i] + b[k];
      bound = bound * az + std::abs(b[k]);
    }
    double r = static_cast<double>(d) *
               (std::abs(v) + 2.0 * static_cast<double>(d + 1) * kEps * bound) /
               std::abs(b[d]);
    for (std::size_t j = 0; j < z.size(); ++j)
      if (j != i) r /= std::abs(z[i] - z[j]);
    radii[i] = std::isfinite(r) ? r : std::numeric_limits<double>::infinity();
  }
  return radii;
}

}  // namespace

RootSet find_roots(const Polynomial& p) {
  const std::size_t degree = p.actual_degree();
  if (degree < 1)
    throw PreconditionError("root finding needs a polynomial of degree >= 1");
  const auto all = p.coeffs();

  std::size_t zeros = 0;
  while (all[zeros] == Complex{}) ++zeros;
  const std::span<const Complex> b = all.subspan(zeros, degree - zeros + 1);
  const std::size_t d = b.size() - 1;

  RootSet rs;
  rs.scale = p.scale();
  rs.roots.assign(zeros, Complex{});
  rs.inclusion_radii.assign(zeros, 0.0);
  rs.converged = true;

  if (d == 1) {
    rs.roots.push_back(-b[0] / b[1]);
  } else if (d > 1) {
    double cauchy = 0.0;
    for (std::size_t k = 0; k < d; ++k) cauchy = std::max(cauchy, std::abs(b[k] / b[d]));
    cauchy += 1.0;
    auto attempt = aberth(b, cauchy, 0.4);
    if (!attempt.converged) attempt = aberth(b, 2.0 * cauchy, 1.3);
    rs.converged = attempt.converged;
    rs.sweeps = attempt.sweeps;
    rs.roots.insert(rs.roots.end(), attempt.roots.begin(), attempt.roots.end());
  }
  if (d >= 1) {
    const auto radii = inclusion_radii(b, std::span(rs.roots).subspan(zeros));
    rs.inclusion_radii.insert(rs.inclusion_radii.end(), radii.begin(), radii.end());
  }

  rs.residuals.reserve(rs.roots.size());
  for (const auto& r : rs.roots) {
    if (!is_finite(r)) throw NumericError("root solve produced a non-finite root");
    rs.residuals.push_back(std::abs(p(r)));
  }
  return rs;
}

std::vector<RootSet> find_roots_batch(const std::vector<Polynomial>& ps) {
  std::vector<RootSet> out(ps.size());
  detail::parallel_for(ps.size(), [&](std::size_t i) { out[i] = find_roots(ps[i]); });
  return out;
}

const char* to_string(Placement p) noexcept {
  switch (p) {
    case Placement::inside: return "inside";
    case Placement::outside: return "outside";
    case Placement::marginal: return "marginal";
  }
  return "?";
}

std::vector<std::vector<std::size_t>> root_clusters(const RootSet& rs) {
  const std::size_t n = rs.roots.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  if (rs.inclusion_radii.size() == n) {
    const auto& rad = rs.inclusion_radii;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (std::abs(rs.roots[i] - rs.roots[j]) <= rad[i] + rad[j]) parent[find(i)] = find(j);
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

bool DiskClassification::any(Placement p) const noexcept {
  return std::find(verdicts.begin(), verdicts.end(), p) != verdicts.end();
}

bool DiskClassification::all(Placement p) const noexcept {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [p](Placement v) { return v == p; });
}

Placement classify(Complex root, const Disk& disk, double margin) {
  const double dist = std::abs(root - disk.center);
  if (dist < disk.radius - margin) return Placement::inside;
  if (dist > disk.radius + margin) return Placement::outside;
  return Placement::marginal;
}

DiskClassification classify_roots(const RootSet& rs, const Disk& disk, double margin) {
  if (!(margin > 0.0)) throw PreconditionError("classification margin must be > 0");
  const std::size_t n = rs.roots.size();
  DiskClassification dc;
  if (rs.inclusion_radii.size() != n) {
    dc.verdicts.reserve(n);
    for (const auto& r : rs.roots) dc.verdicts.push_back(classify(r, disk, margin));
    return dc;
  }
  const auto& rad = rs.inclusion_radii;
  dc.verdicts.assign(n, Placement::marginal);
  for (const auto& cluster : root_clusters(rs)) {
    bool all_in = true, all_out = true;
    for (std::size_t i : cluster) {
      const double dist = std::abs(rs.roots[i] - disk.center);
      all_in = all_in && dist + rad[i] < disk.radius - margin;
      all_out = all_out && dist - rad[i] > disk.radius + margin;
    }
    const Placement v =
        all_in ? Placement::inside : all_out ? Placement::outside : Placement::marginal;
    for (std::size_t i : cluster) dc.verdicts[i] = v;
  }
  return dc;
}

}  // namespace koebe
