#include "koebe/stability.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "koebe/error.hpp"

namespace koebe {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxArgJump = kPi / 4;
constexpr int kMaxBisections = 40;

// |p| below this on the boundary cannot be told apart from a zero.
double noise_floor(const Polynomial& p) {
  double sum = 0.0;
  for (const auto& c : p.coeffs()) sum += std::abs(c);
  return 64.0 * std::numeric_limits<double>::epsilon() * sum;
}

struct Scanner {
  const Polynomial& p;
  double radius;
  BoundaryScan& out;

  Complex sample(double theta) {
    const Complex v = p(std::polar(radius, theta));
    ++out.evaluations;
    if (std::abs(v) < out.min_modulus) {
      out.min_modulus = std::abs(v);
      out.argmin = std::polar(radius, theta);
    }
    return v;
  }

  // Total argument change of p along the arc [ta, tb].
  double arc(double ta, Complex va, double tb, Complex vb, int depth) {
    const double jump = std::arg(vb / va);
    if (depth >= kMaxBisections || std::abs(jump) <= kMaxArgJump || va == Complex{} ||
        vb == Complex{})
      return jump;
    const double tm = 0.5 * (ta + tb);
    const Complex vm = sample(tm);
    if (vm == Complex{}) return jump;
    return arc(ta, va, tm, vm, depth + 1) + arc(tm, vm, tb, vb, depth + 1);
  }
};

Tri tri_from(Stability s) {
  switch (s) {
    case Stability::stable: return Tri::yes;
    case Stability::unstable: return Tri::no;
    default: return Tri::marginal;
  }
}

EquivalenceSides compare(Tri lhs, Tri rhs) {
  EquivalenceSides s{Agreement::marginal, lhs, rhs};
  if (lhs != Tri::marginal && rhs != Tri::marginal)
    s.agreement = lhs == rhs ? Agreement::agree : Agreement::disagree;
  return s;
}

}  // namespace

const char* to_string(Tri t) noexcept {
  switch (t) {
    case Tri::no: return "no";
    case Tri::yes: return "yes";
    case Tri::marginal: return "marginal";
  }
  return "?";
}

const char* to_string(Stability s) noexcept {
  switch (s) {
    case Stability::stable: return "stable";
    case Stability::unstable: return "unstable";
    case Stability::marginal: return "marginal";
  }
  return "?";
}

const char* to_string(Agreement a) noexcept {
  switch (a) {
    case Agreement::agree: return "agree";
    case Agreement::disagree: return "disagree";
    case Agreement::marginal: return "marginal";
    case Agreement::not_applicable: return "not_applicable";
  }
  return "?";
}

BoundaryScan scan_boundary(const Polynomial& p, double radius, int grid) {
  if (grid < 4) throw PreconditionError("boundary grid needs at least 4 points");
  BoundaryScan out;
  out.min_modulus = std::numeric_limits<double>::infinity();
  Scanner s{p, radius, out};
  const double step = 2.0 * kPi / grid;
  const Complex first = s.sample(0.0);
  Complex prev = first;
  double total = 0.0;
  for (int j = 1; j <= grid; ++j) {
    const double t = j * step;
    const Complex v = j == grid ? first : s.sample(t);
    total += s.arc((j - 1) * step, prev, t, v, 0);
    prev = v;
  }
  out.winding = static_cast<int>(std::lround(total / (2.0 * kPi)));
  return out;
}

StabilityVerdict is_schur_stable(const Polynomial& chi, double margin, int grid) {
  if (!(margin > 0.0)) throw PreconditionError("margin must be > 0");
  if (chi.coeffs().back() == Complex{})
    throw PreconditionError("Schur test needs a nonzero leading coefficient a_n");
  StabilityVerdict v;
  v.margin = margin;
  if (chi.nominal_degree() > 0) {
    const auto rs = find_roots(chi);
    if (!rs.converged) throw IndeterminateError("root solve did not converge");
    const Disk unit = Disk::unit(Closure::open);
    for (const auto& r : rs.roots) {
      const auto place = classify(r, unit, margin);
      if (place == Placement::outside) {
        v.verdict = Stability::unstable;
        v.root = r;
        return v;
      }
      if (place == Placement::marginal && !v.root) v.root = r;
    }
    if (v.root) {
      v.verdict = Stability::marginal;
      return v;
    }
  }
  v.verdict = Stability::stable;
  v.boundary_min_modulus = scan_boundary(n_inverse(chi), 1.0, grid).min_modulus;
  return v;
}

OmissionReport zero_omitted_closed_disk(const Polynomial& chistar, double margin, int grid) {
  if (!(margin > 0.0)) throw PreconditionError("margin must be > 0");
  OmissionReport rep;
  if (chistar.actual_degree() == 0) {
    const Tri t = chistar.is_zero() ? Tri::no : Tri::yes;
    rep.verdict = rep.root_side = rep.grid_side = t;
    rep.scan.min_modulus = std::abs(chistar.coeffs()[0]);
    return rep;
  }

  const auto rs = find_roots(chistar);
  if (!rs.converged) throw IndeterminateError("root solve did not converge");
  const Disk closed = Disk::unit(Closure::closed);
  const auto dc = classify_roots(rs, closed, margin);
  if (dc.any(Placement::inside))
    rep.root_side = Tri::no;
  else if (dc.any(Placement::marginal))
    rep.root_side = Tri::marginal;
  else
    rep.root_side = Tri::yes;

  // On |z| = 1, |p(z)| = |a_d| prod |z - r_j| >= |a_d| prod ||r_j| - 1|.
  double lower = std::abs(chistar.coeffs()[chistar.actual_degree()]);
  for (const auto& r : rs.roots) lower *= std::abs(std::abs(r) - 1.0);
  rep.floor = std::max(noise_floor(chistar), 0.5 * lower);

  rep.scan = scan_boundary(chistar, 1.0, grid);
  if (rep.scan.min_modulus <= rep.floor)
    rep.grid_side = Tri::marginal;
  else
    rep.grid_side = rep.scan.winding == 0 ? Tri::yes : Tri::no;

  rep.verdict = rep.root_side == rep.grid_side ? rep.root_side : Tri::marginal;
  return rep;
}

EquivalenceReport lemma_equivalence_check(const Polynomial& chi, double margin, int grid) {
  const bool top = chi.coeffs().back() != Complex{};
  const bool bottom = chi.coeffs().front() != Complex{};
  if (!top && !bottom)
    throw PreconditionError("equivalence check needs a_n != 0 or a_0 != 0");
  EquivalenceReport rep;
  const Polynomial star = n_inverse(chi);

  if (top) {
    const Tri lhs = tri_from(is_schur_stable(chi, margin, grid).verdict);
    const Tri rhs = zero_omitted_closed_disk(star, margin, grid).grid_side;
    rep.stability = compare(lhs, rhs);
  }

  if (bottom) {
    // 0 not in chi(open disk): no zeros strictly inside, by winding number.
    const auto scan = scan_boundary(chi, 1.0, grid);
    Tri lhs = Tri::marginal;
    if (scan.min_modulus > noise_floor(chi)) lhs = scan.winding == 0 ? Tri::yes : Tri::no;

    Tri rhs = Tri::yes;
    if (star.actual_degree() > 0) {
      const auto rs = find_roots(star);
      if (!rs.converged) throw IndeterminateError("root solve did not converge");
      const auto dc = classify_roots(rs, Disk::unit(Closure::closed), margin);
      if (dc.any(Placement::outside))
        rhs = Tri::no;
      else if (dc.any(Placement::marginal))
        rhs = Tri::marginal;
    }
    rep.omission = compare(lhs, rhs);
  }
  return rep;
}

}  // namespace koebe
