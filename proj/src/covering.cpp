#include "koebe/covering.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "koebe/error.hpp"
#include "parallel.hpp"

namespace koebe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_zero_constant(const Polynomial& q, const char* what) {
  if (q.coeffs()[0] != Complex{})
    throw PreconditionError(std::string(what) + " needs q(0) == 0");
}

// Golden-section search for the minimum of |q(R e^{it})| on [lo, hi].
double golden_min(const Polynomial& q, double radius, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto f = [&](double t) { return std::abs(q(std::polar(radius, t))); };
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? c : d;
}

}  // namespace

const char* to_string(Membership m) noexcept {
  switch (m) {
    case Membership::inside: return "inside";
    case Membership::outside: return "outside";
    case Membership::boundary_marginal: return "boundary_marginal";
  }
  return "?";
}

const char* to_string(CertificateStatus s) noexcept {
  return s == CertificateStatus::verified ? "VERIFIED" : "REFUTED";
}

MembershipResult membership(const Polynomial& q, Complex w, const Disk& d, double margin) {
  if (q.actual_degree() < 1) throw PreconditionError("membership needs a non-constant q");
  const Polynomial chi = subtract_const(q, w);
  const auto rs = find_roots(chi);
  if (!rs.converged)
    throw IndeterminateError("membership: root solve of q - w did not converge");
  const auto dc = classify_roots(rs, d, margin);

  MembershipResult res;
  if (dc.any(Placement::inside)) {
    res.verdict = Membership::inside;
    std::size_t best = rs.roots.size();
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      if (dc.verdicts[i] != Placement::inside) continue;
      if (best == rs.roots.size() ||
          std::abs(rs.roots[i] - d.center) < std::abs(rs.roots[best] - d.center))
        best = i;
    }
    res.witness_preimage = rs.roots[best];
    res.residual = rs.residuals[best];
  } else if (dc.all(Placement::outside)) {
    res.verdict = Membership::outside;
  }
  return res;
}

CoefficientBoundReport lemma3_bound_check(const Polynomial& q, Complex w, double margin) {
  require_zero_constant(q, "coefficient bound");
  if (!is_finite(w)) throw PreconditionError("w is not finite");
  CoefficientBoundReport rep;
  rep.membership = membership(q, w, Disk::unit(Closure::open), margin).verdict;
  if (rep.membership == Membership::inside)
    throw PreconditionError("w lies inside q(unit disk); the coefficient bound does not apply");

  const std::size_t n = q.nominal_degree();
  rep.pass = true;
  for (std::size_t k = 1; k <= n; ++k) {
    CoefficientBound t;
    t.k = k;
    t.coefficient = std::abs(q.coeffs()[k]);
    t.bound = binomial(n, k) * std::abs(w);
    t.slack = t.bound - t.coefficient;
    t.pass = t.slack >= -1e-10 * t.bound;
    rep.pass = rep.pass && t.pass;
    rep.terms.push_back(t);
  }
  return rep;
}

InradiusEstimate inradius_oracle(const Polynomial& q, double radius, int grid, double margin) {
  require_zero_constant(q, "inradius oracle");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw PreconditionError("radius must be positive and finite");
  if (grid < 256) throw PreconditionError("oracle grid must be >= 256");

  InradiusEstimate est;
  est.grid = grid;
  if (q.is_zero()) return est;

  const Disk source({}, radius, Closure::open);
  const auto count = static_cast<std::size_t>(grid);
  std::vector<Complex> values(count);
  std::vector<char> kept(count, 0);
  detail::parallel_for(count, [&](std::size_t j) {
    const double theta = kTwoPi * static_cast<double>(j) / grid;
    values[j] = q(std::polar(radius, theta));
    kept[j] = membership(q, values[j], source, margin).verdict != Membership::inside;
  });

  std::size_t best = count;
  for (std::size_t j = 0; j < count; ++j) {
    if (!kept[j]) continue;
    const double theta = kTwoPi * static_cast<double>(j) / grid;
    est.boundary.push_back({theta, std::abs(values[j])});
    if (best == count || std::abs(values[j]) < std::abs(values[best])) best = j;
  }
  if (best == count) {
    est.inradius = std::numeric_limits<double>::infinity();
    return est;
  }

  est.theta = kTwoPi * static_cast<double>(best) / grid;
  est.point = values[best];
  est.inradius = std::abs(values[best]);

  const double step = kTwoPi / grid;
  const double t = golden_min(q, radius, est.theta - step, est.theta + step);
  const Complex wt = q(std::polar(radius, t));
  if (std::abs(wt) < est.inradius &&
      membership(q, wt, source, margin).verdict != Membership::inside) {
    est.theta = t < 0.0 ? t + kTwoPi : t;
    est.point = wt;
    est.inradius = std::abs(wt);
    est.refined = true;
  }
  return est;
}

int spot_check_circle(const Polynomial& q, double radius, double circle_radius, int count,
                      double margin) {
  const Disk source({}, radius, Closure::open);
  std::vector<char> inside(static_cast<std::size_t>(count), 0);
  detail::parallel_for(inside.size(), [&](std::size_t j) {
    const Complex w = std::polar(circle_radius, kTwoPi * static_cast<double>(j) / count);
    inside[j] = membership(q, w, source, margin).verdict == Membership::inside;
  });
  int n = 0;
  for (char c : inside) n += c;
  return n;
}

CoveringCertificate covering_lower_bound(const Polynomial& q, double radius,
                                         const CoveringOptions& opt) {
  require_zero_constant(q, "covering bound");
  if (q.nominal_degree() < 1) throw PreconditionError("covering bound needs degree >= 1");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw PreconditionError("radius must be positive and finite");

  CoveringCertificate cert;
  cert.radius = radius;
  cert.grid_size = opt.grid;
  cert.grid_tolerance = opt.grid_tolerance * radius;
  if (q.is_zero()) {
    cert.status = CertificateStatus::verified;
    return cert;
  }

  cert.bound = radius * norm_nq(rescale(q, radius));
  cert.spot_checks = opt.spot_checks;
  cert.spot_checks_inside =
      spot_check_circle(q, radius, cert.bound * (1.0 - opt.shrink), opt.spot_checks, opt.margin);

  const auto oracle = inradius_oracle(q, radius, opt.grid, opt.margin);
  cert.oracle_inradius = oracle.inradius;
  cert.uncovered_boundary_samples = oracle.boundary;

  const bool spots_ok = cert.spot_checks_inside == cert.spot_checks;
  const bool oracle_ok = cert.oracle_inradius >= cert.bound - cert.grid_tolerance;
  cert.status = spots_ok && oracle_ok ? CertificateStatus::verified : CertificateStatus::refuted;
  return cert;
}

Polynomial extremal_lemma3(std::size_t n, Complex w) {
  if (n < 1) throw PreconditionError("extremal polynomial needs n >= 1");
  if (w == Complex{} || !is_finite(w)) throw PreconditionError("w must be finite and nonzero");
  std::vector<Complex> c(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    const double b = binomial(n, k);
    c[k] = k % 2 == 1 ? Complex(b * w.real(), b * w.imag()) : Complex(-b * w.real(), -b * w.imag());
  }
  return Polynomial(std::move(c));
}

Polynomial extremal_corollary3(std::size_t n, double radius) {
  if (n < 1) throw PreconditionError("extremal polynomial needs n >= 1");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw PreconditionError("radius must be positive and finite");
  std::vector<Complex> c(n + 1);
  c[1] = 1.0;
  for (std::size_t k = 2; k <= n; ++k)
    c[k] = binomial(n, k) / (static_cast<double>(n) * std::pow(radius, static_cast<double>(k - 1)));
  return Polynomial(std::move(c));
}

}  // namespace koebe
