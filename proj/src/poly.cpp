#include "koebe/poly.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "koebe/error.hpp"

namespace koebe {

namespace {

constexpr std::size_t kExactBinomialMax = 62;

// Rows 0..62 of Pascal's triangle; C(62, 31) < 2^63 so nothing overflows.
const std::vector<std::vector<std::uint64_t>>& pascal() {
  static const auto table = [] {
    std::vector<std::vector<std::uint64_t>> rows(kExactBinomialMax + 1);
    for (std::size_t n = 0; n <= kExactBinomialMax; ++n) {
      rows[n].assign(n + 1, 1);
      for (std::size_t k = 1; k < n; ++k)
        rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
    }
    return rows;
  }();
  return table;
}

void require_finite(std::span<const Complex> coeffs) {
  for (const auto& c : coeffs)
    if (!is_finite(c))
      throw PreconditionError("polynomial coefficient is not finite");
}

}  // namespace

bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

Polynomial::Polynomial() : coeffs_(1) {}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
  require_finite(coeffs_);
}

Polynomial::Polynomial(std::vector<Complex> coeffs, std::size_t nominal_degree)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > nominal_degree + 1)
    throw PreconditionError("got " + std::to_string(coeffs_.size()) +
                            " coefficients for nominal degree " +
                            std::to_string(nominal_degree));
  coeffs_.resize(nominal_degree + 1);
  require_finite(coeffs_);
}

Polynomial Polynomial::monomial(std::size_t power, std::size_t nominal_degree,
                                Complex coeff) {
  if (power > nominal_degree)
    throw PreconditionError("monomial power exceeds nominal degree");
  std::vector<Complex> c(nominal_degree + 1);
  c[power] = coeff;
  return Polynomial(std::move(c));
}

std::size_t Polynomial::actual_degree() const noexcept {
  for (std::size_t k = coeffs_.size(); k-- > 0;)
    if (coeffs_[k] != Complex{}) return k;
  return 0;
}

bool Polynomial::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](Complex c) { return c == Complex{}; });
}

double Polynomial::scale() const noexcept {
  double s = 0.0;
  for (const auto& c : coeffs_) s = std::max(s, std::abs(c));
  return s;
}

Polynomial Polynomial::trimmed() const {
  return Polynomial(
      std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + actual_degree() + 1));
}

Complex Polynomial::operator()(Complex z) const {
  if (!is_finite(z)) throw PreconditionError("evaluation point is not finite");
  Complex acc = coeffs_.back();
  for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * z + coeffs_[k];
  return acc;
}

Complex evaluate(const Polynomial& q, Complex z) { return q(z); }

Polynomial n_inverse(const Polynomial& q) {
  std::vector<Complex> c(q.coeffs().rbegin(), q.coeffs().rend());
  return Polynomial(std::move(c));
}

std::uint64_t binomial_exact(std::size_t n, std::size_t k) {
  if (n > kExactBinomialMax)
    throw PreconditionError("exact binomial only available for n <= 62");
  if (k > n) return 0;
  return pascal()[n][k];
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  if (n <= kExactBinomialMax) return static_cast<double>(pascal()[n][k]);
  k = std::min(k, n - k);
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i)
    c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  if (!std::isfinite(c))
    throw NumericError("binomial C(" + std::to_string(n) + ", " +
                       std::to_string(k) + ") overflows a double");
  return c;
}

double norm_nq(const Polynomial& q) {
  const std::size_t n = q.nominal_degree();
  if (n < 1) throw PreconditionError("norm n(q) needs nominal degree >= 1");
  double best = 0.0;
  for (std::size_t k = 0; k <= n; ++k)
    best = std::max(best, std::abs(q.coeffs()[k]) / binomial(n, k));
  return best;
}

Polynomial rescale(const Polynomial& q, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw PreconditionError("rescale radius must be positive and finite");
  const auto src = q.coeffs();
  std::vector<Complex> c(src.size());
  for (std::size_t k = 0; k < src.size(); ++k) {
    // Real scalar times complex: one rounding per component.
    const double factor = std::pow(radius, static_cast<double>(k) - 1.0);
    c[k] = k == 1 ? src[k] : Complex(src[k].real() * factor, src[k].imag() * factor);
    if (!is_finite(c[k]))
      throw NumericError("rescaled coefficient " + std::to_string(k) +
                         " is out of double range");
  }
  return Polynomial(std::move(c));
}

Polynomial derivative(const Polynomial& q) {
  const auto src = q.coeffs();
  if (src.size() == 1) return Polynomial();
  std::vector<Complex> c(src.size() - 1);
  for (std::size_t k = 1; k < src.size(); ++k)
    c[k - 1] = src[k] * static_cast<double>(k);
  return Polynomial(std::move(c));
}

Polynomial subtract_const(const Polynomial& q, Complex w) {
  if (!is_finite(w)) throw PreconditionError("constant is not finite");
  std::vector<Complex> c(q.coeffs().begin(), q.coeffs().end());
  c[0] -= w;
  return Polynomial(std::move(c));
}

Polynomial scale_by(const Polynomial& q, Complex factor) {
  if (!is_finite(factor)) throw PreconditionError("factor is not finite");
  std::vector<Complex> c(q.coeffs().begin(), q.coeffs().end());
  for (auto& x : c) x *= factor;
  require_finite(c);
  return Polynomial(std::move(c));
}

Polynomial shift(const Polynomial& q, Complex shift_by) {
  if (!is_finite(shift_by)) throw PreconditionError("shift is not finite");
  // Repeated synthetic division: after pass i, c[i] is the i-th Taylor
  // coefficient sum_k a_k C(k, i) shift^(k-i).
  std::vector<Complex> c(q.coeffs().begin(), q.coeffs().end());
  const std::size_t n = c.size() - 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = n; j-- > i;) c[j] += shift_by * c[j + 1];
  for (const auto& x : c)
    if (!is_finite(x)) throw NumericError("shifted coefficient overflow");
  return Polynomial(std::move(c));
}

Polynomial reflect(const Polynomial& q) {
  std::vector<Complex> c(q.coeffs().begin(), q.coeffs().end());
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return Polynomial(std::move(c));
}

Disk::Disk(Complex c, double r, Closure cl) : center(c), radius(r), closure(cl) {
  if (!is_finite(c)) throw PreconditionError("disk center is not finite");
  if (!(r >= 0.0) || !std::isfinite(r))
    throw PreconditionError("disk radius must be finite and >= 0");
}

bool Disk::contains(Complex z) const noexcept {
  const double d = std::abs(z - center);
  return closure == Closure::open ? d < radius : d <= radius;
}

}  // namespace koebe
