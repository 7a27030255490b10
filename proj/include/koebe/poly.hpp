#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace koebe {

using Complex = std::complex<double>;

/// True when both components are finite.
bool is_finite(Complex z) noexcept;

/// Dense polynomial with an explicit nominal degree.
///
/// `coeffs()[k]` is the coefficient of z^k and there are always exactly
/// nominal_degree() + 1 of them. Trailing zeros are kept: the n-inverse
/// depends on n even when the top coefficient vanishes.
class Polynomial {
 public:
  /// Zero polynomial of nominal degree 0.
  Polynomial();

  /// Nominal degree inferred from the coefficient count (size - 1).
  explicit Polynomial(std::vector<Complex> coeffs);

  /// Zero-pads `coeffs` up to `nominal_degree + 1` entries. Throws
  /// PreconditionError if more coefficients than that are given, and for
  /// non-finite coefficients.
  Polynomial(std::vector<Complex> coeffs, std::size_t nominal_degree);

  static Polynomial monomial(std::size_t power, std::size_t nominal_degree,
                             Complex coeff = 1.0);

  std::size_t nominal_degree() const noexcept { return coeffs_.size() - 1; }

  /// Largest k with a nonzero coefficient; 0 for the zero polynomial.
  std::size_t actual_degree() const noexcept;

  bool is_zero() const noexcept;

  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex operator[](std::size_t k) const { return coeffs_.at(k); }

  /// Coefficient of z^k, or zero above the nominal degree.
  Complex coeff(std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : Complex{};
  }

  /// max_k |a_k|
  double scale() const noexcept;

  /// Same coefficients at actual_degree(). Explicit, never implied.
  Polynomial trimmed() const;

  /// Horner evaluation. Throws PreconditionError for non-finite z.
  Complex operator()(Complex z) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Complex> coeffs_;
};

Complex evaluate(const Polynomial& q, Complex z);

/// Coefficient reversal at the same nominal degree: z^n q(1/z).
Polynomial n_inverse(const Polynomial& q);

/// C(n, k). Exact for n <= 62; above that a floating product, which throws
/// NumericError if it overflows.
double binomial(std::size_t n, std::size_t k);

/// Exact C(n, k) for n <= 62.
std::uint64_t binomial_exact(std::size_t n, std::size_t k);

/// n(q) = max_k |q_k| / C(n, k) over k = 0..n, n the nominal degree (>= 1).
double norm_nq(const Polynomial& q);

/// q(Rz)/R, i.e. coefficient k scaled by R^(k-1). The linear coefficient is
/// untouched. Throws NumericError if any coefficient overflows.
Polynomial rescale(const Polynomial& q, double radius);

/// q'(z); nominal degree drops by one (but not below 0).
Polynomial derivative(const Polynomial& q);

/// q(z) - w at the same nominal degree.
Polynomial subtract_const(const Polynomial& q, Complex w);

/// c * q(z)
Polynomial scale_by(const Polynomial& q, Complex c);

/// q(z + c) by binomial expansion (Taylor shift), same nominal degree.
Polynomial shift(const Polynomial& q, Complex c);

/// q(-z)
Polynomial reflect(const Polynomial& q);

}  // namespace koebe

namespace koebe {

enum class Closure { open, closed };

/// Disk of given center and radius; `closure` records whether the boundary
/// circle belongs to it.
struct Disk {
  Complex center{};
  double radius = 1.0;
  Closure closure = Closure::open;

  /// Throws PreconditionError for a negative or non-finite radius.
  Disk(Complex center, double radius, Closure closure = Closure::open);

  static Disk unit(Closure closure = Closure::open) {
    return Disk({}, 1.0, closure);
  }

  /// Exact set membership (no tolerance).
  bool contains(Complex z) const noexcept;
};

}  // namespace koebe
