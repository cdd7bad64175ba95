#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "domroots/rational.hpp"

namespace domroots {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients; coeffs()[k] multiplies x^k. Kept normalized (no trailing
/// zero coefficients), so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly monomial(int degree, const BigInt& c = 1);
  static Poly from_int64(std::span<const std::int64_t> coeffs);
  /// (1 + x)^k.
  static Poly one_plus_x_pow(int k);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  BigInt coeff(int k) const;
  const BigInt& leading() const { return c_.back(); }
  /// Lowest index with a nonzero coefficient (the multiplicity of 0).
  int low_order() const;

  Poly derivative() const;
  /// P(x) / x^k, requires the low k coefficients to vanish.
  Poly shift_down(int k) const;
  /// P(x + a) for integer a.
  Poly taylor_shift(long a) const;
  /// P(-x).
  Poly reflect() const;

  BigInt content() const;
  /// P / content, with positive leading coefficient.
  Poly primitive_part() const;

  /// Homogenized value sum c_k a^k b^(d-k) for q = a/b (b > 0); its sign is
  /// the sign of P(q).
  BigInt eval_homogeneous(const BigInt& a, const BigInt& b) const;
  Rational eval(const Rational& q) const;
  int sign_at(const Rational& q) const;
  double eval_double(double x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const BigInt& s, const Poly& p);
  friend Poly operator-(const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// "x^2 + 2x" style rendering.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

/// Pseudo-remainder of a by b with a positive multiplier: returns r with
/// |lc(b)|^(deg a - deg b + 1) * a = q * b + r.
Poly pseudo_remainder(const Poly& a, const Poly& b);

/// Exact quotient a / b; throws InvariantViolation if b does not divide a
/// over the rationals with an integral quotient.
Poly exact_divide(const Poly& a, const Poly& b);

/// Primitive gcd with positive leading coefficient.
Poly gcd(const Poly& a, const Poly& b);

/// P / gcd(P, P'), primitive with positive leading coefficient.
Poly square_free_part(const Poly& p);

/// Number of sign variations in the coefficient sequence (zeros skipped).
int sign_variations(const Poly& p);

}  // namespace domroots
