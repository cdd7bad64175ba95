#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace domroots {

/// Exact rational in canonical form (positive denominator, reduced).
using Rational = mpq_class;
using BigInt = mpz_class;

struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  /// True when [lo, hi] lies strictly inside the open interval (outer.lo, outer.hi).
  bool strictly_inside(const Rational& outer_lo, const Rational& outer_hi) const {
    return outer_lo < lo && hi < outer_hi;
  }
};

/// Parses "-3/2", "-1.5", "1e-9", "2.5E+3" or a plain integer exactly.
Rational parse_rational(std::string_view text);

/// "num/den", always with an explicit denominator.
std::string to_fraction_string(const Rational& q);

/// Decimal rendering rounded half away from zero to `digits` places.
std::string to_fixed(const Rational& q, int digits);

/// Exact dyadic rational for a finite double.
Rational from_double(double x);

/// 10^-k as an exact rational.
Rational pow10_neg(int k);

int sign(const Rational& q);
int sign(const BigInt& z);

}  // namespace domroots
