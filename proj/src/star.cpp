#include <cmath>
#include <limits>
#include <sstream>

#include "domroots/dompoly.hpp"
#include "domroots/errors.hpp"
#include "domroots/realroots.hpp"

namespace domroots {

namespace {

Rational rational_pow(const Rational& q, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
  return out;
}

// Sign of g_k(R) = R (R-1)^k - R^k, evaluated in closed form.
int star_companion_sign(int k, const Rational& r) {
  const auto e = static_cast<unsigned long>(k);
  return sgn(r * rational_pow(r - 1, e) - rational_pow(r, e));
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace

Poly star_companion(int k) {
  if (k < 1) throw DomainError("star companion needs k >= 1");
  std::vector<BigInt> c(static_cast<std::size_t>(k) + 2);
  BigInt b;
  for (int i = 0; i <= k; ++i) {
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(i));
    // coefficient of R^i in (R-1)^k is C(k,i) (-1)^(k-i); multiply by R.
    c[i + 1] = ((k - i) % 2 == 0) ? b : BigInt(-b);
  }
  c[k] -= 1;
  return Poly(std::move(c));
}

int star_companion_variations(int k) {
  if (k < 1) throw DomainError("star companion needs k >= 1");
  // g_k(1 + t) = (1 + t) t^k - (1 + t)^k.
  const Poly shifted =
      Poly::monomial(k + 1) + Poly::monomial(k) - Poly::one_plus_x_pow(k);
  return sign_variations(shifted);
}

RootEnclosure star_root(int k, const Rational& tol) {
  if (k < 1) throw DomainError("star_root needs k >= 1");
  if (tol <= 0) throw DomainError("tolerance must be positive");
  if (star_companion_variations(k) != 1) {
    throw InvariantViolation("g_k(1+t) does not have exactly one sign variation");
  }

  const double est = star_root_estimate(static_cast<double>(k));
  Rational lo = from_double(std::max(1.0 + 1.0 / 1024, est - 0.5));
  Rational hi = from_double(est + 0.5);
  while (star_companion_sign(k, lo) >= 0) lo = (lo + 1) / 2;
  while (star_companion_sign(k, hi) <= 0) hi *= 2;

  while (hi - lo > tol) {
    const Rational mid = (lo + hi) / 2;
    const int s = star_companion_sign(k, mid);
    if (s == 0) return {{mid, mid}, 0, 0, Certification::kExact};
    if (s < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // g_k is monic, so a rational root must be an integer.
  const Rational shifted = (lo + hi) / 2 + Rational(1, 2);
  BigInt nearest;
  mpz_fdiv_q(nearest.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  const Rational candidate(nearest);
  if (lo <= candidate && candidate <= hi && star_companion_sign(k, candidate) == 0) {
    return {{candidate, candidate}, 0, 0, Certification::kExact};
  }
  return {{lo, hi}, -1, 1, Certification::kSimpleCertified};
}

RootEnclosure star_domination_root(int k, const Rational& tol) {
  const RootEnclosure r = star_root(k, tol);
  const Poly d = dom_poly_closed_form({ClosedFormKind::kStar, k});
  RootEnclosure out;
  out.interval = {-r.interval.hi, -r.interval.lo};
  out.sign_lo = d.sign_at(out.interval.lo);
  out.sign_hi = d.sign_at(out.interval.hi);
  out.note = r.note;
  return out;
}

double lambert_w(double x) {
  if (std::isnan(x) || x < 0.0) throw DomainError("lambert_w is defined here for x >= 0 only");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  double w;
  if (x >= std::exp(1.0)) {
    const double l = std::log(x);
    w = l - std::log(l);
  } else if (x <= 0.5) {
    w = x * (1.0 - x);
  } else {
    const double l = std::log1p(x);
    w = l * (1.0 - std::log1p(l) / (2.0 + l));
  }

  for (int iter = 0; iter < 64; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
    const double step = f / denom;
    w -= step;
    if (std::fabs(step) <= 4 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(w))) break;
  }
  return w;
}

double star_root_estimate(double k) {
  if (k < 1) throw DomainError("star_root_estimate needs k >= 1");
  const double w = lambert_w(k);
  return k / w + w / (2.0 * (1.0 + w));
}

StarGapReport star_gap_report(int k_max, const Rational& tol) {
  if (k_max < 2) throw DomainError("star_gap_report needs k_max >= 2");
  std::vector<RootEnclosure> roots;
  roots.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 1; k <= k_max + 1; ++k) roots.push_back(star_root(k, tol));

  StarGapReport report;
  for (int k = 1; k <= k_max; ++k) {
    const RootEnclosure& cur = roots[k - 1];
    const RootEnclosure& next = roots[k];
    StarGapRecord rec;
    rec.k = k;
    rec.root = cur;
    rec.gap = to_double(next.midpoint() - cur.midpoint());
    rec.estimate = star_root_estimate(k);
    rec.abs_err = std::fabs(to_double(cur.midpoint()) - rec.estimate);
    if (!(cur.interval.hi < next.interval.lo)) report.strictly_increasing = false;
    report.records.push_back(std::move(rec));
  }
  int from = 0;
  for (int i = static_cast<int>(report.records.size()) - 1; i >= 0; --i) {
    if (report.records[i].gap < 4.0) {
      from = report.records[i].k;
    } else {
      break;
    }
  }
  report.gap_below_four_from = from;
  return report;
}

std::string star_gap_csv(const StarGapReport& report) {
  std::ostringstream out;
  out << "k,r_k_lo,r_k_hi,gap,estimate,abs_err\n";
  for (const auto& r : report.records) {
    out << r.k << ',' << to_fixed(r.root.interval.lo, 12) << ',' << to_fixed(r.root.interval.hi, 12)
        << ',' << to_fixed(from_double(r.gap), 12) << ',' << to_fixed(from_double(r.estimate), 12)
        << ',' << to_fixed(from_double(r.abs_err), 12) << '\n';
  }
  return out.str();
}

}  // namespace domroots
