#pragma once

#include <string>
#include <vector>

#include "domroots/poly.hpp"
#include "domroots/rational.hpp"

namespace domroots {

/// How a RootEnclosure proves its root.
enum class Certification {
  kSimpleCertified,  // polynomial changes sign across the interval
  kSturmCounted,     // Sturm count is 1 but no sign change (even multiplicity)
  kExact,            // degenerate interval at an exact rational root
};

std::string to_string(Certification c);
Certification certification_from_string(const std::string& s);

/// An interval with exact endpoints holding exactly one distinct real root.
/// Signs are those of the enclosed polynomial at the endpoints (0 for an
/// exact point enclosure).
struct RootEnclosure {
  RationalInterval interval;
  int sign_lo = 0;
  int sign_hi = 0;
  Certification note = Certification::kSimpleCertified;

  Rational midpoint() const { return interval.midpoint(); }
};

/// Sturm sequence of the square-free part of a nonzero integer polynomial.
/// Each element is divided by its positive content after every remainder
/// step to keep coefficients small.
class SturmChain {
 public:
  explicit SturmChain(const Poly& p);

  const std::vector<Poly>& polys() const noexcept { return chain_; }
  const Poly& square_free() const noexcept { return chain_.front(); }

  /// Sign variations of the chain at q.
  int variations_at(const Rational& q) const;
  int variations_at_neg_infinity() const;
  int variations_at_pos_infinity() const;
  /// Number of distinct real roots on the whole line.
  int total_real_roots() const;

 private:
  std::vector<Poly> chain_;
};

SturmChain sturm_chain(const Poly& p);

/// Distinct real roots in (lo, hi]. Throws EndpointIsRoot when either
/// endpoint is a root of the square-free part.
int count_roots_in(const SturmChain& chain, const RationalInterval& interval);

/// Certified isolation of every distinct real root of p in the closed window
/// [lo, hi]. Enclosures are disjoint, sorted, of width <= tol, and each
/// holds exactly one distinct root (Sturm count 1).
std::vector<RootEnclosure> isolate_real_roots(const Poly& p, const RationalInterval& window,
                                              const Rational& tol);

/// Cauchy bound 1 + max |c_i / c_d|; every real root lies in (-B, B).
Rational cauchy_bound(const Poly& p);

/// Negated enclosure (root r of p(x) becomes root -r of p(-x)).
RootEnclosure negate(const RootEnclosure& e, const Poly& reflected);

// --- star roots -----------------------------------------------------------

/// g_k(R) = R (R - 1)^k - R^k.
Poly star_companion(int k);

/// Descartes sign variations of g_k(1 + t); 1 proves that g_k has exactly one
/// root in (1, infinity).
int star_companion_variations(int k);

/// Certified enclosure of r_k, the unique root of g_k in (1, infinity).
RootEnclosure star_root(int k, const Rational& tol);

/// Enclosure of -r_k as a root of D(K_{1,k}, x).
RootEnclosure star_domination_root(int k, const Rational& tol);

/// k / W(k) + W(k) / (2 (1 + W(k))).
double star_root_estimate(double k);

/// Principal branch of Lambert W on [0, inf), Halley iteration.
double lambert_w(double x);

struct StarGapRecord {
  int k = 0;
  RootEnclosure root;  // r_k
  double gap = 0.0;    // r_{k+1} - r_k
  double estimate = 0.0;
  double abs_err = 0.0;
};

struct StarGapReport {
  std::vector<StarGapRecord> records;
  /// Every consecutive pair of enclosures is disjoint and increasing.
  bool strictly_increasing = true;
  /// Smallest k0 such that every gap for k >= k0 is below 4 (0 if none).
  int gap_below_four_from = 0;
};

StarGapReport star_gap_report(int k_max, const Rational& tol);

/// CSV with header `k,r_k_lo,r_k_hi,gap,estimate,abs_err`.
std::string star_gap_csv(const StarGapReport& report);

}  // namespace domroots
