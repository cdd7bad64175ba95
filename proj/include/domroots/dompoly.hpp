#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domroots/graph.hpp"
#include "domroots/poly.hpp"

namespace domroots {

/// D(G, x): coefficient k counts dominating sets of size k. Always monic of
/// degree n with zero constant term for graphs of order >= 1.
using DomPolynomial = Poly;

/// Direct 2^n subset test; n <= 24.
DomPolynomial dom_poly_bruteforce(const Graph& g);

/// D(G, x) = sum over A of (-1)^|A| (1 + x)^(n - |N[A]|); n <= 40.
/// Picks the OpenMP kernel for larger orders.
DomPolynomial dom_poly_inclusion_exclusion(const Graph& g);
DomPolynomial dom_poly_inclusion_exclusion_serial(const Graph& g);
DomPolynomial dom_poly_inclusion_exclusion_omp(const Graph& g, int threads = 0);

/// Same polynomial with machine-word coefficients; the atlas hot path.
/// Requires n <= 40.
std::vector<std::int64_t> dom_coeffs_int64(const Graph& g);

enum class ClosedFormKind { kComplete, kCompleteBipartite, kStar, kK2ell, kKkk };

struct ClosedFormSpec {
  ClosedFormKind kind;
  int a = 0;
  int b = 0;
};

/// Closed forms:
///   K_n:      (1+x)^n - 1
///   K_{k,l}:  ((1+x)^k - 1)((1+x)^l - 1) + x^k + x^l
///   K_{2,l}:  (1+x)^l (x^2 + 2x) + x^l - 2x
///   K_{k,k}:  (1+x)^(2k) - 2(1+x)^k + 2x^k + 1
///   K_{1,k}:  x(1+x)^k + x^k
DomPolynomial dom_poly_closed_form(const ClosedFormSpec& spec);

/// Exact evaluation of D(family, y) at a rational y straight from the closed
/// form, without expanding coefficients.
Rational eval_closed_form(const ClosedFormSpec& spec, const Rational& y);

/// D(G[K_m], x) = D(G, (1+x)^m - 1), expanded exactly.
DomPolynomial compose_with_complete(const DomPolynomial& p, int m);

/// Binomial expansion route: Q(u) = P(u - 1), then sum q_j (1+x)^(m j).
DomPolynomial compose_binomial(const Poly& p, int m);

/// Kronecker route: evaluates P((1+X)^m - 1) at X = 2^B as one big integer
/// and slices out the B-bit coefficients. Requires nonnegative coefficients.
DomPolynomial compose_kronecker(const Poly& p, int m);

Rational eval_rational(const DomPolynomial& p, const Rational& q);
DomPolynomial multiply(const DomPolynomial& p, const DomPolynomial& q);

/// Violations of the structural facts every domination polynomial of an
/// order-n graph satisfies (monic, zero constant term, 0 <= d_k <= C(n,k)).
/// Empty when all hold.
std::vector<std::string> dom_invariant_violations(const DomPolynomial& p, int n);

}  // namespace domroots
