#include "domroots/dompoly.hpp"

#include <algorithm>

#include "domroots/errors.hpp"
#include "domroots/kernels.hpp"

namespace domroots {

namespace {

Poly poly_from_counts(const std::vector<std::int64_t>& counts) {
  return Poly::from_int64(counts);
}

Rational rational_pow(const Rational& q, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
  return out;  // powers of a reduced fraction stay reduced
}

void require_positive(int v, const char* what) {
  if (v < 1) throw DomainError(std::string(what) + " must be >= 1, got " + std::to_string(v));
}

const Poly kX{0, 1};
const Poly kOne{1};

}  // namespace

DomPolynomial dom_poly_bruteforce(const Graph& g) {
  return poly_from_counts(kernels::dominating_set_counts_bruteforce(g));
}

DomPolynomial dom_poly_inclusion_exclusion_serial(const Graph& g) {
  return poly_from_counts(kernels::counts_from_histogram(kernels::undominated_histogram_serial(g)));
}

DomPolynomial dom_poly_inclusion_exclusion_omp(const Graph& g, int threads) {
  return poly_from_counts(
      kernels::counts_from_histogram(kernels::undominated_histogram_omp(g, threads)));
}

DomPolynomial dom_poly_inclusion_exclusion(const Graph& g) {
  return g.order() > 18 ? dom_poly_inclusion_exclusion_omp(g) : dom_poly_inclusion_exclusion_serial(g);
}

std::vector<std::int64_t> dom_coeffs_int64(const Graph& g) {
  return kernels::counts_from_histogram(kernels::undominated_histogram_serial(g));
}

DomPolynomial dom_poly_closed_form(const ClosedFormSpec& spec) {
  switch (spec.kind) {
    case ClosedFormKind::kComplete:
      require_positive(spec.a, "complete graph order");
      return Poly::one_plus_x_pow(spec.a) - kOne;
    case ClosedFormKind::kCompleteBipartite: {
      require_positive(spec.a, "bipartite side k");
      require_positive(spec.b, "bipartite side l");
      const Poly left = Poly::one_plus_x_pow(spec.a) - kOne;
      const Poly right = Poly::one_plus_x_pow(spec.b) - kOne;
      return left * right + Poly::monomial(spec.a) + Poly::monomial(spec.b);
    }
    case ClosedFormKind::kStar:
      require_positive(spec.a, "star leaf count");
      return kX * Poly::one_plus_x_pow(spec.a) + Poly::monomial(spec.a);
    case ClosedFormKind::kK2ell:
      require_positive(spec.a, "K_{2,l} side l");
      return Poly::one_plus_x_pow(spec.a) * Poly{0, 2, 1} + Poly::monomial(spec.a) -
             Poly{0, 2};
    case ClosedFormKind::kKkk: {
      require_positive(spec.a, "K_{k,k} side k");
      return Poly::one_plus_x_pow(2 * spec.a) - BigInt(2) * Poly::one_plus_x_pow(spec.a) +
             Poly::monomial(spec.a, 2) + kOne;
    }
  }
  throw DomainError("unknown closed form");
}

Rational eval_closed_form(const ClosedFormSpec& spec, const Rational& y) {
  const Rational one_plus = y + 1;
  auto p1 = [&](int e) { return rational_pow(one_plus, static_cast<unsigned long>(e)); };
  auto py = [&](int e) { return rational_pow(y, static_cast<unsigned long>(e)); };
  switch (spec.kind) {
    case ClosedFormKind::kComplete:
      require_positive(spec.a, "complete graph order");
      return p1(spec.a) - 1;
    case ClosedFormKind::kCompleteBipartite:
      require_positive(spec.a, "bipartite side k");
      require_positive(spec.b, "bipartite side l");
      return (p1(spec.a) - 1) * (p1(spec.b) - 1) + py(spec.a) + py(spec.b);
    case ClosedFormKind::kStar:
      require_positive(spec.a, "star leaf count");
      return y * p1(spec.a) + py(spec.a);
    case ClosedFormKind::kK2ell:
      require_positive(spec.a, "K_{2,l} side l");
      return p1(spec.a) * (y * y + 2 * y) + py(spec.a) - 2 * y;
    case ClosedFormKind::kKkk: {
      require_positive(spec.a, "K_{k,k} side k");
      const Rational pk = p1(spec.a);
      return pk * pk - 2 * pk + 2 * py(spec.a) + 1;
    }
  }
  throw DomainError("unknown closed form");
}

DomPolynomial compose_binomial(const Poly& p, int m) {
  require_positive(m, "substitution order m");
  if (p.is_zero() || m == 1) return p;
  const Poly q = p.taylor_shift(-1);
  const int d = q.degree();
  std::vector<BigInt> out(static_cast<std::size_t>(d) * m + 1);
  BigInt c;
  for (int j = 0; j <= d; ++j) {
    const BigInt& qj = q.coeffs()[j];
    if (qj == 0) continue;
    const unsigned long big_n = static_cast<unsigned long>(j) * m;
    c = 1;
    for (unsigned long i = 0; i <= big_n; ++i) {
      mpz_addmul(out[i].get_mpz_t(), qj.get_mpz_t(), c.get_mpz_t());
      mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), big_n - i);
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), i + 1);
    }
  }
  return Poly(std::move(out));
}

namespace {

// Evaluates sum c_i y^i for nonnegative integer y by pairwise combination,
// so the large multiplications are balanced.
BigInt eval_divide_and_conquer(const std::vector<BigInt>& coeffs, const BigInt& y) {
  std::vector<BigInt> level = coeffs;
  BigInt step = y;
  while (level.size() > 1) {
    std::vector<BigInt> next((level.size() + 1) / 2);
    for (std::size_t i = 0; i < next.size(); ++i) {
      next[i] = level[2 * i];
      if (2 * i + 1 < level.size()) mpz_addmul(next[i].get_mpz_t(), level[2 * i + 1].get_mpz_t(), step.get_mpz_t());
    }
    level.swap(next);
    if (level.size() > 1) step *= step;
  }
  return level.empty() ? BigInt(0) : level[0];
}

// Splits a nonnegative integer into `count` consecutive fields of `bits` bits.
std::vector<BigInt> unpack_fields(const BigInt& value, std::size_t bits, std::size_t count) {
  const std::size_t limb_bits = 64;
  std::vector<std::uint64_t> limbs((mpz_sizeinbase(value.get_mpz_t(), 2) + limb_bits - 1) / limb_bits + 2, 0);
  std::size_t written = 0;
  mpz_export(limbs.data(), &written, -1, sizeof(std::uint64_t), 0, 0, value.get_mpz_t());

  std::vector<BigInt> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t start = i * bits;
    const std::size_t first = start / limb_bits;
    if (first >= written) break;
    const std::size_t last = std::min(written, (start + bits) / limb_bits + 1);
    mpz_import(out[i].get_mpz_t(), last - first, -1, sizeof(std::uint64_t), 0, 0, limbs.data() + first);
    mpz_fdiv_q_2exp(out[i].get_mpz_t(), out[i].get_mpz_t(), start % limb_bits);
    mpz_fdiv_r_2exp(out[i].get_mpz_t(), out[i].get_mpz_t(), bits);
  }
  return out;
}

}  // namespace

DomPolynomial compose_kronecker(const Poly& p, int m) {
  require_positive(m, "substitution order m");
  if (p.is_zero() || m == 1) return p;
  for (const auto& c : p.coeffs()) {
    if (c < 0) throw DomainError("Kronecker composition needs nonnegative coefficients");
  }
  // Every output coefficient is at most the coefficient sum P(2^m - 1).
  const BigInt y_at_one = (BigInt(1) << m) - 1;
  const BigInt bound = eval_divide_and_conquer(p.coeffs(), y_at_one);
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 1;

  BigInt x_point = BigInt(1) << static_cast<mp_bitcnt_t>(bits);
  BigInt y_point;
  mpz_add_ui(y_point.get_mpz_t(), x_point.get_mpz_t(), 1);
  mpz_pow_ui(y_point.get_mpz_t(), y_point.get_mpz_t(), static_cast<unsigned long>(m));
  y_point -= 1;

  const BigInt packed = eval_divide_and_conquer(p.coeffs(), y_point);
  const std::size_t out_len = static_cast<std::size_t>(p.degree()) * m + 1;
  return Poly(unpack_fields(packed, bits, out_len));
}

DomPolynomial compose_with_complete(const DomPolynomial& p, int m) {
  require_positive(m, "substitution order m");
  if (m == 1 || p.is_zero()) return p;
  const bool nonnegative =
      std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const BigInt& c) { return c >= 0; });
  if (nonnegative && static_cast<long>(p.degree()) * m >= 256) return compose_kronecker(p, m);
  return compose_binomial(p, m);
}

Rational eval_rational(const DomPolynomial& p, const Rational& q) { return p.eval(q); }

DomPolynomial multiply(const DomPolynomial& p, const DomPolynomial& q) { return p * q; }

std::vector<std::string> dom_invariant_violations(const DomPolynomial& p, int n) {
  std::vector<std::string> out;
  if (p.degree() != n) {
    out.push_back("degree " + std::to_string(p.degree()) + " != order " + std::to_string(n));
    return out;
  }
  if (p.leading() != 1) out.push_back("not monic");
  if (p.coeff(0) != 0) out.push_back("nonzero constant term");
  BigInt binom;
  bool seen_nonzero = false;
  for (int k = 0; k <= n; ++k) {
    const BigInt c = p.coeff(k);
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (c < 0) out.push_back("negative coefficient at " + std::to_string(k));
    if (c > binom) out.push_back("coefficient above C(n,k) at " + std::to_string(k));
    if (c != 0) seen_nonzero = true;
    if (seen_nonzero && c == 0) out.push_back("zero coefficient above domination number at " + std::to_string(k));
  }
  return out;
}

}  // namespace domroots
