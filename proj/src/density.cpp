#include "domroots/density.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace domroots {

std::string to_string(WitnessFamily f) {
  switch (f) {
    case WitnessFamily::kExactK2:
      return "exact_K2";
    case WitnessFamily::kK2ell:
      return "K_2_ell";
    case WitnessFamily::kKkk:
      return "K_k_k";
    case WitnessFamily::kStar:
      return "star";
  }
  return "unknown";
}

std::string to_string(CaseTag c) {
  switch (c) {
    case CaseTag::kCase11:
      return "case-1.1";
    case CaseTag::kCase12:
      return "case-1.2";
    case CaseTag::kCase2:
      return "case-2";
    case CaseTag::kExact:
      return "exact";
  }
  return "unknown";
}

WitnessFamily witness_family_from_string(const std::string& s) {
  if (s == "exact_K2") return WitnessFamily::kExactK2;
  if (s == "K_2_ell") return WitnessFamily::kK2ell;
  if (s == "K_k_k") return WitnessFamily::kKkk;
  if (s == "star") return WitnessFamily::kStar;
  throw ParseError("unknown witness family '" + s + "'", 0);
}

CaseTag case_tag_from_string(const std::string& s) {
  if (s == "case-1.1") return CaseTag::kCase11;
  if (s == "case-1.2") return CaseTag::kCase12;
  if (s == "case-2") return CaseTag::kCase2;
  if (s == "exact") return CaseTag::kExact;
  throw ParseError("unknown case tag '" + s + "'", 0);
}

namespace {

Rational rational_pow(const Rational& q, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
  return out;
}

Rational complete_map(const Rational& x, int m) {
  return rational_pow(x + 1, static_cast<unsigned long>(m)) - 1;
}

// Sign of D(family[K_m], x) = D(family, (1+x)^m - 1), from the closed form.
int composed_sign(const ClosedFormSpec& spec, int m, const Rational& x) {
  return sgn(eval_closed_form(spec, complete_map(x, m)));
}

struct Regime {
  CaseTag tag;
  WitnessFamily family;
  Rational lo;
  Rational hi;
};

Regime clip_to_regime(const Rational& lo, const Rational& hi) {
  const Rational minus_one(-1);
  const Rational minus_two(-2);
  if (hi <= minus_two) return {CaseTag::kCase2, WitnessFamily::kStar, lo, hi};
  if (lo >= minus_one) return {CaseTag::kCase12, WitnessFamily::kKkk, lo, hi};
  // The window meets (-2, -1); when it also crosses -1 keep the left part.
  return {CaseTag::kCase11, WitnessFamily::kK2ell, std::max(lo, minus_two), std::min(hi, minus_one)};
}

bool parity_ok(WitnessFamily family, int param) {
  switch (family) {
    case WitnessFamily::kK2ell:
    case WitnessFamily::kKkk:
      return param % 2 == 1;
    case WitnessFamily::kStar:
      return param >= 1;
    case WitnessFamily::kExactK2:
      return param == 2;
  }
  return false;
}

WitnessFamily family_for_case(CaseTag tag) {
  switch (tag) {
    case CaseTag::kCase11:
      return WitnessFamily::kK2ell;
    case CaseTag::kCase12:
      return WitnessFamily::kKkk;
    case CaseTag::kCase2:
      return WitnessFamily::kStar;
    case CaseTag::kExact:
      return WitnessFamily::kExactK2;
  }
  return WitnessFamily::kExactK2;
}

struct Cell {
  int m;
  int param;
};

// Moves window endpoints inward until the composed polynomial is nonzero
// there; the window is open so exact roots on its boundary do not count.
std::optional<std::pair<Rational, Rational>> nonroot_endpoints(const ClosedFormSpec& spec, int m,
                                                               Rational lo, Rational hi) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Rational step = (hi - lo) / 1024;
    bool moved = false;
    if (composed_sign(spec, m, lo) == 0) {
      lo += step;
      moved = true;
    }
    if (composed_sign(spec, m, hi) == 0) {
      hi -= step;
      moved = true;
    }
    if (!moved) return std::make_pair(lo, hi);
  }
  return std::nullopt;
}

// Log-magnitude numbers for the floating prescreen: sign * exp(log).
struct LogNum {
  int sign;
  double log;
};

LogNum lnum(double v) { return {v > 0 ? 1 : (v < 0 ? -1 : 0), v == 0 ? 0.0 : std::log(std::fabs(v))}; }
LogNum lmul(LogNum a, LogNum b) { return {a.sign * b.sign, a.log + b.log}; }
LogNum lpow(LogNum b, long e) { return {b.sign < 0 && e % 2 == 1 ? -1 : (b.sign == 0 ? 0 : 1), b.log * e}; }

// Sign of a sum of terms, or 0 when cancellation is too close to call.
int lsum_sign(std::initializer_list<LogNum> terms) {
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms)
    if (t.sign != 0) top = std::max(top, t.log);
  if (!std::isfinite(top)) return 0;
  double sum = 0.0;
  double mag = 0.0;
  for (const auto& t : terms) {
    if (t.sign == 0) continue;
    const double v = std::exp(t.log - top);
    sum += t.sign * v;
    mag += v;
  }
  if (std::fabs(sum) <= 1e-6 * mag) return 0;
  return sum > 0 ? 1 : -1;
}

// Floating sign of D(family, (1+x)^m - 1); 0 when not trustworthy. Only
// used to skip cells, never to certify.
int prescreen_sign(WitnessFamily family, int param, int m, double x) {
  const double b = 1.0 + x;
  const double pv = std::pow(b, m);  // 1 + y
  const double yv = pv - 1.0;
  if (b == 0.0 || !std::isfinite(pv) || std::fabs(yv) < 1e-8) return 0;
  const LogNum p = lpow(lnum(b), m);
  const LogNum y = lnum(yv);
  switch (family) {
    case WitnessFamily::kStar:
      return lsum_sign({lmul(y, lpow(p, param)), lpow(y, param)});
    case WitnessFamily::kK2ell: {
      if (std::fabs(pv + 1.0) < 1e-8) return 0;
      const LogNum y2 = lmul(y, lnum(pv + 1.0));  // y^2 + 2y
      return lsum_sign({lmul(lpow(p, param), y2), lpow(y, param), lmul(lnum(-2.0), y)});
    }
    case WitnessFamily::kKkk:
      return lsum_sign({lpow(p, 2L * param), lmul(lnum(-2.0), lpow(p, param)), lmul(lnum(2.0), lpow(y, param)),
                        lnum(1.0)});
    case WitnessFamily::kExactK2:
      return 0;
  }
  return 0;
}

bool cell_has_sign_change(const Regime& regime, const Cell& cell) {
  const int a = prescreen_sign(regime.family, cell.param, cell.m, regime.lo.get_d());
  const int b = prescreen_sign(regime.family, cell.param, cell.m, regime.hi.get_d());
  if (a != 0 && a == b) return false;
  const ClosedFormSpec spec = closed_form_of(regime.family, cell.param);
  auto ends = nonroot_endpoints(spec, cell.m, regime.lo, regime.hi);
  if (!ends) return false;
  return composed_sign(spec, cell.m, ends->first) * composed_sign(spec, cell.m, ends->second) < 0;
}

RootEnclosure refine_leftmost(const ClosedFormSpec& spec, int m, Rational lo, Rational hi,
                              const Rational& tol) {
  auto ends = nonroot_endpoints(spec, m, lo, hi);
  lo = ends->first;
  hi = ends->second;
  int s_lo = composed_sign(spec, m, lo);
  int s_hi = composed_sign(spec, m, hi);
  while (hi - lo > tol) {
    const Rational mid = (lo + hi) / 2;
    const int s_mid = composed_sign(spec, m, mid);
    if (s_mid == 0) return {{mid, mid}, 0, 0, Certification::kExact};
    if (s_mid != s_lo) {
      hi = mid;
      s_hi = s_mid;
    } else {
      lo = mid;
      s_lo = s_mid;
    }
  }
  return {{lo, hi}, s_lo, s_hi, Certification::kSimpleCertified};
}

WitnessCertificate exact_k2(const Rational& z, const Rational& eps, const Rational& root) {
  WitnessCertificate cert;
  cert.target_z = z;
  cert.epsilon = eps;
  cert.family = WitnessFamily::kExactK2;
  cert.param = 2;
  cert.m = 1;
  cert.composed_degree = 2;
  cert.enclosure = {{root, root}, 0, 0, Certification::kExact};
  cert.case_tag = CaseTag::kExact;
  return cert;
}

VerificationCheck check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, std::move(detail)};
}

}  // namespace

RationalInterval target_interval(const Rational& z, const Rational& eps, int m) {
  if (eps <= 0) throw DomainError("epsilon must be positive");
  if (m < 1 || m % 2 == 0) {
    throw DomainError("substitution order m must be odd and positive, got " + std::to_string(m));
  }
  return {complete_map(z - eps, m), complete_map(z + eps, m)};
}

ClosedFormSpec closed_form_of(WitnessFamily family, int param) {
  switch (family) {
    case WitnessFamily::kExactK2:
      return {ClosedFormKind::kComplete, 2};
    case WitnessFamily::kK2ell:
      return {ClosedFormKind::kK2ell, param};
    case WitnessFamily::kKkk:
      return {ClosedFormKind::kKkk, param};
    case WitnessFamily::kStar:
      return {ClosedFormKind::kStar, param};
  }
  throw DomainError("unknown witness family");
}

Graph witness_graph(WitnessFamily family, int param) {
  switch (family) {
    case WitnessFamily::kExactK2:
      return complete_graph(2);
    case WitnessFamily::kK2ell:
      return complete_bipartite(2, param);
    case WitnessFamily::kKkk:
      return complete_bipartite(param, param);
    case WitnessFamily::kStar:
      return star(param);
  }
  throw DomainError("unknown witness family");
}

long family_degree(WitnessFamily family, int param) {
  switch (family) {
    case WitnessFamily::kExactK2:
      return 2;
    case WitnessFamily::kK2ell:
      return param + 2L;
    case WitnessFamily::kKkk:
      return 2L * param;
    case WitnessFamily::kStar:
      return param + 1L;
  }
  return 0;
}

WitnessCertificate construct_witness(const Rational& z, const Rational& eps,
                                     const SearchBudget& budget, const Rational& tol) {
  if (z > 0) throw DomainError("target z must be <= 0");
  if (eps <= 0) throw DomainError("epsilon must be positive");
  if (tol <= 0) throw DomainError("tolerance must be positive");
  if (budget.max_m < 1 || budget.max_param < 1 || budget.max_degree < 1) {
    throw DomainError("search budget entries must be positive");
  }

  const Rational lo = z - eps;
  const Rational hi = z + eps;
  if (lo < 0 && 0 < hi) return exact_k2(z, eps, Rational(0));
  if (lo < -2 && -2 < hi) return exact_k2(z, eps, Rational(-2));

  const Regime regime = clip_to_regime(lo, hi);
  const long last_diagonal = static_cast<long>(budget.max_m) + budget.max_param;
  long examined = 0;
  std::vector<Cell> cells;
  std::vector<char> hits;

  for (long diag = 2; diag <= last_diagonal; ++diag) {
    cells.clear();
    for (int m = 1; m <= budget.max_m && m < diag; m += 2) {
      const long param = diag - m;
      if (param > budget.max_param) continue;
      const int p = static_cast<int>(param);
      if (!parity_ok(regime.family, p)) continue;
      if (family_degree(regime.family, p) * m > budget.max_degree) continue;
      cells.push_back({m, p});
    }
    if (cells.empty()) continue;

    hits.assign(cells.size(), 0);
    const auto count = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for schedule(dynamic, 1) if (count > 1)
    for (std::int64_t i = 0; i < count; ++i) hits[i] = cell_has_sign_change(regime, cells[i]) ? 1 : 0;
    examined += count;

    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!hits[i]) continue;
      const Cell& cell = cells[i];
      WitnessCertificate cert;
      cert.target_z = z;
      cert.epsilon = eps;
      cert.family = regime.family;
      cert.param = cell.param;
      cert.m = cell.m;
      cert.composed_degree = family_degree(regime.family, cell.param) * cell.m;
      cert.case_tag = regime.tag;
      cert.enclosure =
          refine_leftmost(closed_form_of(regime.family, cell.param), cell.m, regime.lo, regime.hi, tol);
      return cert;
    }
  }
  throw BudgetExhausted("no witness within budget (max_m=" + std::to_string(budget.max_m) +
                            ", max_param=" + std::to_string(budget.max_param) +
                            ", max_degree=" + std::to_string(budget.max_degree) +
                            "); searched diagonals up to m+param=" + std::to_string(last_diagonal) +
                            ", " + std::to_string(examined) + " cells",
                        last_diagonal, examined);
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

VerificationReport verify_certificate(const WitnessCertificate& cert) {
  VerificationReport report;
  auto& out = report.checks;

  out.push_back(check("query", cert.target_z <= 0 && cert.epsilon > 0,
                      "z <= 0 and epsilon > 0 required"));
  const bool m_ok = cert.m >= 1 && cert.m % 2 == 1;
  out.push_back(check("parity-m", m_ok, "m = " + std::to_string(cert.m)));
  out.push_back(check("parity-param", parity_ok(cert.family, cert.param),
                      to_string(cert.family) + " with parameter " + std::to_string(cert.param)));
  out.push_back(check("case-family", family_for_case(cert.case_tag) == cert.family,
                      to_string(cert.case_tag) + " / " + to_string(cert.family)));

  const auto& iv = cert.enclosure.interval;
  const Rational w_lo = cert.target_z - cert.epsilon;
  const Rational w_hi = cert.target_z + cert.epsilon;
  out.push_back(check("containment", iv.lo <= iv.hi && w_lo < iv.lo && iv.hi < w_hi,
                      "[" + to_fixed(iv.lo, 12) + ", " + to_fixed(iv.hi, 12) + "] inside (" +
                          to_fixed(w_lo, 12) + ", " + to_fixed(w_hi, 12) + ")"));

  if (!m_ok || !parity_ok(cert.family, cert.param) || cert.param < 1) {
    out.push_back(check("polynomial", false, "skipped: invalid family parameters"));
    return report;
  }

  const Poly composed = compose_with_complete(dom_poly_closed_form(closed_form_of(cert.family, cert.param)), cert.m);
  out.push_back(check("composed-degree", composed.degree() == cert.composed_degree,
                      "expanded degree " + std::to_string(composed.degree())));
  out.push_back(check("monic", !composed.is_zero() && composed.leading() == 1));

  if (cert.enclosure.note == Certification::kExact) {
    const bool zero = iv.lo == iv.hi && composed.sign_at(iv.lo) == 0;
    out.push_back(check("exact-root", zero, "P(" + to_fraction_string(iv.lo) + ") == 0"));
  } else {
    const int s_lo = composed.sign_at(iv.lo);
    const int s_hi = composed.sign_at(iv.hi);
    const bool opposite = s_lo != 0 && s_hi != 0 && s_lo != s_hi;
    out.push_back(check("sign-change", opposite,
                        "P(lo) sign " + std::to_string(s_lo) + ", P(hi) sign " + std::to_string(s_hi)));
    out.push_back(check("recorded-signs", s_lo == cert.enclosure.sign_lo && s_hi == cert.enclosure.sign_hi));
  }

  // family_degree is also the order of the family graph
  const long vertices = family_degree(cert.family, cert.param) * cert.m;
  if (vertices <= 20) {
    const Graph base = witness_graph(cert.family, cert.param);
    const Poly brute = dom_poly_bruteforce(substitute_complete(base, cert.m));
    out.push_back(check("bruteforce-crosscheck", brute == composed,
                        std::to_string(vertices) + "-vertex graph"));
  }
  return report;
}

}  // namespace domroots
