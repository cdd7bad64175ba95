#include "domroots/realroots.hpp"

#include <algorithm>
#include <utility>

#include "domroots/errors.hpp"

namespace domroots {

std::string to_string(Certification c) {
  switch (c) {
    case Certification::kSimpleCertified:
      return "simple-certified";
    case Certification::kSturmCounted:
      return "sturm-counted";
    case Certification::kExact:
      return "exact";
  }
  return "unknown";
}

Certification certification_from_string(const std::string& s) {
  if (s == "simple-certified") return Certification::kSimpleCertified;
  if (s == "sturm-counted") return Certification::kSturmCounted;
  if (s == "exact") return Certification::kExact;
  throw ParseError("unknown certification tag '" + s + "'", 0);
}

namespace {

// Divides by the positive content, keeping every sign.
Poly reduce_content(const Poly& p) {
  if (p.is_zero()) return p;
  const BigInt g = p.content();
  if (g == 1) return p;
  std::vector<BigInt> v(p.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), p.coeffs()[i].get_mpz_t(), g.get_mpz_t());
  return Poly(std::move(v));
}

int count_variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

SturmChain::SturmChain(const Poly& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  chain_.push_back(square_free_part(p));
  if (chain_.back().degree() == 0) return;
  chain_.push_back(reduce_content(chain_.back().derivative()));
  while (chain_.back().degree() > 0) {
    Poly r = reduce_content(-pseudo_remainder(chain_[chain_.size() - 2], chain_.back()));
    if (r.is_zero()) break;  // cannot happen for a square-free input
    chain_.push_back(std::move(r));
  }
}

int SturmChain::variations_at(const Rational& q) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(p.sign_at(q));
  return count_variations(signs);
}

int SturmChain::variations_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) {
    const int s = sgn(p.leading());
    signs.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return count_variations(signs);
}

int SturmChain::variations_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(sgn(p.leading()));
  return count_variations(signs);
}

int SturmChain::total_real_roots() const {
  return variations_at_neg_infinity() - variations_at_pos_infinity();
}

SturmChain sturm_chain(const Poly& p) { return SturmChain(p); }

int count_roots_in(const SturmChain& chain, const RationalInterval& interval) {
  if (interval.lo > interval.hi) throw DomainError("interval with lo > hi");
  const Poly& s = chain.square_free();
  if (s.sign_at(interval.lo) == 0 || s.sign_at(interval.hi) == 0) {
    throw EndpointIsRoot("interval endpoint is a root; nudge it before counting");
  }
  if (interval.lo == interval.hi) return 0;
  return chain.variations_at(interval.lo) - chain.variations_at(interval.hi);
}

Rational cauchy_bound(const Poly& p) {
  if (p.degree() < 1) return 1;
  BigInt mx = 0;
  for (int i = 0; i < p.degree(); ++i) mx = std::max(mx, BigInt(abs(p.coeffs()[i])));
  Rational b(mx, abs(p.leading()));
  b.canonicalize();
  return b + 1;
}

RootEnclosure negate(const RootEnclosure& e, const Poly& reflected) {
  RootEnclosure out;
  out.interval = {-e.interval.hi, -e.interval.lo};
  out.sign_lo = reflected.sign_at(out.interval.lo);
  out.sign_hi = reflected.sign_at(out.interval.hi);
  out.note = e.note;
  return out;
}

namespace {

class Isolator {
 public:
  Isolator(const Poly& p, const Rational& tol) : p_(p), chain_(p), tol_(tol) {}

  std::vector<RootEnclosure> run(Rational lo, Rational hi) {
    if (lo > hi) throw DomainError("isolation window with lo > hi");
    if (lo == hi) {
      if (sq().sign_at(lo) == 0) emit_point(lo);
      return std::move(out_);
    }
    const Rational span = hi - lo;
    if (sq().sign_at(lo) == 0) {
      emit_point(lo);
      lo += separation(lo, span / 4);
    }
    if (sq().sign_at(hi) == 0) {
      emit_point(hi);
      hi -= separation(hi, span / 4);
    }
    if (lo < hi) process(lo, hi);
    std::sort(out_.begin(), out_.end(),
              [](const RootEnclosure& a, const RootEnclosure& b) { return a.interval.lo < b.interval.lo; });
    return std::move(out_);
  }

 private:
  const Poly& sq() const { return chain_.square_free(); }

  void emit_point(const Rational& r) {
    out_.push_back({{r, r}, 0, 0, Certification::kExact});
  }

  void emit(const Rational& a, const Rational& b) {
    RootEnclosure e{{a, b}, p_.sign_at(a), p_.sign_at(b), Certification::kSimpleCertified};
    if (e.sign_lo == e.sign_hi) e.note = Certification::kSturmCounted;
    out_.push_back(std::move(e));
  }

  // For an exact root r, a radius delta <= cap such that r is the only root
  // in (r - delta, r + delta] and neither end is a root. The outward end is
  // the nudged endpoint.
  Rational separation(const Rational& r, const Rational& cap) {
    Rational delta = std::min<Rational>(tol_ / 4, cap);
    for (;;) {
      const Rational a = r - delta;
      const Rational b = r + delta;
      if (sq().sign_at(a) != 0 && sq().sign_at(b) != 0 && count_roots_in(chain_, {a, b}) == 1) {
        return delta;
      }
      delta /= 2;
    }
  }

  void process(const Rational& lo, const Rational& hi) {
    std::vector<std::pair<Rational, Rational>> stack{{lo, hi}};
    while (!stack.empty()) {
      auto [a, b] = std::move(stack.back());
      stack.pop_back();
      const int c = count_roots_in(chain_, {a, b});
      if (c == 0) continue;
      if (c == 1) {
        refine(a, b);
        continue;
      }
      const Rational mid = (a + b) / 2;
      if (sq().sign_at(mid) == 0) {
        emit_point(mid);
        const Rational delta = separation(mid, (b - a) / 4);
        stack.emplace_back(mid + delta, b);
        stack.emplace_back(a, mid - delta);
      } else {
        stack.emplace_back(mid, b);
        stack.emplace_back(a, mid);
      }
    }
  }

  // Exactly one simple root of the square-free part in (a, b]; bisect on
  // its sign change.
  void refine(Rational a, Rational b) {
    const int sa = sq().sign_at(a);
    while (b - a > tol_) {
      const Rational mid = (a + b) / 2;
      const int sm = sq().sign_at(mid);
      if (sm == 0) {
        emit_point(mid);
        return;
      }
      if (sm == sa) {
        a = mid;
      } else {
        b = mid;
      }
    }
    // Integer roots (the common rational case for monic inputs) never land
    // on a dyadic bisection point unless the window is lucky.
    const Rational shifted = (a + b) / 2 + Rational(1, 2);
    BigInt nearest;
    mpz_fdiv_q(nearest.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    const Rational c(nearest);
    if (a < c && c <= b && sq().sign_at(c) == 0) {
      emit_point(c);
      return;
    }
    emit(a, b);
  }

  const Poly& p_;
  SturmChain chain_;
  Rational tol_;
  std::vector<RootEnclosure> out_;
};

}  // namespace

std::vector<RootEnclosure> isolate_real_roots(const Poly& p, const RationalInterval& window,
                                              const Rational& tol) {
  if (tol <= 0) throw DomainError("isolation tolerance must be positive");
  if (p.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
  Isolator iso(p, tol);
  return iso.run(window.lo, window.hi);
}

}  // namespace domroots
