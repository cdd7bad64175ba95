#include "domroots/poly.hpp"

#include <algorithm>
#include <sstream>

#include "domroots/errors.hpp"

namespace domroots {

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

Poly Poly::monomial(int degree, const BigInt& c) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::from_int64(std::span<const std::int64_t> coeffs) {
  std::vector<BigInt> v;
  v.reserve(coeffs.size());
  for (auto x : coeffs) v.emplace_back(static_cast<long>(x));
  return Poly(std::move(v));
}

Poly Poly::one_plus_x_pow(int k) {
  std::vector<BigInt> v(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    mpz_bin_uiui(v[i].get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(i));
  }
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

int Poly::low_order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(v));
}

Poly Poly::shift_down(int k) const {
  for (int i = 0; i < k && i < static_cast<int>(c_.size()); ++i) {
    if (c_[i] != 0) throw InvariantViolation("shift_down would drop a nonzero coefficient");
  }
  if (k >= static_cast<int>(c_.size())) return {};
  return Poly(std::vector<BigInt>(c_.begin() + k, c_.end()));
}

Poly Poly::taylor_shift(long a) const {
  // Repeated synthetic division; O(d^2) additions.
  std::vector<BigInt> v = c_;
  const int d = degree();
  for (int i = 0; i < d; ++i)
    for (int j = d - 1; j >= i; --j) v[j] += v[j + 1] * a;
  return Poly(std::move(v));
}

Poly Poly::reflect() const {
  std::vector<BigInt> v = c_;
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return Poly(std::move(v));
}

BigInt Poly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return Poly(std::move(v));
}

BigInt Poly::eval_homogeneous(const BigInt& a, const BigInt& b) const {
  if (is_zero()) return 0;
  const int d = degree();
  BigInt acc = c_[d];
  BigInt bpow = 1;
  for (int i = d - 1; i >= 0; --i) {
    bpow *= b;
    acc *= a;
    if (c_[i] != 0) acc += c_[i] * bpow;
  }
  return acc;
}

Rational Poly::eval(const Rational& q) const {
  if (is_zero()) return 0;
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(degree()));
  Rational out(eval_homogeneous(q.get_num(), q.get_den()), den);
  out.canonicalize();
  return out;
}

int Poly::sign_at(const Rational& q) const {
  return sgn(eval_homogeneous(q.get_num(), q.get_den()));
}

double Poly::eval_double(double x) const {
  double acc = 0.0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i].get_d();
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& p) {
  std::vector<BigInt> v(p.c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -p.c_[i];
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return Poly(std::move(v));
}

Poly operator*(const BigInt& s, const Poly& p) {
  std::vector<BigInt> v(p.c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * p.c_[i];
  return Poly(std::move(v));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = c_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) out << mag.get_str();
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

Poly pseudo_remainder(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const BigInt lb = abs(b.leading());
  const int sb = sgn(b.leading());
  // Each step: r <- |lb| * r - sign(lb) * r_lead * x^(dr-db) * b, which
  // multiplies the remainder by the positive factor |lb| per step.
  for (int dr = static_cast<int>(r.size()) - 1; dr >= db; --dr) {
    BigInt lead = r[dr];
    for (auto& x : r) x *= lb;
    if (lead != 0) {
      if (sb < 0) lead = -lead;
      for (int j = 0; j <= db; ++j) r[dr - db + j] -= lead * bc[j];
    }
    r.pop_back();
  }
  return Poly(std::move(r));
}

Poly exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InvariantViolation("exact_divide: degree too small");
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int dr = a.degree(); dr >= db; --dr) {
    if (r[dr] == 0) continue;
    if (!mpz_divisible_p(r[dr].get_mpz_t(), b.leading().get_mpz_t())) {
      throw InvariantViolation("exact_divide: non-integral quotient");
    }
    BigInt t;
    mpz_divexact(t.get_mpz_t(), r[dr].get_mpz_t(), b.leading().get_mpz_t());
    for (int j = 0; j <= db; ++j) r[dr - db + j] -= t * bc[j];
    q[dr - db] = t;
  }
  for (const auto& x : r) {
    if (x != 0) throw InvariantViolation("exact_divide: nonzero remainder");
  }
  return Poly(std::move(q));
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a.primitive_part();
  Poly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Poly square_free_part(const Poly& p) {
  if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
  Poly pp = p.primitive_part();
  if (pp.degree() <= 0) return pp;
  Poly g = gcd(pp, pp.derivative());
  if (g.degree() == 0) return pp;
  // pp is primitive and g | pp with g primitive, so the quotient is integral.
  return exact_divide(pp, g).primitive_part();
}

int sign_variations(const Poly& p) {
  int count = 0;
  int last = 0;
  for (const auto& c : p.coeffs()) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace domroots
