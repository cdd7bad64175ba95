#include "domroots/rational.hpp"

#include <cctype>
#include <cmath>

#include "domroots/errors.hpp"

namespace domroots {

namespace {

BigInt pow10(unsigned long k) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, k);
  return out;
}

// Accepts an optional sign followed by digits; returns the parsed integer.
BigInt parse_integer(std::string_view s, std::size_t base_offset) {
  if (s.empty()) throw ParseError("expected an integer", base_offset);
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw ParseError("expected digits after sign", base_offset + i);
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw ParseError("unexpected character in number", base_offset + j);
    }
  }
  BigInt v(std::string(s.substr(i)), 10);
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string buf;
  // Accept the Unicode minus sign as well as ASCII '-'.
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i).starts_with("\xE2\x88\x92")) {
      buf.push_back('-');
      i += 2;
    } else {
      buf.push_back(text[i]);
    }
  }
  std::string_view s(buf);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty number", 0);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(s.substr(0, slash), 0);
    BigInt den = parse_integer(s.substr(slash + 1), slash + 1);
    if (den == 0) throw ParseError("zero denominator", slash + 1);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    BigInt ev = parse_integer(s.substr(e + 1), e + 1);
    if (!ev.fits_slong_p() || std::abs(ev.get_si()) > 100000) {
      throw ParseError("exponent out of range", e + 1);
    }
    exponent = ev.get_si();
    s = s.substr(0, e);
  }

  std::string digits;
  long frac_digits = 0;
  bool negative = false;
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    i = 1;
  }
  bool seen_point = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw ParseError("unexpected character in number", i);
    }
  }
  if (digits.empty()) throw ParseError("number has no digits", 0);

  BigInt mant(digits, 10);
  if (negative) mant = -mant;
  const long scale = exponent - frac_digits;
  Rational q;
  if (scale >= 0) {
    q = Rational(mant * pow10(static_cast<unsigned long>(scale)));
  } else {
    q = Rational(mant, pow10(static_cast<unsigned long>(-scale)));
    q.canonicalize();
  }
  return q;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_fixed(const Rational& q, int digits) {
  const BigInt scale = pow10(static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * scale + Rational(1, 2);
  BigInt whole = scaled.get_num() / scaled.get_den();  // floor for nonnegative
  std::string s = whole.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  if (q < 0 && whole != 0) out.insert(0, "-");
  return out;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite double cannot become a rational");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

Rational pow10_neg(int k) { return Rational(BigInt(1), pow10(static_cast<unsigned long>(k))); }

int sign(const Rational& q) { return sgn(q); }
int sign(const BigInt& z) { return sgn(z); }

}  // namespace domroots
