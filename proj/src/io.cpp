#include "domroots/io.hpp"

#include "domroots/errors.hpp"

namespace domroots {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'", 0);
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string", 0);
  return v.get<std::string>();
}

long long int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer", 0);
  return v.get<long long>();
}

int sign_field(const Json& j, const char* key) {
  const long long s = int_field(j, key);
  if (s < -1 || s > 1) throw ParseError(std::string("field '") + key + "' must be -1, 0 or 1", 0);
  return static_cast<int>(s);
}

}  // namespace

Json poly_to_json(const Poly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return {{"n", p.degree()}, {"coeffs", coeffs}};
}

Poly poly_from_json(const Json& j) {
  const long long n = int_field(j, "n");
  const Json& arr = field(j, "coeffs");
  if (!arr.is_array()) throw ParseError("field 'coeffs' must be an array", 0);
  std::vector<BigInt> c;
  for (const auto& v : arr) {
    if (!v.is_string()) throw ParseError("coefficients must be decimal strings", 0);
    BigInt z;
    if (z.set_str(v.get<std::string>(), 10) != 0) throw ParseError("bad coefficient '" + v.get<std::string>() + "'", 0);
    c.push_back(z);
  }
  Poly p(std::move(c));
  if (p.degree() != n) throw ParseError("'n' does not match the coefficient list", 0);
  return p;
}

Json enclosure_to_json(const RootEnclosure& e) {
  return {{"lo", to_fraction_string(e.interval.lo)},
          {"hi", to_fraction_string(e.interval.hi)},
          {"sign_lo", e.sign_lo},
          {"sign_hi", e.sign_hi},
          {"multiplicity_note", to_string(e.note)}};
}

RootEnclosure enclosure_from_json(const Json& j) {
  RootEnclosure e;
  e.interval.lo = parse_rational(string_field(j, "lo"));
  e.interval.hi = parse_rational(string_field(j, "hi"));
  e.sign_lo = sign_field(j, "sign_lo");
  e.sign_hi = sign_field(j, "sign_hi");
  try {
    e.note = certification_from_string(string_field(j, "multiplicity_note"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ParseError(ex.what(), 0);
  }
  return e;
}

Json certificate_to_json(const WitnessCertificate& c) {
  return {{"query", {{"z", to_fraction_string(c.target_z)}, {"epsilon", to_fraction_string(c.epsilon)}}},
          {"family", {{"tag", to_string(c.family)}, {"param", c.param}}},
          {"m", c.m},
          {"composed_degree", c.composed_degree},
          {"case_tag", to_string(c.case_tag)},
          {"enclosure", enclosure_to_json(c.enclosure)}};
}

WitnessCertificate certificate_from_json(const Json& j) {
  WitnessCertificate c;
  const Json& query = field(j, "query");
  c.target_z = parse_rational(string_field(query, "z"));
  c.epsilon = parse_rational(string_field(query, "epsilon"));
  const Json& fam = field(j, "family");
  try {
    c.family = witness_family_from_string(string_field(fam, "tag"));
    c.case_tag = case_tag_from_string(string_field(j, "case_tag"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ParseError(ex.what(), 0);
  }
  c.param = static_cast<int>(int_field(fam, "param"));
  c.m = static_cast<int>(int_field(j, "m"));
  c.composed_degree = static_cast<long>(int_field(j, "composed_degree"));
  c.enclosure = enclosure_from_json(field(j, "enclosure"));
  return c;
}

Json report_to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"all_passed", r.all_passed()}, {"checks", checks}};
}

}  // namespace domroots
