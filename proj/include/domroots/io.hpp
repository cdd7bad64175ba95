#pragma once

#include <string>

#include <json.hpp>

#include "domroots/density.hpp"
#include "domroots/realroots.hpp"

namespace domroots {

using Json = nlohmann::json;

/// {"n": degree, "coeffs": ["c_0", ..., "c_n"]}; decimal strings because
/// coefficients outgrow machine words.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// Interval endpoints as "num/den" strings.
Json enclosure_to_json(const RootEnclosure& e);
RootEnclosure enclosure_from_json(const Json& j);

Json certificate_to_json(const WitnessCertificate& c);
/// Throws ParseError on a missing or malformed field.
WitnessCertificate certificate_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);

}  // namespace domroots
