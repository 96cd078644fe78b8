#pragma once

// JSON encodings. Keys come out sorted (nlohmann::json stores objects in a
// std::map), rationals are "p/q" strings, integers are numbers when they fit
// in 64 bits and decimal strings otherwise. Decoders throw DomainError naming
// the offending field.

#include <string>

#include <json.hpp>

#include "schubert/blowup.hpp"
#include "schubert/cones.hpp"
#include "schubert/delpezzo.hpp"
#include "schubert/lp.hpp"
#include "schubert/orbits.hpp"

namespace schubert {

using Json = nlohmann::json;

Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const RationalVector& v);
Json to_json(const Partition& p);
Json to_json(const ChowClass& c);
Json to_json(const BlowupClass& c);
Json to_json(const Decomposition& d);
Json to_json(const ConeSpec& c);
Json to_json(const IncidenceMatrix& m);
Json to_json(const OrbitRepresentative& r);
Json to_json(const DenseOrbitReport& r);
Json to_json(const DelPezzoReport& r);
Json to_json(const SGenerationReport& r);

Integer integer_from_json(const Json& j, const std::string& field);
Rational rational_from_json(const Json& j, const std::string& field);
RationalVector vector_from_json(const Json& j, const std::string& field);
std::vector<int> parts_from_json(const Json& j, const std::string& field);
ChowClass chow_from_json(const Json& j);
/// Reads {"k","n","r","grading","m","terms","exc"}; "configuration" is optional.
BlowupClass blowup_from_json(const Json& j);
/// Array of {"label": ..., "vector": [...]} plus an optional {"basis": [...]} wrapper.
ConeSpec cone_from_json(const Json& j);

/// Parses a comma-separated partition such as "2,1"; empty string is the empty partition.
std::vector<int> parse_parts(const std::string& text);

Json read_json_file(const std::string& path);
/// Canonical text: two-space indent, sorted keys, trailing newline.
std::string dump_canonical(const Json& j);

}  // namespace schubert
