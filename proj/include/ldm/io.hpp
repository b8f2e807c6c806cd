#pragma once

// The ldm-1 JSON file format and its pieces.
//
// Prime-field elements are integers in [0, p); cyclotomic elements are arrays
// of phi(N) "num/den" strings. Tables use 1-based indices, partial squares
// use 0 for undetermined cells.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ldm/multinet.hpp"

namespace ldm {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatTag = "ldm-1";

/// "prime:P" or "cyclotomic:N"; throws Errc::BadParameters otherwise.
FieldPtr parse_field_spec(const std::string& spec);

Json field_to_json(const Field& f);
FieldPtr field_from_json(const Json& j);

Json element_to_json(const Element& x);
Element element_from_json(const FieldPtr& f, const Json& j);

Json point_to_json(const Homogeneous& p);
ProjectivePoint point_from_json(const FieldPtr& f, const Json& j);

Json table_to_json(const MultTable& t);
MultTable table_from_json(const Json& j);

Json partial_square_to_json(const PartialSquare& s);

Json multinet_to_json(const LabeledMultinet& m);
/// Throws Errc::FormatError on anything that is not a well-formed ldm-1 object.
LabeledMultinet multinet_from_json(const Json& j);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

void write_multinet(const std::filesystem::path& path, const LabeledMultinet& m);
LabeledMultinet read_multinet(const std::filesystem::path& path);

}  // namespace ldm
