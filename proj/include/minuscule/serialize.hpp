#pragma once

// Text emission: JSON (nlohmann ordered_json, so key order is stable and a
// parse/dump round trip is byte-identical), Graphviz DOT, an ASCII grid with
// columns by color and rows by height, and plain tables.

#include <minuscule/divisors.hpp>

#include <json.hpp>

#include <string>

namespace minuscule {

using Json = nlohmann::ordered_json;

Json element_json(const MinusculeQuiver& q);
Json quiver_json(const MinusculeQuiver& q);
Json classification_json(const ClassificationReport& report);
Json cone_json(const ConeDescription& cone);
Json peel_json(const MinusculeQuiver& q, const DivisorClass& divisor, const PeelResult& result);

/// Two-space indented dump followed by a newline.
std::string dump(const Json& j);

std::string quiver_dot(const MinusculeQuiver& q);
std::string quiver_ascii(const MinusculeQuiver& q);
std::string quiver_table(const MinusculeQuiver& q);
std::string classification_table(const ClassificationReport& report);

}  // namespace minuscule
