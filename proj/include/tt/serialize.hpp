#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "tt/coords_oracle.hpp"
#include "tt/generator.hpp"
#include "tt/integrality.hpp"
#include "tt/lengths.hpp"

namespace tt {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json integer_to_json(const Integer& n);
Integer integer_from_json(const Json& j);

// Flat object: field name -> surd text.
Json to_json(const LengthSet& ls);
LengthSet length_set_from_json(const Json& j);

// {"tier", "delta"?, "r"?, "t"?, "lengths"?: {name: "p/q"}}
Json to_json(const IntegralityReport& report);
IntegralityReport integrality_report_from_json(const Json& j);

Json to_json(const FullConfig& config);
FullConfig full_config_from_json(const Json& j);

// {"R1", "R2", "omega", "phi", "points": {name: [x, y]}}
Json to_json(const Scene& scene);

// Fixed header: m,n,t,r1,r2,r3,delta,R1,R2,T1T2,...,T1K,d1_radicand,d2_radicand
std::string csv_header();
std::string csv_row(const FullConfig& config);

}  // namespace tt
