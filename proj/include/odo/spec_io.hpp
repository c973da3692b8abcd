#pragma once

#include <string_view>

#include <json.hpp>

#include "odo/odometer.hpp"

namespace odo {

using Json = nlohmann::ordered_json;

/// "z", "dihedral" or "direct_product"; UnknownGroupKind otherwise.
GroupKind parse_group_kind(std::string_view name);

/// {"group": ..., "chain": {"explicit": [...]} | {"geometric": {"start": a, "ratio": r}},
///  "depth": d, "tail": "explicit" | {"geometric": r}}. Integers may be JSON
/// numbers or decimal strings.
OdometerSpec parse_spec(const Json& doc);
OdometerSpec parse_spec_text(std::string_view text);

Json serialize_spec(const OdometerSpec& spec);

/// A JSON number when it fits in 64 bits, a decimal string otherwise.
Json integer_json(const Integer& n);

}  // namespace odo
