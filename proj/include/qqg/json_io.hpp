#pragma once

#include <string>

#include "json.hpp"
#include "qqg/cyclotomic.hpp"
#include "qqg/majid.hpp"

namespace qqg {

using Json = nlohmann::json;

Json scalar_to_json(const CycScalar& s);
CycScalar scalar_from_json(const Json& j, FieldPtr f);

// Structure dump, schema "qqg-structure/1".
Json structure_to_json(const MajidStructure& m);
MajidStructure structure_from_json(const Json& j);

Json report_to_json(const AxiomReport& r);

}  // namespace qqg
