#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "rbrack/algebra.hpp"
#include "rbrack/cayley.hpp"
#include "rbrack/construct.hpp"
#include "rbrack/group.hpp"
#include "rbrack/operators.hpp"

// JSON file formats. Tables: {"kind":"rack"|"group"|"raw","n":N,"table":[[...],...]}
// (row-major, table[x][y] = x*y). Operator maps: {"map":[...]}. Phi actions:
// {"perms":[[...],...]}. Union specs: {"sigma":[...],"tau":[...]}. All
// emission uses ordered_json so output is byte-stable.

namespace rbrack {

using json = nlohmann::ordered_json;

json table_to_json(const CayleyTable& t, const std::string& kind = "rack");
CayleyTable table_from_json(const nlohmann::json& j);
std::string table_kind(const nlohmann::json& j);

json operator_to_json(const OperatorMap& b);
OperatorMap operator_from_json(const nlohmann::json& j);

json phi_to_json(const PhiAction& phi);
PhiAction phi_from_json(const nlohmann::json& j);

json union_spec_to_json(const UnionSpec& spec);
UnionSpec union_spec_from_json(const nlohmann::json& j);

json report_to_json(const StructureReport& r);
json census_summary_json(const OperatorCensus& c);

json algebra_element_to_json(const AlgebraElement& e);
AlgebraElement algebra_element_from_json(const nlohmann::json& j);

json monomial_to_json(const MonomialOperator& m);

// File helpers; throw std::runtime_error with the path on failure.
nlohmann::json load_json(const std::string& path);
void save_json(const json& j, const std::string& path);
// Census as JSON-lines: one operator per line, then a summary record.
void save_census_jsonl(const OperatorCensus& c, const std::string& path);

}  // namespace rbrack
