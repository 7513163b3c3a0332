#pragma once

#include <string>

#include <json.hpp>

#include "phasekick/gdj.hpp"
#include "phasekick/oracle.hpp"
#include "phasekick/verify.hpp"

namespace phasekick {

using nlohmann::json;

// File formats. Both loaders validate strictly: exact value-list length,
// entries in range, integer fields nonnegative.
//   FunctionTable      {"n": int, "m": int, "values": [int, ...]}
//   RealFunctionTable  {"n": int, "values": [float, ...]}

FunctionTable function_table_from_json(const json& j);
json function_table_to_json(const FunctionTable& f);

RealFunctionTable real_function_table_from_json(const json& j);
json real_function_table_to_json(const RealFunctionTable& f);

FunctionTable load_function_table(const std::string& path);
void save_function_table(const FunctionTable& f, const std::string& path);

std::string classification_name(Classification c);

json structure_params_to_json(const StructureParams& p);
json gdj_report_to_json(const GdjReport& r);
json check_result_to_json(const CheckResult& c);
json verify_report_to_json(const VerifyReport& r);

}  // namespace phasekick
