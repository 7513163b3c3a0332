#include "phasekick/json_io.hpp"

#include <fstream>

namespace phasekick {

namespace {

std::size_t require_uint(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<std::int64_t>() < 0)
        throw std::invalid_argument(std::string("expected a nonnegative integer field \"") + key +
                                    "\"");
    return j.at(key).get<std::size_t>();
}

const json& require_array(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw std::invalid_argument(std::string("expected an array field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

FunctionTable function_table_from_json(const json& j) {
    const std::size_t n = require_uint(j, "n");
    const std::size_t m = require_uint(j, "m");
    const json& arr = require_array(j, "values");
    std::vector<std::size_t> values;
    values.reserve(arr.size());
    for (const json& v : arr) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
            throw std::invalid_argument("function table values must be nonnegative integers");
        values.push_back(v.get<std::size_t>());
    }
    return {n, m, std::move(values)};  // length/range checks live in the constructor
}

json function_table_to_json(const FunctionTable& f) {
    return {{"n", f.n}, {"m", f.m}, {"values", f.values}};
}

RealFunctionTable real_function_table_from_json(const json& j) {
    const std::size_t n = require_uint(j, "n");
    const json& arr = require_array(j, "values");
    std::vector<double> values;
    values.reserve(arr.size());
    for (const json& v : arr) {
        if (!v.is_number())
            throw std::invalid_argument("real function table values must be numbers");
        values.push_back(v.get<double>());
    }
    return {n, std::move(values)};
}

json real_function_table_to_json(const RealFunctionTable& f) {
    return {{"n", f.n}, {"values", f.values}};
}

FunctionTable load_function_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return function_table_from_json(json::parse(in));
}

void save_function_table(const FunctionTable& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << function_table_to_json(f).dump(2) << '\n';
}

std::string classification_name(Classification c) {
    return c == Classification::Constant ? "constant" : "evenly_distributed";
}

json structure_params_to_json(const StructureParams& p) {
    return {{"d", p.d}, {"l", p.l}, {"a", p.a}, {"class_sizes", p.class_sizes}};
}

json gdj_report_to_json(const GdjReport& r) {
    json j{{"distribution", r.distribution},
           {"classification", classification_name(r.classification)},
           {"oracle_calls", r.oracle_calls},
           {"k_used", r.k_used}};
    j["recovered"] = r.recovered ? structure_params_to_json(*r.recovered) : json(nullptr);
    return j;
}

json check_result_to_json(const CheckResult& c) {
    return {{"name", c.name}, {"max_residual", c.max_residual}, {"threshold", c.threshold},
            {"pass", c.pass}};
}

json verify_report_to_json(const VerifyReport& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) checks.push_back(check_result_to_json(c));
    return {{"checks", checks}, {"all_pass", r.all_pass()}};
}

}  // namespace phasekick
