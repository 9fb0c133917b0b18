#pragma once
// Problem-spec JSON.  Schema:
//
// {
//   "c": [c_1, ..., c_N],
//   "profiles": [                       // exactly N entries, one per component
//     {
//       "breakpoints": [b_0 < ... < b_{m-1}],   // may be empty or absent
//       "values": [v_0, ..., v_{m-2}],  // value at the LEFT end of each bounded
//                                       // piece [b_i, b_{i+1}); absent => zeros
//       "slopes": [s_0, ..., s_{m-2}],  // absent => zeros
//       "left_tail": vL,                // constant on (-inf, b_0); default 0
//       "right_tail": vR                // constant on [b_{m-1}, inf); default 0
//     }, ...
//   ]
// }
//
// A profile with one breakpoint and no pieces is a plain step (Riemann data);
// with no breakpoints it is the constant left_tail == right_tail.
// Evaluation at a breakpoint is the right-limit.

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "model.hpp"

namespace gburgers {

inline PiecewiseProfile profile_from_json(const nlohmann::json& j) {
    PiecewiseProfile p;
    if (j.contains("breakpoints")) p.breakpoints = j.at("breakpoints").get<std::vector<double>>();
    const std::size_t np = p.breakpoints.size() > 0 ? p.breakpoints.size() - 1 : 0;
    if (j.contains("values")) p.values = j.at("values").get<std::vector<double>>();
    else p.values.assign(np, 0.0);
    if (j.contains("slopes")) p.slopes = j.at("slopes").get<std::vector<double>>();
    else p.slopes.assign(np, 0.0);
    p.left_tail = j.value("left_tail", 0.0);
    p.right_tail = j.value("right_tail", 0.0);
    p.validate();
    return p;
}

inline nlohmann::json profile_to_json(const PiecewiseProfile& p) {
    nlohmann::json j;
    j["breakpoints"] = p.breakpoints;
    j["values"] = p.values;
    j["slopes"] = p.slopes;
    j["left_tail"] = p.left_tail;
    j["right_tail"] = p.right_tail;
    return j;
}

inline ProblemSpec spec_from_json(const nlohmann::json& j) {
    if (!j.contains("c") || !j.contains("profiles"))
        throw std::invalid_argument("problem spec needs 'c' and 'profiles'");
    CoefficientVector c(j.at("c").get<std::vector<double>>());
    std::vector<PiecewiseProfile> ps;
    for (const auto& pj : j.at("profiles")) ps.push_back(profile_from_json(pj));
    return ProblemSpec(std::move(c), std::move(ps));
}

inline nlohmann::json spec_to_json(const ProblemSpec& spec) {
    nlohmann::json j;
    j["c"] = spec.c.c;
    j["profiles"] = nlohmann::json::array();
    for (const auto& p : spec.profiles) j["profiles"].push_back(profile_to_json(p));
    return j;
}

inline ProblemSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("spec parse error in " + path + ": " + e.what());
    }
    try {
        return spec_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("spec schema error in " + path + ": " + e.what());
    }
}

}  // namespace gburgers
