#pragma once

#include <string>

#include <json.hpp>

#include "repext/pipeline.hpp"

namespace repext {

using json = nlohmann::ordered_json;

// Problem files:
//   {
//     "group": {"kind":"table","mul":[[...]]}
//            | {"kind":"perm","degree":d,"generators":[[...],...]},
//     "subgroup": [indices],
//     "rep": {"<element index>": [[[re,im],...],...], ...},
//     "tol": 1e-9, "seed": 1, "tasks": "all" | ["analyze","extend",...]
//   }
// Errors carry a JSON-pointer-style path to the offending field.
ProblemSpec parse_problem(const json& j);
ProblemSpec load_problem(const std::string& path);

json matrix_to_json(const CMat& M);
CMat matrix_from_json(const json& j, const std::string& path);

json report_to_json(const ExtensionReport& rep);

} // namespace repext
