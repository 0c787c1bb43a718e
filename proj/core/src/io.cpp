#include "repext/io.hpp"

#include <fstream>

namespace repext {

namespace {

json complex_to_json(std::complex<double> z) {
    return json::array({z.real(), z.imag()});
}

json rep_to_json(const UnitaryRep& rep) {
    json out = json::object();
    for (int g = 0; g < rep.group->order; ++g)
        out[std::to_string(g)] = matrix_to_json(rep.mats[g]);
    return out;
}

std::string verdict_name(ExtendVerdict v) {
    switch (v) {
        case ExtendVerdict::Extended: return "extended";
        case ExtendVerdict::NoExtension: return "no";
        default: return "undecided";
    }
}

std::string trivial_name(TrivialVerdict v) {
    switch (v) {
        case TrivialVerdict::True: return "trivial";
        case TrivialVerdict::False: return "nontrivial";
        default: return "undecided";
    }
}

} // namespace

json matrix_to_json(const CMat& M) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(complex_to_json(M(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

CMat matrix_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty())
        throw input_error(path + ": expected a non-empty array of rows");
    const auto rows = j.size();
    const auto cols = j[0].size();
    CMat M(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw input_error(path + "/" + std::to_string(i) + ": ragged matrix row");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& e = j[i][c];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw input_error(path + "/" + std::to_string(i) + "/" + std::to_string(c) +
                                  ": entry must be a [re, im] pair");
            M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
                std::complex<double>(e[0].get<double>(), e[1].get<double>());
        }
    }
    return M;
}

ProblemSpec parse_problem(const json& j) {
    ProblemSpec spec;
    if (!j.contains("group")) throw input_error("/group: missing");
    const json& g = j["group"];
    std::string kind = g.value("kind", "");
    if (kind == "table") {
        if (!g.contains("mul") || !g["mul"].is_array())
            throw input_error("/group/mul: missing or not an array");
        std::vector<std::vector<int>> mul;
        for (const auto& row : g["mul"]) mul.push_back(row.get<std::vector<int>>());
        std::vector<std::string> labels;
        if (g.contains("labels")) labels = g["labels"].get<std::vector<std::string>>();
        spec.group = group_from_table(std::move(mul), std::move(labels));
    } else if (kind == "perm") {
        if (!g.contains("generators"))
            throw input_error("/group/generators: missing");
        std::vector<std::vector<int>> perms;
        for (const auto& p : g["generators"]) perms.push_back(p.get<std::vector<int>>());
        int degree = g.value("degree", perms.empty() ? 1 : static_cast<int>(perms[0].size()));
        for (const auto& p : perms)
            if (static_cast<int>(p.size()) != degree)
                throw input_error("/group/generators: degree mismatch");
        spec.group = group_from_generators(perms, g.value("max_order", 10000));
    } else {
        throw input_error("/group/kind: must be \"table\" or \"perm\"");
    }

    if (!j.contains("subgroup")) throw input_error("/subgroup: missing");
    spec.subgroup = j["subgroup"].get<std::vector<int>>();

    if (!j.contains("rep") || !j["rep"].is_object())
        throw input_error("/rep: missing or not an object");
    for (const auto& [key, val] : j["rep"].items()) {
        int idx;
        try {
            idx = std::stoi(key);
        } catch (...) {
            throw input_error("/rep/" + key + ": key is not an element index");
        }
        spec.rep_entries.emplace_back(idx, matrix_from_json(val, "/rep/" + key));
    }

    spec.tol = j.value("tol", kDefaultTol);
    if (spec.tol <= 0) throw input_error("/tol: must be positive");
    spec.seed = j.value("seed", std::uint64_t{1});
    if (j.contains("transversal_seed"))
        spec.transversal_seed = j["transversal_seed"].get<std::uint64_t>();
    if (j.contains("tasks")) {
        spec.tasks.clear();
        if (j["tasks"].is_string())
            spec.tasks.insert(j["tasks"].get<std::string>());
        else
            for (const auto& t : j["tasks"]) spec.tasks.insert(t.get<std::string>());
        for (const auto& t : spec.tasks)
            if (t != "all" && t != "analyze" && t != "extend" && t != "stabilize" &&
                t != "crosscheck")
                throw input_error("/tasks: unknown task \"" + t + "\"");
    }
    return spec;
}

ProblemSpec load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open problem file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error(path + ": JSON parse error: " + e.what());
    }
    return parse_problem(j);
}

json report_to_json(const ExtensionReport& rep) {
    json out;
    out["invariant"] = rep.invariant;
    if (!rep.invariant) {
        out["invariance_witnesses"] = rep.invariance_witnesses;
        return out;
    }
    out["commutant_dim"] = rep.commutant_dim;
    out["irreducible"] = rep.irreducible;
    out["trivial"] = trivial_name(rep.trivial);
    if (rep.class_order) out["class_order"] = *rep.class_order;
    if (rep.sigma) {
        json table = json::array();
        for (const auto& row : *rep.sigma) {
            json r = json::array();
            for (auto v : row) r.push_back(complex_to_json(v));
            table.push_back(std::move(r));
        }
        out["sigma"] = std::move(table);
    }
    if (rep.coboundary_witness) {
        json nu = json::array();
        for (auto v : *rep.coboundary_witness) nu.push_back(complex_to_json(v));
        out["coboundary_witness"] = std::move(nu);
    }
    out["extension"]["verdict"] = verdict_name(rep.extend_verdict);
    if (!rep.extend_note.empty()) out["extension"]["note"] = rep.extend_note;
    if (rep.extension) out["extension"]["matrices"] = rep_to_json(*rep.extension);
    if (rep.stabilized) {
        out["stabilized"]["dim"] = rep.stabilized->dim;
        out["stabilized"]["matrices"] = rep_to_json(*rep.stabilized);
    }
    json res = json::object();
    for (const auto& [name, r] : rep.residuals) res[name] = r;
    out["residuals"] = std::move(res);
    out["tol"] = rep.tol;
    out["seed"] = rep.seed;
    out["transversal"] = rep.transversal;
    out["intertwiner_attempts"] = rep.intertwiner_attempts;
    return out;
}

} // namespace repext
