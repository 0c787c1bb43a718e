// Batch front end: parse a problem file (or a corpus directory), run the
// extension pipeline, and emit a machine-readable report.
//
// Exit codes: 0 = completed (regardless of verdict), 1 = input error,
// 2 = internal residual failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "repext/io.hpp"

namespace fs = std::filesystem;

namespace {

repext::json run_one(const std::string& path, const std::optional<std::string>& task,
                     const std::optional<double>& tol,
                     const std::optional<std::uint64_t>& seed,
                     const std::optional<std::uint64_t>& transversal_seed) {
    repext::ProblemSpec spec = repext::load_problem(path);
    if (task) spec.tasks = {*task};
    if (tol) spec.tol = *tol;
    if (seed) spec.seed = *seed;
    if (transversal_seed) spec.transversal_seed = *transversal_seed;
    repext::json out = repext::report_to_json(repext::run_pipeline(spec));
    out["problem"] = path;
    return out;
}

void write_output(const repext::json& out, const std::string& emit) {
    if (emit.empty() || emit == "-") {
        std::cout << out.dump(2) << "\n";
        return;
    }
    // atomic write: temp file in the target directory, then rename
    fs::path target(emit);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp);
        if (!f) throw repext::input_error("cannot write report to " + emit);
        f << out.dump(2) << "\n";
    }
    fs::rename(tmp, target);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"obstruction analysis for extending unitary representations of "
                 "normal subgroups of finite groups"};
    std::string problem;
    std::string corpus_dir;
    std::string emit;
    std::optional<std::string> task;
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> transversal_seed;

    app.add_option("problem", problem, "problem file (JSON)");
    app.add_option("--corpus", corpus_dir, "run every .json problem in a directory");
    app.add_option("--task", task, "analyze | extend | stabilize | crosscheck | all")
        ->check(CLI::IsMember({"analyze", "extend", "stabilize", "crosscheck", "all"}));
    app.add_option("--tol", tol, "tolerance override");
    app.add_option("--seed", seed, "seed override");
    app.add_option("--transversal-seed", transversal_seed,
                   "force a random transversal (choice-independence testing)");
    app.add_option("--emit", emit, "report path (default: stdout)");
    CLI11_PARSE(app, argc, argv);

    try {
        if (!corpus_dir.empty()) {
            std::vector<std::string> files;
            for (const auto& e : fs::directory_iterator(corpus_dir))
                if (e.path().extension() == ".json") files.push_back(e.path().string());
            std::sort(files.begin(), files.end());
            if (files.empty())
                throw repext::input_error("corpus directory has no .json problems: " + corpus_dir);
            repext::json out = repext::json::array();
            for (const auto& f : files) {
                std::cerr << "running " << f << "\n";
                out.push_back(run_one(f, task, tol, seed, transversal_seed));
            }
            write_output(out, emit);
        } else if (!problem.empty()) {
            write_output(run_one(problem, task, tol, seed, transversal_seed), emit);
        } else {
            std::cerr << "error: give a problem file or --corpus DIR\n";
            return 1;
        }
    } catch (const repext::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const repext::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
