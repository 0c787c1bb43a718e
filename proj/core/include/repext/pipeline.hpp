#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "repext/cohomology.hpp"
#include "repext/extendlab.hpp"
#include "repext/groups.hpp"
#include "repext/obstruction.hpp"
#include "repext/reps.hpp"

namespace repext {

// A parsed problem: group, normal subgroup, representation, knobs.
struct ProblemSpec {
    FiniteGroup group;
    std::vector<int> subgroup;                      // parent element indices
    std::vector<std::pair<int, CMat>> rep_entries;  // parent index -> matrix
    double tol = kDefaultTol;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> transversal_seed;
    std::set<std::string> tasks{"all"};
};

enum class TrivialVerdict { True, False, Undecided };

struct ExtensionReport {
    bool invariant = false;
    std::vector<int> invariance_witnesses;
    int commutant_dim = 0;
    bool irreducible = false;
    // scalar case only: the obstruction cocycle tabulated on Q x Q
    std::optional<std::vector<std::vector<std::complex<double>>>> sigma;
    TrivialVerdict trivial = TrivialVerdict::Undecided;
    std::optional<int> class_order;
    std::optional<std::vector<std::complex<double>>> coboundary_witness;
    ExtendVerdict extend_verdict = ExtendVerdict::Undecided;
    std::string extend_note;
    std::optional<UnitaryRep> extension;
    std::optional<UnitaryRep> stabilized;
    std::map<std::string, double> residuals;
    double tol = kDefaultTol;
    std::uint64_t seed = 1;
    std::vector<int> transversal;
    std::vector<int> intertwiner_attempts;
};

bool task_selected(const std::set<std::string>& tasks, const std::string& name);

// Runs the selected tasks in dependency order:
// invariance -> obstruction -> cohomology -> extension/stabilization -> crosscheck.
ExtensionReport run_pipeline(const ProblemSpec& spec);

} // namespace repext
