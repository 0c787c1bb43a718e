#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repext/errors.hpp"

namespace repext {

// A finite group as an indexed element set with a full Cayley table.
// Element indices run 0..order-1 and the identity is always index 0.
struct FiniteGroup {
    int order = 1;
    std::vector<std::vector<int>> mul;   // mul[g][h] = gh
    std::vector<int> inv;                // inv[g]*g = e
    std::vector<std::string> labels;     // optional, empty or size == order

    int identity() const { return 0; }
    int product(int g, int h) const { return mul[g][h]; }
    int inverse(int g) const { return inv[g]; }
    int conjugate(int s, int g) const { return mul[mul[s][g]][inv[s]]; } // s g s^-1
    int element_order(int g) const;
    std::string label(int g) const;

    bool operator==(const FiniteGroup& o) const { return mul == o.mul; }
};

// Builds a group from a Cayley table; checks associativity, identity at 0,
// inverses. Throws input_error on violation.
FiniteGroup group_from_table(std::vector<std::vector<int>> mul,
                             std::vector<std::string> labels = {});

// Closure of a set of permutations of {0..degree-1} under composition,
// breadth-first from the identity with the generators in the given order.
// Ordering of elements is deterministic. Throws input_error if the inputs
// are not permutations or the closure exceeds max_order.
FiniteGroup group_from_generators(const std::vector<std::vector<int>>& perms,
                                  int max_order = 10000);

// A normal subgroup of `parent`, carrying its own group structure.
// `group` indexes the members in ascending parent-index order, so
// members[0] == 0 and group element i corresponds to parent element
// members[i].
struct NormalSubgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> members;        // sorted parent indices
    std::vector<int> pos;            // parent index -> member position, -1 outside
    FiniteGroup group;               // N with its own Cayley table

    bool contains(int g) const { return pos[g] >= 0; }
    int position(int g) const { return pos[g]; }
};

// Checks closure and normality; throws input_error naming a violating pair.
NormalSubgroup normal_subgroup(const FiniteGroup& G, std::vector<int> members);

// Subgroup closure of a set of elements inside G (no normality requirement).
std::vector<int> subgroup_closure(const FiniteGroup& G, std::vector<int> gens);

// Quotient Q = G/N together with the section c : Q -> G.
struct QuotientData {
    FiniteGroup q_group;
    std::vector<int> proj;        // G index -> Q index
    std::vector<int> transversal; // Q index -> G index, transversal[0] == 0
};

// Cosets are indexed by their minimum element; the transversal picks that
// minimum element (so c(eN) = e). With transversal_seed set, a random coset
// representative is picked instead (the identity coset still maps to e).
QuotientData quotient_with_transversal(const FiniteGroup& G, const NormalSubgroup& N,
                                       std::optional<std::uint64_t> transversal_seed = std::nullopt);

// Factors s = c(sN) * n. Returns (Q index of sN, member position of n in N).
std::pair<int, int> coset_factor(const FiniteGroup& G, const NormalSubgroup& N,
                                 const QuotientData& Qd, int s);

} // namespace repext
