#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "repext/groups.hpp"
#include "repext/matrices.hpp"
#include "repext/obstruction.hpp"

namespace repext {

// A normalized T-valued 2-cocycle on Q: values(e,.) = values(.,e) = 1
// exactly, |values| = 1 and the cocycle identity hold to tol.
struct ScalarTwoCocycle {
    const FiniteGroup* q_group = nullptr;
    std::vector<std::vector<std::complex<double>>> values;
    double tol = kDefaultTol;

    std::complex<double> at(int x, int y) const { return values[x][y]; }
    // entrywise k-th power; stays a normalized cocycle
    ScalarTwoCocycle power(int k) const;
    ScalarTwoCocycle conjugated() const;
};

// Extracts the scalar cocycle from a twisted action with one-dimensional
// commutant; snaps the identity row/column to exactly 1 and verifies the
// cocycle identity. Throws input_error on non-scalar input.
ScalarTwoCocycle normalize_cocycle(const TwistedActionData& tad, const FiniteGroup& Q);

// From a raw table of unit-modulus values.
ScalarTwoCocycle make_cocycle(const FiniteGroup& Q,
                              std::vector<std::vector<std::complex<double>>> values,
                              double tol = kDefaultTol);

// delta nu (x,y) = nu(xy) conj(nu(x) nu(y)) for nu : Q -> T, nu(e) = 1.
ScalarTwoCocycle coboundary_of(const FiniteGroup& Q,
                               const std::vector<std::complex<double>>& nu,
                               double tol = kDefaultTol);

struct CoboundaryWitness {
    std::vector<std::complex<double>> nu; // indexed by Q, nu[0] = 1
};

// Decides triviality exactly over the integers (Smith normal form of the
// bar-complex boundary matrix applied to the phase matrix); the witness is
// recovered by a rational solve and re-verified. Returns nullopt when the
// class is nontrivial.
std::optional<CoboundaryWitness> is_coboundary(const ScalarTwoCocycle& sigma);

// Smallest k >= 1 with sigma^k a coboundary; always <= |Q|.
int class_order(const ScalarTwoCocycle& sigma);

// Projective representation data with scalar multiplier.
struct ProjectiveRep {
    const FiniteGroup* q_group = nullptr;
    int dim = 0;
    std::vector<CMat> mats;
    ScalarTwoCocycle multiplier;
};

// L_x delta_y = sigma(x,y) delta_{xy} on a |Q|-dimensional space; the
// relation L_x L_y = sigma(x,y) L_{xy} is verified.
ProjectiveRep twisted_regular_rep(const ScalarTwoCocycle& sigma);

// One irreducible constituent of a projective rep.
struct ProjectiveBlock {
    int dim = 0;
    CMat isometry; // columns span the invariant subspace
    std::vector<CMat> mats;
};

// Splits L along eigenspaces of seeded random Hermitian commutant elements
// until every block has scalar commutant. Deterministic given the seed.
std::vector<ProjectiveBlock> decompose_projective(const ProjectiveRep& L, std::uint64_t seed);

} // namespace repext
