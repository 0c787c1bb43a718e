#pragma once

#include <cstdint>
#include <vector>

#include "repext/groups.hpp"
#include "repext/matrices.hpp"

namespace repext {

// A unitary matrix representation of a finite group: one matrix per element.
struct UnitaryRep {
    const FiniteGroup* group = nullptr;
    int dim = 0;
    std::vector<CMat> mats; // indexed by group element
    double tol = kDefaultTol;

    const CMat& at(int g) const { return mats[g]; }
};

struct RepResiduals {
    double hom = 0.0;
    double unitary = 0.0;
    bool pass(double tol) const { return hom <= tol && unitary <= tol; }
};

// Max homomorphism and unitarity residuals over all pairs / elements.
RepResiduals rep_validate(const UnitaryRep& rep);

// Throws numeric_error unless rep_validate passes at rep.tol.
UnitaryRep make_rep(const FiniteGroup& G, std::vector<CMat> mats, double tol = kDefaultTol);

// Completes a rep given matrices on a generating subset; remaining elements
// are filled in along breadth-first words and the result is validated.
UnitaryRep complete_rep(const FiniteGroup& G,
                        const std::vector<std::pair<int, CMat>>& generators,
                        double tol = kDefaultTol);

// pi^s : n |-> pi(s n s^{-1}) for pi a rep of N.group and s in the parent.
UnitaryRep conjugate_rep(const UnitaryRep& pi, const NormalSubgroup& N, int s);

// Elementwise trace comparison; for finite groups this decides unitary
// equivalence exactly.
bool characters_equal(const UnitaryRep& a, const UnitaryRep& b);

struct InvarianceResult {
    bool invariant = true;
    std::vector<int> witnesses; // parent elements s with pi^s not equivalent
};

// G-invariance of pi (a rep of N.group), tested over a transversal.
InvarianceResult is_g_invariant(const UnitaryRep& pi, const NormalSubgroup& N,
                                const QuotientData& Qd);

// Unitary W with W pi(n) W* = pi2(n), by averaging a seeded random matrix
// and taking the polar part. Requires characters_equal(pi, pi2); retries
// with fresh randomness on singular averages, up to 8 times.
CMat unitary_intertwiner(const UnitaryRep& pi, const UnitaryRep& pi2, std::uint64_t seed,
                         int* attempts_out = nullptr);

struct CommutantBasis {
    std::vector<CMat> basis; // orthonormal, Frobenius inner product
    int dim() const { return static_cast<int>(basis.size()); }
};

CommutantBasis commutant(const UnitaryRep& rep);
bool is_irreducible(const UnitaryRep& rep);

std::complex<double> character(const UnitaryRep& rep, int g);

// Seeded complex matrix with independent standard normal entries.
CMat random_matrix(int rows, int cols, std::uint64_t seed);
CMat random_unitary(int dim, std::uint64_t seed);

} // namespace repext
