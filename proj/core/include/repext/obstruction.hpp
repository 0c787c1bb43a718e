#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "repext/groups.hpp"
#include "repext/reps.hpp"

namespace repext {

// V_s = W_{c(sN)} pi(c(sN)^{-1} s), one unitary per element of G, with
// V_{sn} = V_s pi(n) and V_e = I.
struct SectionUnitaries {
    std::vector<CMat> V; // indexed by G element
    double tol = kDefaultTol;
};

// Builds the section unitaries from intertwiner witnesses W indexed by Q.
// Each W[x] must satisfy W pi(n) W* = pi(c(x) n c(x)^{-1}) and W[0] = I;
// violations raise numeric_error. The identity V_{sn} = V_s pi(n) is
// verified on all pairs.
SectionUnitaries section_unitaries(const UnitaryRep& pi, const NormalSubgroup& N,
                                   const QuotientData& Qd, const std::vector<CMat>& W);

// The twisted action (alpha, sigma) of Q = G/N on the commutant pi(N)'.
// sigma is stored on Q x Q; alpha[x] is the matrix of T -> V_{c(x)} T V_{c(x)}*
// in the commutant basis.
struct TwistedActionData {
    CommutantBasis commutant;
    SectionUnitaries V;
    std::vector<std::vector<CMat>> sigma; // [x][y], d x d unitaries in pi(N)'
    std::vector<CMat> alpha;              // [x], k x k matrices on the basis
    std::map<std::string, double> residuals;
};

// Constructs (alpha, sigma), verifies descent to Q (sigma recomputed at 3
// random coset representatives per pair), membership of sigma in the
// commutant span, and the twisted-action axioms. Residuals above 10*tol
// raise numeric_error.
TwistedActionData twisted_action(const UnitaryRep& pi, const NormalSubgroup& N,
                                 const QuotientData& Qd, SectionUnitaries V,
                                 std::uint64_t seed = 0);

// Coordinates of T in the (orthonormal) commutant basis, plus the residual
// of T against the span.
std::pair<CVec, double> project_to_span(const std::vector<CMat>& basis, const CMat& T);

// For scalar sigma: checks U_s U_t = sigma(sN,tN) U_{st} for all s,t in G
// with U = V, i.e. V is a projective representation of G with multiplier
// sigma o (q x q). Requires a one-dimensional commutant.
struct ProjectiveExtension {
    std::vector<CMat> U;                       // indexed by G element
    std::vector<std::vector<std::complex<double>>> multiplier; // on Q x Q
    double max_residual = 0.0;
};
ProjectiveExtension projective_extension(const TwistedActionData& tad,
                                         const FiniteGroup& G, const QuotientData& Qd);

} // namespace repext
