#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repext/cohomology.hpp"
#include "repext/groups.hpp"
#include "repext/obstruction.hpp"
#include "repext/reps.hpp"

namespace repext {

enum class ExtendVerdict { Extended, NoExtension, Undecided };

struct ExtendResult {
    ExtendVerdict verdict = ExtendVerdict::Undecided;
    std::optional<UnitaryRep> extension; // rep of G, restriction to N equals pi
    double max_residual = 0.0;
    std::string note;
};

// Theorem 1 converse: rho(s) = nu_{sN} V_s. Scalar commutant: decided via
// the exact coboundary test. Abelian commutant: decided exactly by the
// block-diagonal reduction. General commutant: a seeded random-restart
// least-squares search when |Q| <= 6 and dim <= 4, otherwise Undecided.
ExtendResult find_extension(const UnitaryRep& pi, const NormalSubgroup& N,
                            const QuotientData& Qd, const TwistedActionData& tad,
                            std::uint64_t seed = 0);

struct StabilizeResult {
    UnitaryRep rep; // rep of G on dim * |Q|, restriction to N is pi (x) 1
    std::map<std::string, double> residuals;
};

// Corollary 2: the stabilized extension on H (x) l^2(Q), via
// (nu_x xi)(r) = sigma(x, (rx)^{-1})^* xi(rx) and rho(s) = nu_{sN}(V_s (x) 1).
// Verifies the homomorphism property, the restriction identity and the
// exterior-equivalence identity for (beta, omega) = (alpha (x) id, sigma (x) 1).
StabilizeResult stabilize(const UnitaryRep& pi, const NormalSubgroup& N,
                          const QuotientData& Qd, const TwistedActionData& tad);

// Mackey: rho(s) = U_s (x) W_{sN} for U a projective extension with
// multiplier sigma o (q x q) and W a sigma-bar projective rep of Q.
struct MackeyResult {
    UnitaryRep rep;
    bool irreducible = false;
    double max_restriction_residual = 0.0;
};
MackeyResult mackey_tensor(const ProjectiveExtension& U, const ProjectiveBlock& W,
                           const UnitaryRep& pi, const NormalSubgroup& N,
                           const QuotientData& Qd);

// Induced representation of G on functions Q -> H (blocks ordered by Q
// index), (Ind pi)_t xi(r) = xi(t^{-1} r); pi need not be G-invariant.
UnitaryRep induce(const UnitaryRep& pi, const NormalSubgroup& N, const QuotientData& Qd);

// Multiplication operator M(f) for f : Q -> C, acting blockwise by f(tN).
CMat multiplication_operator(const std::vector<std::complex<double>>& f, int block_dim);

// max_s max_x || M(lt_s delta_x) - (Ind pi)_s M(delta_x) (Ind pi)_s^* ||
double covariance_residual(const UnitaryRep& ind, const QuotientData& Qd, int block_dim);

// Remark 5: builds U_s xi(t) = W_s xi(ts) on the induced space, sets
// R_x = U_{c(x)}, and checks omega = 1 (x) sigma, beta_x(1 (x) T) =
// 1 (x) alpha_x(T), the covariance of (M, Ind pi), and that R intertwines
// (M, Ind pi) with (M o rt_x, Ind pi).
std::map<std::string, double> remark_crosscheck(const UnitaryRep& pi, const NormalSubgroup& N,
                                                const QuotientData& Qd,
                                                const std::vector<CMat>& W,
                                                const TwistedActionData& tad);

} // namespace repext
