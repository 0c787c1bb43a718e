#include "repext/obstruction.hpp"

#include <random>

namespace repext {

SectionUnitaries section_unitaries(const UnitaryRep& pi, const NormalSubgroup& N,
                                   const QuotientData& Qd, const std::vector<CMat>& W) {
    const FiniteGroup& G = *N.parent;
    const int q = Qd.q_group.order;
    const double tol = pi.tol;
    if (static_cast<int>(W.size()) != q)
        throw input_error("section_unitaries: need one intertwiner per coset");
    if ((W[0] - CMat::Identity(pi.dim, pi.dim)).norm() > tol)
        throw numeric_error("section_unitaries: W at the identity coset must be I");
    for (int x = 0; x < q; ++x) {
        int c = Qd.transversal[x];
        for (int n = 0; n < N.group.order; ++n) {
            int conj = N.position(G.conjugate(c, N.members[n]));
            double r = (W[x] * pi.mats[n] * W[x].adjoint() - pi.mats[conj]).norm();
            if (r > tol)
                throw numeric_error("section_unitaries: bad intertwiner witness at coset " +
                                    std::to_string(x) + ", residual " + std::to_string(r));
        }
    }
    SectionUnitaries su;
    su.tol = tol;
    su.V.resize(G.order);
    for (int s = 0; s < G.order; ++s) {
        auto [x, n] = coset_factor(G, N, Qd, s);
        su.V[s] = W[x] * pi.mats[n];
    }
    for (int s = 0; s < G.order; ++s)
        for (int n = 0; n < N.group.order; ++n) {
            int sn = G.mul[s][N.members[n]];
            if ((su.V[sn] - su.V[s] * pi.mats[n]).norm() > 10 * tol)
                throw numeric_error("section_unitaries: V_{sn} != V_s pi(n)");
        }
    return su;
}

std::pair<CVec, double> project_to_span(const std::vector<CMat>& basis, const CMat& T) {
    CVec coords(basis.size());
    CMat recon = CMat::Zero(T.rows(), T.cols());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        coords(static_cast<Eigen::Index>(i)) = (basis[i].adjoint() * T).trace();
        recon += coords(static_cast<Eigen::Index>(i)) * basis[i];
    }
    return {coords, (recon - T).norm()};
}

TwistedActionData twisted_action(const UnitaryRep& pi, const NormalSubgroup& N,
                                 const QuotientData& Qd, SectionUnitaries V,
                                 std::uint64_t seed) {
    const FiniteGroup& G = *N.parent;
    const FiniteGroup& Q = Qd.q_group;
    const int q = Q.order;
    const int d = pi.dim;
    const double tol = pi.tol;

    TwistedActionData tad;
    tad.commutant = commutant(pi);
    const auto& basis = tad.commutant.basis;
    const int k = tad.commutant.dim();

    auto sigma_at = [&](int s, int t) {
        return V.V[s] * V.V[t] * V.V[G.mul[s][t]].adjoint();
    };
    tad.sigma.assign(q, std::vector<CMat>(q));
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            tad.sigma[x][y] = sigma_at(Qd.transversal[x], Qd.transversal[y]);

    // descent: sigma must not depend on the coset representatives
    std::mt19937_64 rng(seed ^ 0x5bf03635ull);
    double descent = 0.0;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            for (int rep = 0; rep < 3; ++rep) {
                int s = G.mul[Qd.transversal[x]][N.members[rng() % N.members.size()]];
                int t = G.mul[Qd.transversal[y]][N.members[rng() % N.members.size()]];
                descent = std::max(descent, (sigma_at(s, t) - tad.sigma[x][y]).norm());
            }
    tad.residuals["descent"] = descent;

    // sigma lies in the commutant of pi(N)
    double in_commutant = 0.0;
    double span = 0.0;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            for (int n = 0; n < N.group.order; ++n)
                in_commutant = std::max(in_commutant,
                                        (tad.sigma[x][y] * pi.mats[n] -
                                         pi.mats[n] * tad.sigma[x][y]).norm());
            span = std::max(span, project_to_span(basis, tad.sigma[x][y]).second);
        }
    tad.residuals["sigma_commutes"] = in_commutant;
    tad.residuals["sigma_span"] = span;

    // alpha_x as a matrix on the commutant basis
    auto action_matrix = [&](const CMat& u) {
        CMat m(k, k);
        double res = 0.0;
        for (int j = 0; j < k; ++j) {
            auto [coords, r] = project_to_span(basis, u * basis[j] * u.adjoint());
            m.col(j) = coords;
            res = std::max(res, r);
        }
        return std::pair{m, res};
    };
    double closure = 0.0;
    tad.alpha.resize(q);
    for (int x = 0; x < q; ++x) {
        auto [m, r] = action_matrix(V.V[Qd.transversal[x]]);
        tad.alpha[x] = m;
        closure = std::max(closure, r);
    }
    tad.residuals["alpha_closure"] = closure;

    // axiom (2): normalization
    double norm2 = 0.0;
    CMat I = CMat::Identity(d, d);
    for (int x = 0; x < q; ++x) {
        norm2 = std::max(norm2, (tad.sigma[0][x] - I).norm());
        norm2 = std::max(norm2, (tad.sigma[x][0] - I).norm());
    }
    norm2 = std::max(norm2, (tad.alpha[0] - CMat::Identity(k, k)).norm());
    tad.residuals["axiom_normalization"] = norm2;

    // axiom (3): alpha_x alpha_y = Ad sigma(x,y) o alpha_{xy}
    double ax3 = 0.0;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            auto [ad_sigma, r] = action_matrix(tad.sigma[x][y]);
            ax3 = std::max(ax3, r);
            ax3 = std::max(ax3,
                           (tad.alpha[x] * tad.alpha[y] - ad_sigma * tad.alpha[Q.mul[x][y]]).norm());
        }
    tad.residuals["axiom_composition"] = ax3;

    // axiom (4): alpha_x(sigma(y,z)) sigma(x,yz) = sigma(x,y) sigma(xy,z)
    double ax4 = 0.0;
    for (int x = 0; x < q; ++x) {
        const CMat& vx = V.V[Qd.transversal[x]];
        for (int y = 0; y < q; ++y)
            for (int z = 0; z < q; ++z) {
                CMat lhs = vx * tad.sigma[y][z] * vx.adjoint() * tad.sigma[x][Q.mul[y][z]];
                CMat rhs = tad.sigma[x][y] * tad.sigma[Q.mul[x][y]][z];
                ax4 = std::max(ax4, (lhs - rhs).norm());
            }
    }
    tad.residuals["axiom_cocycle"] = ax4;

    for (const auto& [name, r] : tad.residuals)
        if (r > 10 * tol)
            throw numeric_error("twisted_action: residual '" + name + "' = " +
                                std::to_string(r) + " exceeds 10*tol");
    tad.V = std::move(V);
    return tad;
}

ProjectiveExtension projective_extension(const TwistedActionData& tad,
                                         const FiniteGroup& G, const QuotientData& Qd) {
    if (tad.commutant.dim() != 1)
        throw input_error("projective_extension: commutant is not scalar; "
                          "stabilize instead");
    const int q = Qd.q_group.order;
    const int d = static_cast<int>(tad.V.V[0].rows());
    ProjectiveExtension pe;
    pe.U = tad.V.V;
    pe.multiplier.assign(q, std::vector<std::complex<double>>(q));
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            pe.multiplier[x][y] = tad.sigma[x][y].trace() / static_cast<double>(d);
    for (int s = 0; s < G.order; ++s)
        for (int t = 0; t < G.order; ++t) {
            auto z = pe.multiplier[Qd.proj[s]][Qd.proj[t]];
            pe.max_residual = std::max(pe.max_residual,
                                       (pe.U[s] * pe.U[t] - z * pe.U[G.mul[s][t]]).norm());
        }
    if (pe.max_residual > 10 * tad.V.tol)
        throw numeric_error("projective_extension: multiplier identity fails, residual " +
                            std::to_string(pe.max_residual));
    return pe;
}

} // namespace repext
