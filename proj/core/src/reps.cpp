#include "repext/reps.hpp"

#include <random>

namespace repext {

RepResiduals rep_validate(const UnitaryRep& rep) {
    const FiniteGroup& G = *rep.group;
    RepResiduals r;
    for (int g = 0; g < G.order; ++g) {
        if (rep.mats[g].rows() != rep.dim || rep.mats[g].cols() != rep.dim)
            throw input_error("rep_validate: dimension mismatch at element " + std::to_string(g));
        r.unitary = std::max(r.unitary, unitary_residual(rep.mats[g]));
    }
    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < G.order; ++h)
            r.hom = std::max(r.hom,
                             (rep.mats[g] * rep.mats[h] - rep.mats[G.mul[g][h]]).norm());
    return r;
}

UnitaryRep make_rep(const FiniteGroup& G, std::vector<CMat> mats, double tol) {
    if (static_cast<int>(mats.size()) != G.order)
        throw input_error("make_rep: need one matrix per element");
    UnitaryRep rep{&G, static_cast<int>(mats[0].rows()), std::move(mats), tol};
    RepResiduals r = rep_validate(rep);
    if (!r.pass(tol))
        throw numeric_error("make_rep: validation failed, hom residual " +
                            std::to_string(r.hom) + ", unitary residual " +
                            std::to_string(r.unitary));
    return rep;
}

UnitaryRep complete_rep(const FiniteGroup& G,
                        const std::vector<std::pair<int, CMat>>& generators,
                        double tol) {
    if (generators.empty() && G.order > 1)
        throw input_error("complete_rep: no generators given");
    int d = generators.empty() ? 1 : static_cast<int>(generators[0].second.rows());
    std::vector<CMat> mats(G.order);
    std::vector<bool> known(G.order, false);
    mats[0] = CMat::Identity(d, d);
    known[0] = true;
    for (const auto& [g, M] : generators) {
        if (g < 0 || g >= G.order)
            throw input_error("complete_rep: generator index out of range");
        if (M.rows() != d || M.cols() != d)
            throw input_error("complete_rep: generator matrix shape mismatch");
        if (known[g] && (mats[g] - M).norm() > tol)
            throw input_error("complete_rep: conflicting matrix for element " + std::to_string(g));
        mats[g] = M;
        known[g] = true;
    }
    std::vector<int> queue;
    for (int g = 0; g < G.order; ++g)
        if (known[g]) queue.push_back(g);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& [g, M] : generators) {
            int next = G.mul[queue[head]][g];
            if (!known[next]) {
                mats[next] = mats[queue[head]] * M;
                known[next] = true;
                queue.push_back(next);
            }
        }
    }
    for (int g = 0; g < G.order; ++g)
        if (!known[g])
            throw input_error("complete_rep: given elements do not generate the group "
                              "(element " + std::to_string(g) + " unreached)");
    return make_rep(G, std::move(mats), tol);
}

UnitaryRep conjugate_rep(const UnitaryRep& pi, const NormalSubgroup& N, int s) {
    const FiniteGroup& G = *N.parent;
    std::vector<CMat> mats(N.group.order);
    for (int n = 0; n < N.group.order; ++n) {
        int conj = G.conjugate(s, N.members[n]);
        int p = N.position(conj);
        if (p < 0)
            throw input_error("conjugate_rep: conjugation leaves the subgroup at n=" +
                              std::to_string(N.members[n]));
        mats[n] = pi.mats[p];
    }
    return UnitaryRep{&N.group, pi.dim, std::move(mats), pi.tol};
}

std::complex<double> character(const UnitaryRep& rep, int g) {
    return rep.mats[g].trace();
}

bool characters_equal(const UnitaryRep& a, const UnitaryRep& b) {
    if (a.group->order != b.group->order || a.dim != b.dim) return false;
    for (int g = 0; g < a.group->order; ++g)
        if (std::abs(character(a, g) - character(b, g)) > a.tol * (1.0 + a.dim)) return false;
    return true;
}

InvarianceResult is_g_invariant(const UnitaryRep& pi, const NormalSubgroup& N,
                                const QuotientData& Qd) {
    InvarianceResult res;
    for (int x = 0; x < Qd.q_group.order; ++x) {
        int s = Qd.transversal[x];
        if (!characters_equal(pi, conjugate_rep(pi, N, s))) {
            res.invariant = false;
            res.witnesses.push_back(s);
        }
    }
    return res;
}

CMat random_matrix(int rows, int cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMat X(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            double re = gauss(rng);
            double im = gauss(rng);
            X(i, j) = std::complex<double>(re, im);
        }
    return X;
}

CMat random_unitary(int dim, std::uint64_t seed) {
    return polar_unitary(random_matrix(dim, dim, seed));
}

CMat unitary_intertwiner(const UnitaryRep& pi, const UnitaryRep& pi2, std::uint64_t seed,
                         int* attempts_out) {
    if (!characters_equal(pi, pi2))
        throw input_error("unitary_intertwiner: representations are not equivalent");
    const int d = pi.dim;
    const int n = pi.group->order;
    for (int attempt = 0; attempt < 8; ++attempt) {
        CMat X = random_matrix(d, d, seed + 0x9e3779b97f4a7c15ull * attempt);
        CMat A = CMat::Zero(d, d);
        for (int g = 0; g < n; ++g)
            A += pi2.mats[g] * X * pi.mats[g].adjoint();
        A /= static_cast<double>(n);
        try {
            if (attempts_out) *attempts_out = attempt + 1;
            return polar_unitary(A, pi.tol);
        } catch (const numeric_error&) {
            // singular average: retry with fresh randomness
        }
    }
    throw numeric_error("unitary_intertwiner: singular average after 8 attempts");
}

CommutantBasis commutant(const UnitaryRep& rep) {
    return CommutantBasis{joint_commutant(rep.mats, rep.tol)};
}

bool is_irreducible(const UnitaryRep& rep) {
    return commutant(rep).dim() == 1;
}

} // namespace repext
