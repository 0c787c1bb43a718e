#include "repext/extendlab.hpp"

#include <cmath>
#include <random>

namespace repext {

namespace {

CMat kron(const CMat& A, const CMat& B) {
    CMat R(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            R.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return R;
}

// diag(T, ..., T), q blocks: the operator 1 (x) T on l^2(Q) (x) H
CMat one_tensor(const CMat& T, int q) {
    const Eigen::Index d = T.rows();
    CMat R = CMat::Zero(q * d, q * d);
    for (int r = 0; r < q; ++r) R.block(r * d, r * d, d, d) = T;
    return R;
}

UnitaryRep assemble_extension(const FiniteGroup& G, const std::vector<CMat>& nu_by_coset,
                              const QuotientData& Qd, const TwistedActionData& tad,
                              const UnitaryRep& pi, const NormalSubgroup& N,
                              double tol, double& max_residual) {
    std::vector<CMat> mats(G.order);
    for (int s = 0; s < G.order; ++s)
        mats[s] = nu_by_coset[Qd.proj[s]] * tad.V.V[s];
    UnitaryRep rho = make_rep(G, std::move(mats), tol);
    double restriction = 0.0;
    for (int n = 0; n < N.group.order; ++n)
        restriction = std::max(restriction, (rho.mats[N.members[n]] - pi.mats[n]).norm());
    if (restriction > 10 * tol)
        throw numeric_error("find_extension: produced rho does not restrict to pi, residual " +
                            std::to_string(restriction));
    max_residual = std::max(max_residual, restriction);
    return rho;
}

// Hermitian commutant element with well-separated eigenvalue clusters,
// together with the cluster isometries (eigenspace bases).
struct BlockSplit {
    std::vector<CMat> isometries; // d x d_j
    std::vector<CMat> projections;
};

BlockSplit abelian_commutant_blocks(const CommutantBasis& cb, int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x243f6a88ull);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int attempt = 0; attempt < 16; ++attempt) {
        CMat A = CMat::Zero(dim, dim);
        for (const auto& B : cb.basis)
            A += std::complex<double>(gauss(rng), gauss(rng)) * B;
        CMat H = 0.5 * (A + A.adjoint());
        HermitianEig eig = eig_hermitian(H, 1e-6);
        const double gap = 1e-6 * std::max(1.0, H.norm());
        std::vector<int> starts{0};
        for (int i = 1; i < dim; ++i)
            if (eig.values(i) - eig.values(i - 1) > gap) starts.push_back(i);
        if (static_cast<int>(starts.size()) != cb.dim()) continue; // clusters unresolved
        starts.push_back(dim);
        BlockSplit bs;
        for (std::size_t c = 0; c + 1 < starts.size(); ++c) {
            CMat S = eig.vectors.middleCols(starts[c], starts[c + 1] - starts[c]);
            bs.projections.push_back(S * S.adjoint());
            bs.isometries.push_back(std::move(S));
        }
        return bs;
    }
    throw numeric_error("find_extension: could not resolve commutant blocks");
}

double phase_in_unit_interval(std::complex<double> z, double tol) {
    if (std::abs(z - 1.0) <= 10 * tol) return 0.0;
    double a = std::arg(z) / (2.0 * std::numbers::pi);
    a -= std::floor(a);
    return a >= 1.0 ? 0.0 : a;
}

CMat unitary_exp(const CMat& H) { // exp(iH) for Hermitian H
    HermitianEig eig = eig_hermitian(H, 1e-8);
    CVec ph(eig.values.size());
    for (Eigen::Index i = 0; i < eig.values.size(); ++i)
        ph(i) = std::polar(1.0, eig.values(i));
    return eig.vectors * ph.asDiagonal() * eig.vectors.adjoint();
}

// real-orthonormal basis of the Hermitian part of the commutant span
std::vector<CMat> hermitian_basis(const CommutantBasis& cb, double tol) {
    std::vector<CMat> out;
    auto add = [&](CMat H) {
        for (const auto& E : out)
            H -= std::real((E.adjoint() * H).trace()) * E;
        double n = H.norm();
        if (n > 100 * tol) out.push_back(H / n);
    };
    for (const auto& B : cb.basis) {
        add(0.5 * (B + B.adjoint()));
        CMat K = (B - B.adjoint()) * std::complex<double>(0.0, -0.5);
        add(K);
    }
    return out;
}

} // namespace

ExtendResult find_extension(const UnitaryRep& pi, const NormalSubgroup& N,
                            const QuotientData& Qd, const TwistedActionData& tad,
                            std::uint64_t seed) {
    const FiniteGroup& G = *N.parent;
    const FiniteGroup& Q = Qd.q_group;
    const int q = Q.order;
    const int d = pi.dim;
    const double tol = pi.tol;
    const int k = tad.commutant.dim();
    ExtendResult res;

    if (k == 1) {
        ScalarTwoCocycle sigma = normalize_cocycle(tad, Q);
        auto w = is_coboundary(sigma);
        if (!w) {
            res.verdict = ExtendVerdict::NoExtension;
            res.note = "scalar obstruction class is nontrivial";
            return res;
        }
        std::vector<CMat> nu(q);
        for (int x = 0; x < q; ++x) nu[x] = w->nu[x] * CMat::Identity(d, d);
        res.extension = assemble_extension(G, nu, Qd, tad, pi, N, tol, res.max_residual);
        res.verdict = ExtendVerdict::Extended;
        return res;
    }

    // abelian commutant: reduce to scalar problems over the blocks
    bool abelian = true;
    for (int i = 0; i < k && abelian; ++i)
        for (int j = i + 1; j < k; ++j)
            if ((tad.commutant.basis[i] * tad.commutant.basis[j] -
                 tad.commutant.basis[j] * tad.commutant.basis[i]).norm() > 10 * tol) {
                abelian = false;
                break;
            }

    if (abelian) {
        BlockSplit bs = abelian_commutant_blocks(tad.commutant, d, seed);
        const int nb = static_cast<int>(bs.projections.size());
        // tau[x][j] = j' with alpha_x(P_j) = P_{j'}
        std::vector<std::vector<int>> tau(q, std::vector<int>(nb));
        std::vector<std::vector<int>> tau_inv(q, std::vector<int>(nb));
        for (int x = 0; x < q; ++x) {
            const CMat& vc = tad.V.V[Qd.transversal[x]];
            for (int j = 0; j < nb; ++j) {
                CMat img = vc * bs.projections[j] * vc.adjoint();
                int best = -1;
                double bestr = 1e100;
                for (int jj = 0; jj < nb; ++jj) {
                    double r = (img - bs.projections[jj]).norm();
                    if (r < bestr) {
                        bestr = r;
                        best = jj;
                    }
                }
                if (bestr > 1e-6)
                    throw numeric_error("find_extension: alpha does not permute the blocks");
                tau[x][j] = best;
            }
            for (int j = 0; j < nb; ++j) tau_inv[x][tau[x][j]] = j;
        }
        // scalar of sigma(x,y) on block j
        std::vector<std::vector<std::vector<double>>> a(
            q, std::vector<std::vector<double>>(q, std::vector<double>(nb)));
        std::vector<std::vector<std::vector<std::complex<double>>>> z = {};
        z.assign(q, std::vector<std::vector<std::complex<double>>>(
                        q, std::vector<std::complex<double>>(nb)));
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y)
                for (int j = 0; j < nb; ++j) {
                    const CMat& S = bs.isometries[j];
                    CMat blk = S.adjoint() * tad.sigma[x][y] * S;
                    std::complex<double> zz = blk.trace() / static_cast<double>(blk.rows());
                    if ((blk - zz * CMat::Identity(blk.rows(), blk.cols())).norm() > 1e-6)
                        throw numeric_error("find_extension: sigma is not scalar on a block");
                    zz /= std::abs(zz);
                    z[x][y][j] = zz;
                    a[x][y][j] = phase_in_unit_interval(zz, tol);
                }
        // unknowns b_j(x), x != e; rows: b_j(x) + b_{tau_x^{-1}(j)}(y) - b_j(xy) = -a_j(x,y)
        const int unknowns = nb * (q - 1);
        auto uidx = [q](int j, int x) { return j * (q - 1) + (x - 1); };
        IntMat B(nb * (q - 1) * (q - 1), unknowns);
        std::vector<double> rhs(B.rows, 0.0);
        int r = 0;
        for (int j = 0; j < nb; ++j)
            for (int x = 1; x < q; ++x)
                for (int y = 1; y < q; ++y, ++r) {
                    B.at(r, uidx(j, x)) += 1;
                    B.at(r, uidx(tau_inv[x][j], y)) += 1;
                    int xy = Q.mul[x][y];
                    if (xy != 0) B.at(r, uidx(j, xy)) -= 1;
                    rhs[r] = -a[x][y][j];
                }
        auto b = solve_mod_one(B, rhs, tol);
        if (!b) {
            res.verdict = ExtendVerdict::NoExtension;
            res.note = "block-scalar obstruction system is unsolvable";
            return res;
        }
        std::vector<CMat> nu(q, CMat::Zero(d, d));
        for (int x = 0; x < q; ++x)
            for (int j = 0; j < nb; ++j) {
                std::complex<double> u =
                    x == 0 ? 1.0 : std::polar(1.0, 2.0 * std::numbers::pi * (*b)[uidx(j, x)]);
                nu[x] += u * bs.projections[j];
            }
        res.extension = assemble_extension(G, nu, Qd, tad, pi, N, tol, res.max_residual);
        res.verdict = ExtendVerdict::Extended;
        res.note = "abelian-commutant block reduction";
        return res;
    }

    if (q > 6 || d > 4) {
        res.verdict = ExtendVerdict::Undecided;
        res.note = "non-abelian commutant beyond the search budget";
        return res;
    }

    // seeded random-restart Gauss-Newton search over nu : Q -> U(pi(N)')
    std::vector<CMat> hbasis = hermitian_basis(tad.commutant, tol);
    const int hk = static_cast<int>(hbasis.size());
    const int nparams = hk * (q - 1);
    auto build_nu = [&](const Eigen::VectorXd& theta) {
        std::vector<CMat> nu(q, CMat::Identity(d, d));
        for (int x = 1; x < q; ++x) {
            CMat H = CMat::Zero(d, d);
            for (int l = 0; l < hk; ++l) H += theta((x - 1) * hk + l) * hbasis[l];
            nu[x] = unitary_exp(H);
        }
        return nu;
    };
    auto residual_vec = [&](const Eigen::VectorXd& theta) {
        auto nu = build_nu(theta);
        Eigen::VectorXd f(q * q * 2 * d * d);
        int idx = 0;
        for (int x = 0; x < q; ++x) {
            const CMat& vc = tad.V.V[Qd.transversal[x]];
            for (int y = 0; y < q; ++y) {
                CMat E = nu[x] * (vc * nu[y] * vc.adjoint()) * tad.sigma[x][y] *
                             nu[Q.mul[x][y]].adjoint() -
                         CMat::Identity(d, d);
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) {
                        f(idx++) = E(i, j).real();
                        f(idx++) = E(i, j).imag();
                    }
            }
        }
        return f;
    };
    std::mt19937_64 rng(seed ^ 0x13198a2eull);
    std::uniform_real_distribution<double> uni(-std::numbers::pi, std::numbers::pi);
    for (int restart = 0; restart < 24; ++restart) {
        Eigen::VectorXd theta(nparams);
        if (restart == 0)
            theta.setZero();
        else
            for (int i = 0; i < nparams; ++i) theta(i) = uni(rng);
        double lambda = 1e-3;
        Eigen::VectorXd f = residual_vec(theta);
        for (int iter = 0; iter < 80 && f.norm() > 1e-11; ++iter) {
            const double h = 1e-6;
            Eigen::MatrixXd J(f.size(), nparams);
            for (int p = 0; p < nparams; ++p) {
                Eigen::VectorXd tp = theta;
                tp(p) += h;
                J.col(p) = (residual_vec(tp) - f) / h;
            }
            Eigen::MatrixXd A = J.transpose() * J;
            Eigen::VectorXd g = J.transpose() * f;
            bool improved = false;
            for (int tries = 0; tries < 8; ++tries) {
                Eigen::MatrixXd M = A;
                M.diagonal().array() += lambda;
                Eigen::VectorXd step = M.ldlt().solve(g);
                Eigen::VectorXd cand = theta - step;
                Eigen::VectorXd fc = residual_vec(cand);
                if (fc.norm() < f.norm()) {
                    theta = cand;
                    f = fc;
                    lambda = std::max(lambda * 0.3, 1e-12);
                    improved = true;
                    break;
                }
                lambda *= 10.0;
            }
            if (!improved) break;
        }
        if (f.norm() < 1e-9) {
            auto nu = build_nu(theta);
            res.extension = assemble_extension(G, nu, Qd, tad, pi, N,
                                               std::max(tol, 1e-8), res.max_residual);
            res.verdict = ExtendVerdict::Extended;
            res.note = "least-squares search over U(pi(N)')";
            return res;
        }
    }
    res.verdict = ExtendVerdict::Undecided;
    res.note = "least-squares search exhausted its budget";
    return res;
}

StabilizeResult stabilize(const UnitaryRep& pi, const NormalSubgroup& N,
                          const QuotientData& Qd, const TwistedActionData& tad) {
    const FiniteGroup& G = *N.parent;
    const FiniteGroup& Q = Qd.q_group;
    const int q = Q.order;
    const int d = pi.dim;
    const int D = d * q;
    const double tol = pi.tol;

    // (nu_x xi)(r) = sigma(x, (rx)^{-1})^* xi(rx)
    std::vector<CMat> nu(q);
    for (int x = 0; x < q; ++x) {
        CMat m = CMat::Zero(D, D);
        for (int r = 0; r < q; ++r) {
            int rx = Q.mul[r][x];
            m.block(r * d, rx * d, d, d) = tad.sigma[x][Q.inv[rx]].adjoint();
        }
        nu[x] = std::move(m);
    }

    std::map<std::string, double> residuals;
    double unit = 0.0;
    for (int x = 0; x < q; ++x) unit = std::max(unit, unitary_residual(nu[x]));
    residuals["nu_unitary"] = unit;

    // exterior equivalence: nu_x beta_x(nu_y) omega(x,y) nu_{xy}^* = 1
    double ext = 0.0;
    for (int x = 0; x < q; ++x) {
        CMat vb = one_tensor(tad.V.V[Qd.transversal[x]], q);
        for (int y = 0; y < q; ++y) {
            CMat lhs = nu[x] * (vb * nu[y] * vb.adjoint()) *
                       one_tensor(tad.sigma[x][y], q) * nu[Q.mul[x][y]].adjoint();
            ext = std::max(ext, (lhs - CMat::Identity(D, D)).norm());
        }
    }
    residuals["exterior_equivalence"] = ext;

    std::vector<CMat> mats(G.order);
    for (int s = 0; s < G.order; ++s)
        mats[s] = nu[Qd.proj[s]] * one_tensor(tad.V.V[s], q);
    UnitaryRep rho{&G, D, std::move(mats), tol};
    RepResiduals rr = rep_validate(rho);
    residuals["hom"] = rr.hom;
    residuals["unitary"] = rr.unitary;

    double restriction = 0.0;
    for (int n = 0; n < N.group.order; ++n)
        restriction = std::max(restriction,
                               (rho.mats[N.members[n]] - one_tensor(pi.mats[n], q)).norm());
    residuals["restriction"] = restriction;

    for (const auto& [name, r] : residuals)
        if (r > 10 * tol)
            throw numeric_error("stabilize: residual '" + name + "' = " +
                                std::to_string(r) + " exceeds 10*tol");
    return {std::move(rho), std::move(residuals)};
}

MackeyResult mackey_tensor(const ProjectiveExtension& U, const ProjectiveBlock& W,
                           const UnitaryRep& pi, const NormalSubgroup& N,
                           const QuotientData& Qd) {
    const FiniteGroup& G = *N.parent;
    const FiniteGroup& Q = Qd.q_group;
    const int q = Q.order;
    const int dw = W.dim;
    const double tol = pi.tol;

    // multiplier of W must be the conjugate of the multiplier of U
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            std::complex<double> mw =
                (W.mats[Q.mul[x][y]].adjoint() * W.mats[x] * W.mats[y]).trace() /
                static_cast<double>(dw);
            if (std::abs(U.multiplier[x][y] * mw - 1.0) > 1e-6)
                throw input_error("mackey_tensor: multiplier mismatch at (" +
                                  std::to_string(x) + "," + std::to_string(y) + ")");
        }

    std::vector<CMat> mats(G.order);
    for (int s = 0; s < G.order; ++s)
        mats[s] = kron(U.U[s], W.mats[Qd.proj[s]]);
    MackeyResult mr{make_rep(G, std::move(mats), 10 * tol), false, 0.0};
    for (int n = 0; n < N.group.order; ++n)
        mr.max_restriction_residual =
            std::max(mr.max_restriction_residual,
                     (mr.rep.mats[N.members[n]] -
                      kron(pi.mats[n], CMat::Identity(dw, dw))).norm());
    if (mr.max_restriction_residual > 10 * tol)
        throw numeric_error("mackey_tensor: restriction is not pi (x) 1");
    mr.irreducible = is_irreducible(mr.rep);
    return mr;
}

UnitaryRep induce(const UnitaryRep& pi, const NormalSubgroup& N, const QuotientData& Qd) {
    const FiniteGroup& G = *N.parent;
    const FiniteGroup& Q = Qd.q_group;
    const int q = Q.order;
    const int d = pi.dim;
    std::vector<CMat> mats(G.order);
    for (int t = 0; t < G.order; ++t) {
        CMat m = CMat::Zero(q * d, q * d);
        for (int x = 0; x < q; ++x) {
            // xi(t^{-1} c(x)) with t^{-1} c(x) = c(y) n
            int g = G.mul[G.inv[t]][Qd.transversal[x]];
            int y = Qd.proj[g];
            int n = N.position(G.mul[G.inv[Qd.transversal[y]]][g]);
            m.block(x * d, y * d, d, d) = pi.mats[N.group.inv[n]];
        }
        mats[t] = std::move(m);
    }
    return make_rep(G, std::move(mats), 10 * pi.tol);
}

CMat multiplication_operator(const std::vector<std::complex<double>>& f, int block_dim) {
    const int q = static_cast<int>(f.size());
    CMat m = CMat::Zero(q * block_dim, q * block_dim);
    for (int x = 0; x < q; ++x)
        m.block(x * block_dim, x * block_dim, block_dim, block_dim) =
            f[x] * CMat::Identity(block_dim, block_dim);
    return m;
}

double covariance_residual(const UnitaryRep& ind, const QuotientData& Qd, int block_dim) {
    const FiniteGroup& G = *ind.group;
    const int q = Qd.q_group.order;
    double worst = 0.0;
    for (int s = 0; s < G.order; ++s)
        for (int x = 0; x < q; ++x) {
            std::vector<std::complex<double>> f(q, 0.0), lt_f(q, 0.0);
            f[x] = 1.0;
            lt_f[Qd.q_group.mul[Qd.proj[s]][x]] = 1.0; // lt_s delta_x = delta_{sN x}
            CMat lhs = multiplication_operator(lt_f, block_dim);
            CMat rhs = ind.mats[s] * multiplication_operator(f, block_dim) *
                       ind.mats[s].adjoint();
            worst = std::max(worst, (lhs - rhs).norm());
        }
    return worst;
}

std::map<std::string, double> remark_crosscheck(const UnitaryRep& pi, const NormalSubgroup& N,
                                                const QuotientData& Qd,
                                                const std::vector<CMat>& W,
                                                const TwistedActionData& tad) {
    const FiniteGroup& G = *N.parent;
    const FiniteGroup& Q = Qd.q_group;
    const int q = Q.order;
    const int d = pi.dim;
    const double tol = pi.tol;

    UnitaryRep ind = induce(pi, N, Qd);

    // R_z = U_{c(z)} with U_s xi(t) = W_s xi(ts): block (x, xz)
    std::vector<CMat> R(q);
    for (int z = 0; z < q; ++z) {
        CMat m = CMat::Zero(q * d, q * d);
        for (int x = 0; x < q; ++x) {
            int y = Q.mul[x][z];
            int g = G.mul[Qd.transversal[x]][Qd.transversal[z]]; // c(x) c(z) = c(y) n
            int n = N.position(G.mul[G.inv[Qd.transversal[y]]][g]);
            m.block(x * d, y * d, d, d) = W[z] * pi.mats[N.group.inv[n]];
        }
        R[z] = std::move(m);
    }

    std::map<std::string, double> res;
    double omega = 0.0;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            omega = std::max(omega, (R[x] * R[y] * R[Q.mul[x][y]].adjoint() -
                                     one_tensor(tad.sigma[x][y], q)).norm());
    res["omega_eq_one_tensor_sigma"] = omega;

    double beta = 0.0;
    for (int x = 0; x < q; ++x) {
        const CMat& vc = tad.V.V[Qd.transversal[x]];
        for (const auto& T : tad.commutant.basis)
            beta = std::max(beta, (R[x] * one_tensor(T, q) * R[x].adjoint() -
                                   one_tensor(vc * T * vc.adjoint(), q)).norm());
    }
    res["beta_eq_one_tensor_alpha"] = beta;

    res["covariance"] = covariance_residual(ind, Qd, d);

    double inter_m = 0.0, inter_ind = 0.0;
    for (int z = 0; z < q; ++z) {
        for (int x = 0; x < q; ++x) {
            std::vector<std::complex<double>> f(q, 0.0), rt_f(q, 0.0);
            f[x] = 1.0;
            rt_f[Q.mul[x][Q.inv[z]]] = 1.0; // rt_z delta_x = delta_{x z^{-1}}
            inter_m = std::max(inter_m,
                               (R[z] * multiplication_operator(f, d) * R[z].adjoint() -
                                multiplication_operator(rt_f, d)).norm());
        }
        for (int t = 0; t < G.order; ++t)
            inter_ind = std::max(inter_ind,
                                 (R[z] * ind.mats[t] - ind.mats[t] * R[z]).norm());
    }
    res["intertwine_mult"] = inter_m;
    res["intertwine_ind"] = inter_ind;

    for (const auto& [name, r] : res)
        if (r > 10 * tol)
            throw numeric_error("remark_crosscheck: residual '" + name + "' = " +
                                std::to_string(r) + " exceeds 10*tol");
    return res;
}

} // namespace repext
