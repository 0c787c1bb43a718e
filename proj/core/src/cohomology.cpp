#include "repext/cohomology.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace repext {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// phase in [0,1): values within tol of 1 snap to exactly 0
double phase_of(std::complex<double> z, double tol) {
    if (std::abs(z - 1.0) <= 10 * tol) return 0.0;
    double a = std::arg(z) / kTwoPi;
    a -= std::floor(a);
    if (a >= 1.0) a = 0.0;
    return a;
}

void check_cocycle_identity(const ScalarTwoCocycle& sigma) {
    const FiniteGroup& Q = *sigma.q_group;
    double worst = 0.0;
    for (int x = 0; x < Q.order; ++x)
        for (int y = 0; y < Q.order; ++y)
            for (int z = 0; z < Q.order; ++z)
                worst = std::max(worst,
                                 std::abs(sigma.at(y, z) * sigma.at(x, Q.mul[y][z]) -
                                          sigma.at(x, y) * sigma.at(Q.mul[x][y], z)));
    if (worst > 10 * sigma.tol)
        throw numeric_error("cocycle identity fails, residual " + std::to_string(worst));
}

} // namespace

ScalarTwoCocycle ScalarTwoCocycle::power(int k) const {
    ScalarTwoCocycle r = *this;
    for (auto& row : r.values)
        for (auto& v : row) v = std::pow(v, k);
    for (int x = 0; x < q_group->order; ++x) {
        r.values[0][x] = 1.0;
        r.values[x][0] = 1.0;
    }
    return r;
}

ScalarTwoCocycle ScalarTwoCocycle::conjugated() const {
    ScalarTwoCocycle r = *this;
    for (auto& row : r.values)
        for (auto& v : row) v = std::conj(v);
    return r;
}

ScalarTwoCocycle make_cocycle(const FiniteGroup& Q,
                              std::vector<std::vector<std::complex<double>>> values,
                              double tol) {
    ScalarTwoCocycle sigma{&Q, std::move(values), tol};
    for (int x = 0; x < Q.order; ++x) {
        if (std::abs(sigma.values[x][0] - 1.0) > 10 * tol ||
            std::abs(sigma.values[0][x] - 1.0) > 10 * tol)
            throw input_error("cocycle: identity row/column not 1");
        sigma.values[x][0] = 1.0;
        sigma.values[0][x] = 1.0;
        for (int y = 0; y < Q.order; ++y) {
            double m = std::abs(sigma.values[x][y]);
            if (std::abs(m - 1.0) > 10 * tol)
                throw input_error("cocycle: value off the unit circle");
            sigma.values[x][y] /= m;
        }
    }
    check_cocycle_identity(sigma);
    return sigma;
}

ScalarTwoCocycle normalize_cocycle(const TwistedActionData& tad, const FiniteGroup& Q) {
    if (tad.commutant.dim() != 1)
        throw input_error("normalize_cocycle: commutant is not scalar");
    const int q = Q.order;
    const int d = static_cast<int>(tad.sigma[0][0].rows());
    const double tol = tad.V.tol;
    std::vector<std::vector<std::complex<double>>> values(
        q, std::vector<std::complex<double>>(q));
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            std::complex<double> z = tad.sigma[x][y].trace() / static_cast<double>(d);
            if ((tad.sigma[x][y] - z * CMat::Identity(d, d)).norm() > 10 * tol)
                throw input_error("normalize_cocycle: sigma value is not scalar");
            values[x][y] = z;
        }
    return make_cocycle(Q, std::move(values), tol);
}

ScalarTwoCocycle coboundary_of(const FiniteGroup& Q,
                               const std::vector<std::complex<double>>& nu,
                               double tol) {
    std::vector<std::vector<std::complex<double>>> values(
        Q.order, std::vector<std::complex<double>>(Q.order));
    for (int x = 0; x < Q.order; ++x)
        for (int y = 0; y < Q.order; ++y)
            values[x][y] = nu[Q.mul[x][y]] * std::conj(nu[x] * nu[y]);
    return make_cocycle(Q, std::move(values), tol);
}

std::optional<CoboundaryWitness> is_coboundary(const ScalarTwoCocycle& sigma) {
    const FiniteGroup& Q = *sigma.q_group;
    const int q = Q.order;
    const double tol = sigma.tol;
    if (q == 1) return CoboundaryWitness{{1.0}};

    // unknowns b(x), x != e; rows indexed by pairs (x,y), x,y != e.
    // delta nu = sigma reads b(xy) - b(x) - b(y) = phase(x,y) (mod 1),
    // so with B row = b(x) + b(y) - b(xy) we solve B b = -a (mod 1).
    const int unknowns = q - 1;
    const int nrows = unknowns * unknowns;
    IntMat B(nrows, unknowns);
    std::vector<double> rhs(nrows, 0.0);
    int r = 0;
    for (int x = 1; x < q; ++x)
        for (int y = 1; y < q; ++y, ++r) {
            B.at(r, x - 1) += 1;
            B.at(r, y - 1) += 1;
            int xy = Q.mul[x][y];
            if (xy != 0) B.at(r, xy - 1) -= 1;
            rhs[r] = -phase_of(sigma.at(x, y), tol);
        }

    auto b = solve_mod_one(B, rhs, tol);
    if (!b) return std::nullopt;

    CoboundaryWitness w;
    w.nu.assign(q, 1.0);
    for (int x = 1; x < q; ++x)
        w.nu[x] = std::polar(1.0, kTwoPi * (*b)[x - 1]);
    // re-verify the witness
    double worst = 0.0;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            worst = std::max(worst, std::abs(sigma.at(x, y) -
                                             w.nu[Q.mul[x][y]] * std::conj(w.nu[x] * w.nu[y])));
    if (worst > 1e-6)
        throw numeric_error("is_coboundary: witness verification failed, residual " +
                            std::to_string(worst));
    return w;
}

int class_order(const ScalarTwoCocycle& sigma) {
    const int q = sigma.q_group->order;
    for (int k = 1; k <= q; ++k)
        if (is_coboundary(sigma.power(k))) return k;
    throw numeric_error("class_order: no power up to |Q| is a coboundary");
}

ProjectiveRep twisted_regular_rep(const ScalarTwoCocycle& sigma) {
    const FiniteGroup& Q = *sigma.q_group;
    const int q = Q.order;
    ProjectiveRep L{&Q, q, {}, sigma};
    L.mats.resize(q);
    for (int x = 0; x < q; ++x) {
        CMat m = CMat::Zero(q, q);
        for (int y = 0; y < q; ++y) m(Q.mul[x][y], y) = sigma.at(x, y);
        L.mats[x] = std::move(m);
    }
    double worst = 0.0;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            worst = std::max(worst, (L.mats[x] * L.mats[y] -
                                     sigma.at(x, y) * L.mats[Q.mul[x][y]]).norm());
    if (worst > 10 * sigma.tol)
        throw numeric_error("twisted_regular_rep: projective relation fails");
    return L;
}

namespace {

void split_block(const ProjectiveRep& L, const CMat& isometry,
                 std::mt19937_64& rng, double tol,
                 std::vector<ProjectiveBlock>& out) {
    const int q = static_cast<int>(L.mats.size());
    const int m = static_cast<int>(isometry.cols());
    std::vector<CMat> sub(q);
    for (int x = 0; x < q; ++x)
        sub[x] = isometry.adjoint() * L.mats[x] * isometry;
    auto basis = joint_commutant(sub, tol);
    if (basis.size() == 1) {
        out.push_back({m, isometry, std::move(sub)});
        return;
    }
    for (int attempt = 0; attempt < 16; ++attempt) {
        CMat A = CMat::Zero(m, m);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (const auto& B : basis) {
            std::complex<double> c(gauss(rng), gauss(rng));
            A += c * B;
        }
        CMat H = 0.5 * (A + A.adjoint());
        HermitianEig eig = eig_hermitian(H, 1e-6);
        // cluster eigenvalues; need at least two well-separated clusters
        const double gap = 1e-6 * std::max(1.0, H.norm());
        std::vector<int> starts{0};
        for (int i = 1; i < m; ++i)
            if (eig.values(i) - eig.values(i - 1) > gap) starts.push_back(i);
        if (starts.size() < 2) continue;
        starts.push_back(m);
        for (std::size_t c = 0; c + 1 < starts.size(); ++c) {
            int lo = starts[c], hi = starts[c + 1];
            CMat sub_iso = isometry * eig.vectors.middleCols(lo, hi - lo);
            split_block(L, sub_iso, rng, tol, out);
        }
        return;
    }
    throw numeric_error("decompose_projective: eigenvalue clusters unresolvable; retry with a new seed");
}

} // namespace

std::vector<ProjectiveBlock> decompose_projective(const ProjectiveRep& L, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ProjectiveBlock> blocks;
    split_block(L, CMat::Identity(L.dim, L.dim), rng, L.multiplier.tol, blocks);
    return blocks;
}

} // namespace repext
