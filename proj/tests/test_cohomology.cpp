#include <doctest.h>

#include <random>

#include "repext/cohomology.hpp"
#include "repext/standard_groups.hpp"

using namespace repext;
using Cplx = std::complex<double>;
static const Cplx I1(0, 1);
static const double kPi = std::acos(-1.0);

namespace {

CMat m1(Cplx v) {
    CMat m(1, 1);
    m(0, 0) = v;
    return m;
}

// the obstruction cocycle of the faithful central character, sigma: Q x Q -> T;
// qstore receives the quotient group and must outlive the returned cocycle
ScalarTwoCocycle central_cocycle(const FiniteGroup& G, const std::vector<int>& center,
                                 FiniteGroup& qstore,
                                 std::optional<std::uint64_t> tseed = std::nullopt) {
    NormalSubgroup N = normal_subgroup(G, center);
    QuotientData Qd = quotient_with_transversal(G, N, tseed);
    std::vector<CMat> chi;
    for (std::size_t p = 0; p < N.members.size(); ++p)
        chi.push_back(m1(p == 0 ? 1.0 : -1.0));
    UnitaryRep pi = make_rep(N.group, chi);
    std::vector<CMat> W(Qd.q_group.order, CMat::Identity(1, 1));
    TwistedActionData tad = twisted_action(pi, N, Qd, section_unitaries(pi, N, Qd, W));
    ScalarTwoCocycle raw = normalize_cocycle(tad, Qd.q_group);
    qstore = Qd.q_group;
    return make_cocycle(qstore, raw.values, raw.tol);
}

ScalarTwoCocycle random_coboundary(const FiniteGroup& Q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
    std::vector<Cplx> nu(Q.order);
    nu[0] = 1.0;
    for (int x = 1; x < Q.order; ++x) nu[x] = std::polar(1.0, ang(rng));
    return coboundary_of(Q, nu);
}

// dual oracle: a scalar 2-cocycle is trivial iff the twisted regular
// representation has a one-dimensional constituent
bool trivial_by_regular_rep(const ScalarTwoCocycle& sigma, std::uint64_t seed) {
    for (const auto& blk : decompose_projective(twisted_regular_rep(sigma), seed))
        if (blk.dim == 1) return true;
    return false;
}

ScalarTwoCocycle product(const ScalarTwoCocycle& a, const ScalarTwoCocycle& b) {
    auto vals = a.values;
    for (int x = 0; x < a.q_group->order; ++x)
        for (int y = 0; y < a.q_group->order; ++y) vals[x][y] *= b.at(x, y);
    return make_cocycle(*a.q_group, vals, a.tol);
}

} // namespace

TEST_CASE("make_cocycle validates the cocycle identity") {
    FiniteGroup Q = cyclic_group(2);
    CHECK_NOTHROW(make_cocycle(Q, {{1, 1}, {1, -1}}));
    CHECK_THROWS_AS(make_cocycle(Q, {{1, 1}, {1, 0.5}}), input_error); // not unit modulus
    FiniteGroup Z3 = cyclic_group(3);
    // sigma(1,1)=w breaks the identity unless matched at (1,2)/(2,1)/(2,2)
    Cplx w = std::polar(1.0, 2 * kPi / 3);
    CHECK_THROWS_AS(make_cocycle(Z3, {{1, 1, 1}, {1, w, 1}, {1, 1, 1}}), numeric_error);
}

TEST_CASE("power and conjugate are entrywise") {
    FiniteGroup Q = cyclic_group(2);
    ScalarTwoCocycle s = make_cocycle(Q, {{1, 1}, {1, I1}});
    CHECK(std::abs(s.power(2).at(1, 1) + 1.0) < 1e-12);
    CHECK(std::abs(s.conjugated().at(1, 1) + I1) < 1e-12);
}

TEST_CASE("coboundary on Z/2 with witness nu(1) = +-i") {
    FiniteGroup Q = cyclic_group(2);
    ScalarTwoCocycle s = make_cocycle(Q, {{1, 1}, {1, -1}});
    auto w = is_coboundary(s);
    REQUIRE(w);
    CHECK(std::abs(w->nu[0] - Cplx(1, 0)) < 1e-12);
    CHECK(std::abs(w->nu[1] * w->nu[1] + 1.0) < 1e-10); // nu(1)^2 = -1
}

TEST_CASE("the trivial cocycle is a coboundary with trivial delta") {
    FiniteGroup Q = product_of_cyclic(2, 2);
    std::vector<std::vector<Cplx>> ones(4, std::vector<Cplx>(4, 1.0));
    auto w = is_coboundary(make_cocycle(Q, ones));
    REQUIRE(w);
    ScalarTwoCocycle back = coboundary_of(Q, w->nu);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) CHECK(std::abs(back.at(x, y) - 1.0) < 1e-10);
}

TEST_CASE("the Q8 obstruction class is nontrivial of order 2") {
    FiniteGroup Q;
    ScalarTwoCocycle s = central_cocycle(quaternion_group(), {0, 1}, Q);
    CHECK(!is_coboundary(s));
    CHECK(class_order(s) == 2);
    CHECK(is_coboundary(s.power(2)));
    CHECK(!trivial_by_regular_rep(s, 3));
}

TEST_CASE("the D4 obstruction class over the center is also the Klein class") {
    FiniteGroup Q;
    ScalarTwoCocycle s = central_cocycle(dihedral_group(4), {0, 2}, Q);
    CHECK(!is_coboundary(s));
    CHECK(class_order(s) == 2);
}

TEST_CASE("witness reproduces the cocycle and agrees with the regular-rep oracle") {
    std::vector<FiniteGroup> groups{cyclic_group(6), product_of_cyclic(2, 2),
                                    dihedral_group(3)};
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const FiniteGroup& Q = groups[gi];
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            ScalarTwoCocycle s = random_coboundary(Q, 1000 * gi + seed);
            auto w = is_coboundary(s);
            REQUIRE(w);
            ScalarTwoCocycle back = coboundary_of(Q, w->nu);
            for (int x = 0; x < Q.order; ++x)
                for (int y = 0; y < Q.order; ++y)
                    CHECK(std::abs(back.at(x, y) - s.at(x, y)) < 1e-8);
            if (seed < 3) CHECK(trivial_by_regular_rep(s, seed));
        }
    }
}

TEST_CASE("cocycles in the same class get the same verdict") {
    FiniteGroup Q;
    ScalarTwoCocycle s = central_cocycle(quaternion_group(), {0, 1}, Q);
    ScalarTwoCocycle twisted = product(s, random_coboundary(*s.q_group, 77));
    CHECK(!is_coboundary(twisted));
    CHECK(class_order(twisted) == 2);
}

TEST_CASE("obstruction class is independent of the transversal") {
    FiniteGroup G = quaternion_group();
    FiniteGroup Qa;
    ScalarTwoCocycle a = central_cocycle(G, {0, 1}, Qa);
    for (std::uint64_t tseed : {5u, 91u}) {
        FiniteGroup Qb;
        ScalarTwoCocycle b = central_cocycle(G, {0, 1}, Qb, tseed);
        CHECK(is_coboundary(product(a, b.conjugated())));
    }
}

TEST_CASE("class order divides the group order") {
    FiniteGroup Q;
    ScalarTwoCocycle s = central_cocycle(quaternion_group(), {0, 1}, Q);
    CHECK(4 % class_order(s) == 0);
    FiniteGroup Z4 = cyclic_group(4);
    CHECK(class_order(random_coboundary(Z4, 9)) == 1);
}

TEST_CASE("twisted regular representation of the sign cocycle on Z/2") {
    FiniteGroup Q = cyclic_group(2);
    ProjectiveRep L = twisted_regular_rep(make_cocycle(Q, {{1, 1}, {1, -1}}));
    CHECK(L.dim == 2);
    CMat expect(2, 2);
    expect << 0, -1, 1, 0;
    CHECK((L.mats[1] - expect).norm() < 1e-12);
    CHECK((L.mats[0] - CMat::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("decomposition block dimensions") {
    FiniteGroup K4 = product_of_cyclic(2, 2);

    // trivial class: four characters
    std::vector<std::vector<Cplx>> ones(4, std::vector<Cplx>(4, 1.0));
    auto blocks1 = decompose_projective(twisted_regular_rep(make_cocycle(K4, ones)), 1);
    CHECK(blocks1.size() == 4);
    for (const auto& b : blocks1) CHECK(b.dim == 1);

    // the Klein class: one 2x2 block of multiplicity 2
    FiniteGroup Q;
    ScalarTwoCocycle s = central_cocycle(quaternion_group(), {0, 1}, Q);
    auto blocks2 = decompose_projective(twisted_regular_rep(s), 1);
    CHECK(blocks2.size() == 2); // one irrep, multiplicity two
    int dimsum = 0;
    for (const auto& b : blocks2) {
        CHECK(b.dim == 2);
        dimsum += b.dim;
        CHECK(unitary_residual(CMat(b.isometry.adjoint() * b.isometry)) < 1e-9);
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y)
                CHECK((b.mats[x] * b.mats[y] -
                       s.at(x, y) * b.mats[s.q_group->mul[x][y]])
                          .norm() < 1e-8);
    }
    CHECK(dimsum == 4);
}
