#include <doctest.h>

#include "repext/reps.hpp"
#include "repext/standard_groups.hpp"

using namespace repext;
using Cplx = std::complex<double>;
static const Cplx I1(0, 1);

namespace {

CMat m1(Cplx v) {
    CMat m(1, 1);
    m(0, 0) = v;
    return m;
}

UnitaryRep q8_irrep() {
    FiniteGroup Q8 = quaternion_group();
    CMat Ei(2, 2), Ej(2, 2);
    Ei << I1, 0, 0, -I1;
    Ej << 0, 1, -1, 0;
    static FiniteGroup G; // keep alive for the returned rep
    G = Q8;
    return complete_rep(G, {{2, Ei}, {4, Ej}});
}

UnitaryRep direct_sum(const UnitaryRep& a, const UnitaryRep& b) {
    std::vector<CMat> mats;
    for (int g = 0; g < a.group->order; ++g) {
        CMat m = CMat::Zero(a.dim + b.dim, a.dim + b.dim);
        m.topLeftCorner(a.dim, a.dim) = a.at(g);
        m.bottomRightCorner(b.dim, b.dim) = b.at(g);
        mats.push_back(m);
    }
    return make_rep(*a.group, mats, a.tol);
}

} // namespace

TEST_CASE("trivial and sign representations of Z/2 validate") {
    FiniteGroup G = cyclic_group(2);
    UnitaryRep triv = make_rep(G, {m1(1), m1(1)});
    UnitaryRep sign = make_rep(G, {m1(1), m1(-1)});
    CHECK(rep_validate(triv).pass(1e-12));
    CHECK(rep_validate(sign).pass(1e-12));
    CHECK(character(sign, 1) == Cplx(-1, 0));
}

TEST_CASE("make_rep rejects non-homomorphisms and non-unitaries") {
    FiniteGroup G = cyclic_group(2);
    CHECK_THROWS_AS(make_rep(G, {m1(1), m1(I1)}), numeric_error);  // i^2 != 1
    CHECK_THROWS_AS(make_rep(G, {m1(1), m1(0.5)}), numeric_error); // not unitary
}

TEST_CASE("complete_rep fills Z/4 from its generator") {
    FiniteGroup G = cyclic_group(4);
    UnitaryRep pi = complete_rep(G, {{1, m1(I1)}});
    CHECK(std::abs(pi.at(2)(0, 0) - Cplx(-1, 0)) < 1e-12);
    CHECK(std::abs(pi.at(3)(0, 0) + I1) < 1e-12);
    CHECK(std::abs(pi.at(0)(0, 0) - Cplx(1, 0)) < 1e-12);
}

TEST_CASE("complete_rep rejects inconsistent generator images") {
    FiniteGroup G = cyclic_group(4);
    // order-8 scalar on an order-4 generator
    Cplx w = std::polar(1.0, std::acos(-1.0) / 4);
    CHECK_THROWS_AS(complete_rep(G, {{1, m1(w)}}), numeric_error);
}

TEST_CASE("the 2-dimensional irrep of Q8") {
    UnitaryRep pi = q8_irrep();
    CHECK(rep_validate(pi).pass(1e-12));
    CHECK(std::abs(character(pi, 0) - Cplx(2, 0)) < 1e-12);
    CHECK(std::abs(character(pi, 1) + Cplx(2, 0)) < 1e-12); // -1
    for (int g = 2; g < 8; ++g) CHECK(std::abs(character(pi, g)) < 1e-12);
    CHECK(is_irreducible(pi));
    CHECK(commutant(pi).dim() == 1);
}

TEST_CASE("conjugation by a reflection inverts the rotation character") {
    FiniteGroup G = dihedral_group(4);
    NormalSubgroup N = normal_subgroup(G, {0, 1, 2, 3}); // <r>
    UnitaryRep pi = complete_rep(N.group, {{1, m1(I1)}});
    UnitaryRep pis = conjugate_rep(pi, N, 4); // reflection
    CHECK(std::abs(pis.at(1)(0, 0) + I1) < 1e-12); // pi^s(r) = -i
    CHECK(!characters_equal(pi, pis));

    QuotientData Qd = quotient_with_transversal(G, N);
    InvarianceResult inv = is_g_invariant(pi, N, Qd);
    CHECK(!inv.invariant);
    REQUIRE(inv.witnesses.size() == 1);
    CHECK(Qd.proj[inv.witnesses[0]] == 1); // the reflection coset
}

TEST_CASE("a real character of the rotation subgroup is invariant") {
    FiniteGroup G = dihedral_group(4);
    NormalSubgroup N = normal_subgroup(G, {0, 1, 2, 3});
    UnitaryRep pi = complete_rep(N.group, {{1, m1(-1)}});
    QuotientData Qd = quotient_with_transversal(G, N);
    CHECK(is_g_invariant(pi, N, Qd).invariant);
}

TEST_CASE("reps of a central subgroup are always invariant") {
    FiniteGroup G = quaternion_group();
    NormalSubgroup N = normal_subgroup(G, {0, 1});
    UnitaryRep chi = make_rep(N.group, {m1(1), m1(-1)});
    QuotientData Qd = quotient_with_transversal(G, N);
    CHECK(is_g_invariant(chi, N, Qd).invariant);
    for (int s = 0; s < G.order; ++s) {
        UnitaryRep c = conjugate_rep(chi, N, s);
        CHECK((c.at(1) - chi.at(1)).norm() < 1e-12);
    }
}

TEST_CASE("conjugation composes: (pi^s)^t = pi^{st}") {
    FiniteGroup G = dihedral_group(6);
    NormalSubgroup N = normal_subgroup(G, {0, 1, 2, 3, 4, 5});
    Cplx w = std::polar(1.0, 2 * std::acos(-1.0) / 6);
    UnitaryRep pi = complete_rep(N.group, {{1, m1(w)}});
    for (int s : {1, 6, 7}) {
        for (int t : {2, 6, 9}) {
            UnitaryRep lhs = conjugate_rep(conjugate_rep(pi, N, s), N, t);
            UnitaryRep rhs = conjugate_rep(pi, N, G.mul[s][t]);
            for (int n = 0; n < N.group.order; ++n)
                CHECK((lhs.at(n) - rhs.at(n)).norm() < 1e-12);
        }
    }
}

TEST_CASE("invariance verdict does not depend on the transversal") {
    FiniteGroup G = dihedral_group(4);
    NormalSubgroup N = normal_subgroup(G, {0, 1, 2, 3});
    UnitaryRep good = complete_rep(N.group, {{1, m1(-1)}});
    UnitaryRep bad = complete_rep(N.group, {{1, m1(I1)}});
    for (std::uint64_t seed : {3u, 17u, 123u}) {
        QuotientData Qd = quotient_with_transversal(G, N, seed);
        CHECK(is_g_invariant(good, N, Qd).invariant);
        CHECK(!is_g_invariant(bad, N, Qd).invariant);
    }
}

TEST_CASE("unitary intertwiner between equivalent reps") {
    UnitaryRep pi = q8_irrep();
    CMat U = random_unitary(2, 5);
    std::vector<CMat> conj;
    for (int g = 0; g < 8; ++g) conj.push_back(U * pi.at(g) * U.adjoint());
    UnitaryRep pi2 = make_rep(*pi.group, conj);

    int attempts = 0;
    CMat W = unitary_intertwiner(pi, pi2, 13, &attempts);
    CHECK(attempts >= 1);
    CHECK(unitary_residual(W) < 1e-10);
    for (int g = 0; g < 8; ++g)
        CHECK((W * pi.at(g) * W.adjoint() - pi2.at(g)).norm() < 1e-9);
}

TEST_CASE("intertwiner requires equal characters") {
    FiniteGroup G = cyclic_group(2);
    UnitaryRep triv = make_rep(G, {m1(1), m1(1)});
    UnitaryRep sign = make_rep(G, {m1(1), m1(-1)});
    CHECK_THROWS_AS(unitary_intertwiner(triv, sign, 1), input_error);
}

TEST_CASE("commutant dimension of direct sums") {
    FiniteGroup G = cyclic_group(4);
    UnitaryRep chi = complete_rep(G, {{1, m1(I1)}});
    UnitaryRep triv = complete_rep(G, {{1, m1(1)}});
    CHECK(commutant(direct_sum(chi, chi)).dim() == 4);  // M_2
    CHECK(commutant(direct_sum(chi, triv)).dim() == 2); // C + C
    CHECK(!is_irreducible(direct_sum(chi, triv)));
}
