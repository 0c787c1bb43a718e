#include <doctest.h>

#include "repext/io.hpp"

using namespace repext;
using Cplx = std::complex<double>;

namespace {

std::string corpus(const std::string& name) {
    return std::string(REPEXT_CORPUS_DIR) + "/" + name;
}

} // namespace

TEST_CASE("extendable scalar problem end to end") {
    ProblemSpec spec = load_problem(corpus("z4_z2.json"));
    ExtensionReport rep = run_pipeline(spec);
    CHECK(rep.invariant);
    CHECK(rep.commutant_dim == 1);
    CHECK(rep.irreducible);
    CHECK(rep.trivial == TrivialVerdict::True);
    CHECK(rep.class_order == 1);
    CHECK(rep.extend_verdict == ExtendVerdict::Extended);
    REQUIRE(rep.extension);
    Cplx rho1 = rep.extension->at(1)(0, 0);
    CHECK(std::abs(rho1 * rho1 + 1.0) < 1e-9);
    REQUIRE(rep.stabilized);
    CHECK(rep.stabilized->dim == 2);
    for (const auto& [k, r] : rep.residuals) {
        INFO(k);
        CHECK(r < 1e-8);
    }
    CHECK(rep.transversal == std::vector<int>{0, 1});
}

TEST_CASE("obstructed scalar problem end to end") {
    ExtensionReport rep = run_pipeline(load_problem(corpus("q8_center.json")));
    CHECK(rep.trivial == TrivialVerdict::False);
    CHECK(rep.class_order == 2);
    CHECK(rep.extend_verdict == ExtendVerdict::NoExtension);
    CHECK(!rep.extension);
    CHECK(!rep.coboundary_witness);
    REQUIRE(rep.sigma);
    // sigma itself is only pinned up to coboundary, but the commutation
    // ratio sigma(x,y)/sigma(y,x) is an invariant of the class
    CHECK(std::abs((*rep.sigma)[1][2] / (*rep.sigma)[2][1] + 1.0) < 1e-9);
    REQUIRE(rep.stabilized);
    CHECK(rep.stabilized->dim == 4);
}

TEST_CASE("the order-3 obstruction of the Heisenberg group") {
    ExtensionReport rep = run_pipeline(load_problem(corpus("heis27_center.json")));
    CHECK(rep.trivial == TrivialVerdict::False);
    CHECK(rep.class_order == 3);
    CHECK(rep.extend_verdict == ExtendVerdict::NoExtension);
}

TEST_CASE("abelian-commutant problem is decided without a cocycle table") {
    ExtensionReport rep = run_pipeline(load_problem(corpus("q8_center_sum.json")));
    CHECK(rep.commutant_dim == 2);
    CHECK(!rep.irreducible);
    CHECK(!rep.sigma);
    CHECK(rep.extend_verdict == ExtendVerdict::NoExtension);
    CHECK(rep.trivial == TrivialVerdict::False);
}

TEST_CASE("non-invariant input stops after the invariance check") {
    // rotation subgroup of D4 carrying a complex character
    ProblemSpec base = load_problem(corpus("d4_center.json"));
    ProblemSpec spec;
    spec.group = base.group; // D4
    spec.subgroup = {0, 1, 2, 3};
    CMat m(1, 1);
    m(0, 0) = Cplx(0, 1);
    spec.rep_entries = {{1, m}};
    ExtensionReport rep = run_pipeline(spec);
    CHECK(!rep.invariant);
    CHECK(!rep.invariance_witnesses.empty());
    CHECK(rep.commutant_dim == 0);
    json out = report_to_json(rep);
    CHECK(out.contains("invariance_witnesses"));
    CHECK(!out.contains("extension"));
}

TEST_CASE("parse errors carry a path to the offending field") {
    CHECK_THROWS_WITH_AS(parse_problem(json::object()), doctest::Contains("/group"),
                         input_error);

    json j = {{"group", {{"kind", "table"}, {"mul", {{0, 1}, {1, 0}}}}},
              {"subgroup", {0, 1}},
              {"rep", {{"1", {{{1.0}}}}}}}; // entry is not a [re, im] pair
    CHECK_THROWS_WITH_AS(parse_problem(j), doctest::Contains("/rep/1/0/0"), input_error);

    j["rep"] = {{"1", {{{1.0, 0.0}}}}};
    j["tasks"] = {"frobnicate"};
    CHECK_THROWS_WITH_AS(parse_problem(j), doctest::Contains("/tasks"), input_error);

    j["tasks"] = {"analyze"};
    j["tol"] = -1.0;
    CHECK_THROWS_WITH_AS(parse_problem(j), doctest::Contains("/tol"), input_error);
}

TEST_CASE("rep entries outside the subgroup are rejected") {
    ProblemSpec spec = load_problem(corpus("z4_z2.json"));
    CMat m(1, 1);
    m(0, 0) = 1.0;
    spec.rep_entries.push_back({1, m}); // 1 is not in {0, 2}
    CHECK_THROWS_AS(run_pipeline(spec), input_error);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    for (const char* name : {"q8_center_sum.json", "z4_z2_pair.json", "q8_center.json"}) {
        ProblemSpec spec = load_problem(corpus(name));
        std::string a = report_to_json(run_pipeline(spec)).dump();
        std::string b = report_to_json(run_pipeline(spec)).dump();
        CHECK(a == b);
    }
}

TEST_CASE("task selection trims the work") {
    ProblemSpec spec = load_problem(corpus("z4_z2.json"));
    spec.tasks = {"analyze"};
    ExtensionReport rep = run_pipeline(spec);
    // triviality of the class still decides the verdict in the scalar case
    CHECK(rep.extend_verdict == ExtendVerdict::Extended);
    CHECK(!rep.extension);
    CHECK(!rep.stabilized);
    for (const auto& [k, r] : rep.residuals) CHECK(k.rfind("stabilize.", 0) != 0);
}

TEST_CASE("verdict is stable across transversal choices") {
    for (const char* name : {"q8_center.json", "z8_z2.json", "q8_center_sum.json"}) {
        ProblemSpec spec = load_problem(corpus(name));
        ExtensionReport base = run_pipeline(spec);
        for (std::uint64_t ts : {2u, 31u}) {
            spec.transversal_seed = ts;
            ExtensionReport rep = run_pipeline(spec);
            CHECK(rep.extend_verdict == base.extend_verdict);
            CHECK(rep.trivial == base.trivial);
            if (base.class_order) CHECK(rep.class_order == base.class_order);
        }
    }
}

TEST_CASE("report JSON shape") {
    ExtensionReport rep = run_pipeline(load_problem(corpus("z9_z3.json")));
    json out = report_to_json(rep);
    CHECK(out["invariant"] == true);
    CHECK(out["trivial"] == "trivial");
    CHECK(out["extension"]["verdict"] == "extended");
    CHECK(out["sigma"].size() == 3);
    CHECK(out["coboundary_witness"].size() == 3);
    CHECK(out["residuals"].is_object());
}
