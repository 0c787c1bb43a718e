#include "repext/pipeline.hpp"

namespace repext {

bool task_selected(const std::set<std::string>& tasks, const std::string& name) {
    return tasks.count("all") > 0 || tasks.count(name) > 0;
}

ExtensionReport run_pipeline(const ProblemSpec& spec) {
    const FiniteGroup& G = spec.group;
    ExtensionReport rep;
    rep.tol = spec.tol;
    rep.seed = spec.seed;

    NormalSubgroup N = normal_subgroup(G, spec.subgroup);
    QuotientData Qd = quotient_with_transversal(G, N, spec.transversal_seed);
    rep.transversal = Qd.transversal;
    const FiniteGroup& Q = Qd.q_group;

    // representation of N from (possibly partial) input over parent indices
    std::vector<std::pair<int, CMat>> gens;
    for (const auto& [g, M] : spec.rep_entries) {
        if (!N.contains(g))
            throw input_error("rep: element " + std::to_string(g) + " is not in the subgroup");
        gens.emplace_back(N.position(g), M);
    }
    UnitaryRep pi = complete_rep(N.group, gens, spec.tol);

    InvarianceResult inv = is_g_invariant(pi, N, Qd);
    rep.invariant = inv.invariant;
    rep.invariance_witnesses = inv.witnesses;
    if (!inv.invariant) return rep;

    // intertwiner witnesses, identity coset first
    std::vector<CMat> W(Q.order);
    W[0] = CMat::Identity(pi.dim, pi.dim);
    rep.intertwiner_attempts.assign(Q.order, 0);
    for (int x = 1; x < Q.order; ++x) {
        UnitaryRep pix = conjugate_rep(pi, N, Qd.transversal[x]);
        W[x] = unitary_intertwiner(pi, pix, spec.seed * 0x100000001b3ull + x,
                                   &rep.intertwiner_attempts[x]);
    }

    SectionUnitaries V = section_unitaries(pi, N, Qd, W);
    TwistedActionData tad = twisted_action(pi, N, Qd, std::move(V), spec.seed);
    for (const auto& [name, r] : tad.residuals) rep.residuals["obstruction." + name] = r;

    rep.commutant_dim = tad.commutant.dim();
    rep.irreducible = rep.commutant_dim == 1;

    if (rep.irreducible) {
        ScalarTwoCocycle sigma = normalize_cocycle(tad, Q);
        rep.sigma = sigma.values;
        auto w = is_coboundary(sigma);
        rep.trivial = w ? TrivialVerdict::True : TrivialVerdict::False;
        if (w) rep.coboundary_witness = w->nu;
        rep.class_order = class_order(sigma);
    }

    if (task_selected(spec.tasks, "extend")) {
        ExtendResult er = find_extension(pi, N, Qd, tad, spec.seed);
        rep.extend_verdict = er.verdict;
        rep.extend_note = er.note;
        rep.extension = std::move(er.extension);
        if (!rep.irreducible) {
            // the verdict decides triviality for the abelian-commutant case;
            // the search only ever certifies, never refutes
            if (er.verdict == ExtendVerdict::Extended)
                rep.trivial = TrivialVerdict::True;
            else if (er.verdict == ExtendVerdict::NoExtension)
                rep.trivial = TrivialVerdict::False;
        }
    } else if (rep.irreducible) {
        rep.extend_verdict = rep.trivial == TrivialVerdict::True ? ExtendVerdict::Extended
                                                                 : ExtendVerdict::NoExtension;
    }

    if (task_selected(spec.tasks, "stabilize")) {
        StabilizeResult sr = stabilize(pi, N, Qd, tad);
        for (const auto& [name, r] : sr.residuals) rep.residuals["stabilize." + name] = r;
        rep.stabilized = std::move(sr.rep);
    }

    if (task_selected(spec.tasks, "crosscheck")) {
        auto cc = remark_crosscheck(pi, N, Qd, W, tad);
        for (const auto& [name, r] : cc) rep.residuals["crosscheck." + name] = r;
    }

    return rep;
}

} // namespace repext
