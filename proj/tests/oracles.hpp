#pragma once

// brute-force reference implementations used only by tests

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "repext/groups.hpp"

namespace repext::oracles {

using Cplx = std::complex<double>;

inline std::vector<int> closure_of(const FiniteGroup& G, const std::vector<int>& gens) {
    std::vector<char> in(G.order, 0);
    in[0] = 1;
    std::vector<int> out{0};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (int g : gens) {
            int h = G.mul[out[i]][g];
            if (!in[h]) {
                in[h] = 1;
                out.push_back(h);
            }
        }
    return out;
}

inline std::vector<int> generating_set(const FiniteGroup& G) {
    std::vector<int> gens;
    std::vector<char> in(G.order, 0);
    in[0] = 1;
    for (int g = 1; g < G.order; ++g) {
        if (in[g]) continue;
        gens.push_back(g);
        for (int h : closure_of(G, gens)) in[h] = 1;
    }
    return gens;
}

// every homomorphism G -> T, tabulated on all elements, by exhausting
// root-of-unity assignments on a generating set
inline std::vector<std::vector<Cplx>> one_dim_reps(const FiniteGroup& G) {
    const double kPi = std::acos(-1.0);
    std::vector<int> gens = generating_set(G);
    std::vector<std::vector<Cplx>> found;

    std::vector<int> choice(gens.size(), 0);
    auto try_current = [&]() {
        std::vector<Cplx> chi(G.order, Cplx(0, 0));
        std::vector<char> known(G.order, 0);
        chi[0] = 1.0;
        known[0] = 1;
        std::vector<int> frontier{0};
        for (std::size_t i = 0; i < frontier.size(); ++i)
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                int k = G.element_order(gens[gi]);
                Cplx val = std::polar(1.0, 2 * kPi * choice[gi] / k);
                int h = G.mul[frontier[i]][gens[gi]];
                Cplx v = chi[frontier[i]] * val;
                if (!known[h]) {
                    chi[h] = v;
                    known[h] = 1;
                    frontier.push_back(h);
                } else if (std::abs(chi[h] - v) > 1e-9) {
                    return; // inconsistent assignment
                }
            }
        for (int a = 0; a < G.order; ++a)
            for (int b = 0; b < G.order; ++b)
                if (std::abs(chi[G.mul[a][b]] - chi[a] * chi[b]) > 1e-9) return;
        for (const auto& prev : found) {
            double diff = 0;
            for (int g = 0; g < G.order; ++g) diff += std::abs(prev[g] - chi[g]);
            if (diff < 1e-6) return;
        }
        found.push_back(chi);
    };

    std::size_t total = 1;
    for (int g : gens) total *= static_cast<std::size_t>(G.element_order(g));
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t t = idx;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            int k = G.element_order(gens[gi]);
            choice[gi] = static_cast<int>(t % k);
            t /= k;
        }
        try_current();
    }
    return found;
}

// does some character of G restrict to chi_n on the (sorted) subgroup members?
inline bool one_dim_extends(const FiniteGroup& G, const std::vector<int>& members,
                            const std::vector<Cplx>& chi_n) {
    for (const auto& chi : one_dim_reps(G)) {
        bool ok = true;
        for (std::size_t p = 0; p < members.size() && ok; ++p)
            ok = std::abs(chi[members[p]] - chi_n[p]) < 1e-7;
        if (ok) return true;
    }
    return false;
}

// all subgroups of G, each as a sorted member list
inline std::vector<std::vector<int>> all_subgroups(const FiniteGroup& G) {
    std::vector<std::vector<int>> subs{{0}};
    for (std::size_t i = 0; i < subs.size(); ++i)
        for (int g = 1; g < G.order; ++g) {
            std::vector<int> gens = subs[i];
            gens.push_back(g);
            std::vector<int> cl = closure_of(G, gens);
            std::sort(cl.begin(), cl.end());
            bool seen = false;
            for (const auto& s : subs)
                if (s == cl) {
                    seen = true;
                    break;
                }
            if (!seen) subs.push_back(cl);
        }
    return subs;
}

} // namespace repext::oracles
