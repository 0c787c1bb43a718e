#include "repext/groups.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace repext {

int FiniteGroup::element_order(int g) const {
    int k = 1;
    int x = g;
    while (x != 0) {
        x = mul[x][g];
        ++k;
    }
    return k;
}

std::string FiniteGroup::label(int g) const {
    if (!labels.empty()) return labels[g];
    return std::to_string(g);
}

FiniteGroup group_from_table(std::vector<std::vector<int>> mul,
                             std::vector<std::string> labels) {
    const int n = static_cast<int>(mul.size());
    if (n == 0) throw input_error("group table: empty");
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != n)
            throw input_error("group table: not square");
        for (int v : row)
            if (v < 0 || v >= n) throw input_error("group table: entry out of range");
    }
    for (int g = 0; g < n; ++g)
        if (mul[0][g] != g || mul[g][0] != g)
            throw input_error("group table: index 0 is not a two-sided identity");
    FiniteGroup G;
    G.order = n;
    G.inv.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h)
            if (mul[g][h] == 0) G.inv[g] = h;
        if (G.inv[g] < 0 || mul[G.inv[g]][g] != 0)
            throw input_error("group table: element " + std::to_string(g) + " has no inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw input_error("group table: associativity fails at (" +
                                      std::to_string(a) + "," + std::to_string(b) + "," +
                                      std::to_string(c) + ")");
    G.mul = std::move(mul);
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n)
            throw input_error("group table: label count mismatch");
        G.labels = std::move(labels);
    }
    return G;
}

FiniteGroup group_from_generators(const std::vector<std::vector<int>>& perms,
                                  int max_order) {
    int degree = perms.empty() ? 1 : static_cast<int>(perms[0].size());
    for (const auto& p : perms) {
        if (static_cast<int>(p.size()) != degree)
            throw input_error("generators: mixed degrees");
        std::vector<bool> seen(degree, false);
        for (int v : p) {
            if (v < 0 || v >= degree || seen[v])
                throw input_error("generators: not a permutation");
            seen[v] = true;
        }
    }
    std::vector<int> id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;

    auto compose = [degree](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(degree);
        for (int i = 0; i < degree; ++i) c[i] = a[b[i]];
        return c;
    };

    // breadth-first closure: elements in discovery order, identity first
    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : perms) {
            auto next = compose(elems[head], g);
            if (index.emplace(next, static_cast<int>(elems.size())).second) {
                elems.push_back(next);
                if (static_cast<int>(elems.size()) > max_order)
                    throw input_error("generators: closure exceeds size cap " +
                                      std::to_string(max_order));
            }
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mul[a][b] = index.at(compose(elems[a], elems[b]));
    return group_from_table(std::move(mul));
}

std::vector<int> subgroup_closure(const FiniteGroup& G, std::vector<int> gens) {
    std::set<int> members{0};
    std::vector<int> queue{0};
    for (int g : gens)
        if (members.insert(g).second) queue.push_back(g);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int g : gens) {
            int next = G.mul[queue[head]][g];
            if (members.insert(next).second) queue.push_back(next);
        }
        int invh = G.inv[queue[head]];
        if (members.insert(invh).second) queue.push_back(invh);
    }
    return {members.begin(), members.end()};
}

NormalSubgroup normal_subgroup(const FiniteGroup& G, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members[0] != 0)
        throw input_error("subgroup: must contain the identity");
    NormalSubgroup N;
    N.parent = &G;
    N.pos.assign(G.order, -1);
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] < 0 || members[i] >= G.order)
            throw input_error("subgroup: element index out of range");
        N.pos[members[i]] = static_cast<int>(i);
    }
    for (int a : members) {
        if (N.pos[G.inv[a]] < 0)
            throw input_error("subgroup: not closed under inverse at " + std::to_string(a));
        for (int b : members)
            if (N.pos[G.mul[a][b]] < 0)
                throw input_error("subgroup: not closed under product at (" +
                                  std::to_string(a) + "," + std::to_string(b) + ")");
    }
    for (int s = 0; s < G.order; ++s)
        for (int n : members)
            if (N.pos[G.conjugate(s, n)] < 0)
                throw input_error("subgroup: not normal, s=" + std::to_string(s) +
                                  " n=" + std::to_string(n));
    const int m = static_cast<int>(members.size());
    std::vector<std::vector<int>> mul(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            mul[i][j] = N.pos[G.mul[members[i]][members[j]]];
    std::vector<std::string> labels;
    if (!G.labels.empty())
        for (int g : members) labels.push_back(G.labels[g]);
    N.members = std::move(members);
    N.group = group_from_table(std::move(mul), std::move(labels));
    return N;
}

QuotientData quotient_with_transversal(const FiniteGroup& G, const NormalSubgroup& N,
                                       std::optional<std::uint64_t> transversal_seed) {
    // coset of g keyed by its minimum element; cosets ordered by that key
    std::vector<int> coset_min(G.order);
    for (int g = 0; g < G.order; ++g) {
        int mn = G.order;
        for (int n : N.members) mn = std::min(mn, G.mul[g][n]);
        coset_min[g] = mn;
    }
    std::vector<int> reps;
    for (int g = 0; g < G.order; ++g)
        if (coset_min[g] == g) reps.push_back(g);
    std::sort(reps.begin(), reps.end());

    QuotientData Qd;
    Qd.proj.assign(G.order, -1);
    const int q = static_cast<int>(reps.size());
    for (int x = 0; x < q; ++x)
        for (int g = 0; g < G.order; ++g)
            if (coset_min[g] == reps[x]) Qd.proj[g] = x;
    Qd.transversal = reps;
    if (transversal_seed) {
        std::mt19937_64 rng(*transversal_seed);
        for (int x = 1; x < q; ++x) {
            std::vector<int> coset;
            for (int g = 0; g < G.order; ++g)
                if (Qd.proj[g] == x) coset.push_back(g);
            Qd.transversal[x] = coset[rng() % coset.size()];
        }
    }

    std::vector<std::vector<int>> mul(q, std::vector<int>(q));
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            mul[x][y] = Qd.proj[G.mul[Qd.transversal[x]][Qd.transversal[y]]];
    Qd.q_group = group_from_table(std::move(mul));
    // induced table must make proj a homomorphism
    for (int s = 0; s < G.order; ++s)
        for (int t = 0; t < G.order; ++t)
            if (Qd.proj[G.mul[s][t]] != Qd.q_group.mul[Qd.proj[s]][Qd.proj[t]])
                throw numeric_error("quotient: projection is not a homomorphism");
    return Qd;
}

std::pair<int, int> coset_factor(const FiniteGroup& G, const NormalSubgroup& N,
                                 const QuotientData& Qd, int s) {
    if (s < 0 || s >= G.order) throw input_error("coset_factor: index out of range");
    int x = Qd.proj[s];
    int n = G.mul[G.inv[Qd.transversal[x]]][s];
    int p = N.position(n);
    if (p < 0) throw numeric_error("coset_factor: factor not in subgroup");
    return {x, p};
}

} // namespace repext
