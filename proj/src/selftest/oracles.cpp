#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "raaglab/raag.hpp"

namespace raaglab::selftest {

Graph random_graph(int n, std::mt19937_64& rng) {
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back("g" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() % 2) es.emplace_back(vs[i], vs[j]);
    return Graph(vs, es);
}

namespace {

void oracle_join_rec(const Graph& g, std::vector<std::string>& out) {
    const std::size_t n = g.size();
    if (n == 1) {
        out.push_back(g.canonical_form());
        return;
    }
    // search bipartitions with all cross edges present; fix vertex 0 on side A
    for (std::size_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        std::vector<std::size_t> a{0}, b;
        for (std::size_t i = 1; i < n; ++i)
            if (mask & (1u << (i - 1)))
                b.push_back(i);
            else
                a.push_back(i);
        bool all_cross = true;
        for (std::size_t i : a)
            for (std::size_t j : b)
                if (!g.adjacent(i, j)) {
                    all_cross = false;
                    break;
                }
        if (!all_cross) continue;
        oracle_join_rec(g.induced(a), out);
        oracle_join_rec(g.induced(b), out);
        return;
    }
    out.push_back(g.canonical_form());  // no proper join
}

} // namespace

std::vector<std::string> oracle_join_multiset(const Graph& g) {
    std::vector<std::string> out;
    oracle_join_rec(g, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> oracle_generator_descriptions(const Graph& g) {
    const std::size_t n = g.size();
    // adjacency recomputed from the raw edge list
    std::vector<std::set<std::size_t>> nb(n);
    for (const auto& [a, b] : g.edges()) {
        nb[g.index_of(a)].insert(g.index_of(b));
        nb[g.index_of(b)].insert(g.index_of(a));
    }
    std::vector<std::string> out;
    // graph automorphisms: all permutations preserving the edge relation
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if (nb[i].count(j) != nb[perm[i]].count(perm[j])) ok = false;
        if (ok) {
            AutGenerator a;
            a.kind = AutGenerator::Kind::GraphAut;
            a.perm = perm;
            out.push_back(a.describe(g));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    // inversions
    for (std::size_t v = 0; v < n; ++v) {
        AutGenerator a;
        a.kind = AutGenerator::Kind::Inversion;
        a.v = v;
        out.push_back(a.describe(g));
    }
    // transvections: Link(v) subset of Star(w)
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w) {
            if (v == w) continue;
            bool ok = true;
            for (std::size_t u : nb[v])
                if (u != w && !nb[w].count(u)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            AutGenerator a;
            a.kind = AutGenerator::Kind::Transvection;
            a.v = v;
            a.w = w;
            out.push_back(a.describe(g));
        }
    // partial conjugations: components of the graph minus Star(v)
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<bool> removed(n, false);
        removed[v] = true;
        for (std::size_t u : nb[v]) removed[u] = true;
        std::vector<bool> seen(n, false);
        for (std::size_t s = 0; s < n; ++s) {
            if (removed[s] || seen[s]) continue;
            std::vector<std::size_t> comp, stack{s};
            seen[s] = true;
            while (!stack.empty()) {
                std::size_t u = stack.back();
                stack.pop_back();
                comp.push_back(u);
                for (std::size_t t : nb[u])
                    if (!removed[t] && !seen[t]) {
                        seen[t] = true;
                        stack.push_back(t);
                    }
            }
            std::sort(comp.begin(), comp.end());
            AutGenerator a;
            a.kind = AutGenerator::Kind::PartialConjugation;
            a.v = v;
            a.component = comp;
            out.push_back(a.describe(g));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int oracle_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw domain_error("oracle_det: square only");
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Int det = 0;
    Int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == c) continue;
                minor.at(r - 1, cc++) = m.at(r, k);
            }
        }
        det += sign * m.at(0, c) * oracle_det(minor);
        sign = -sign;
    }
    return det;
}

std::vector<std::vector<Int>> bounded_lattice_points(const Lattice& l,
                                                     int bound) {
    std::vector<std::vector<Int>> out;
    const std::size_t k = l.rank();
    std::vector<long long> c(k, -bound);
    for (;;) {
        std::vector<Int> p(l.ambient, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < l.ambient; ++j)
                p[j] += c[i] * l.basis.at(i, j);
        out.push_back(std::move(p));
        std::size_t i = 0;
        while (i < k) {
            if (++c[i] <= bound) break;
            c[i] = -bound;
            ++i;
        }
        if (i == k) break;
        if (k == 0) break;
    }
    if (k == 0) out.assign(1, std::vector<Int>(l.ambient, 0));
    return out;
}

} // namespace raaglab::selftest
