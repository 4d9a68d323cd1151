#include "raaglab/graph.hpp"

#include <algorithm>
#include <functional>

namespace raaglab {

Graph::Graph(std::vector<std::string> vertices,
             std::vector<std::pair<std::string, std::string>> edges) {
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (vertices[i] == vertices[i + 1])
            throw domain_error("duplicate vertex label: " + vertices[i]);
    labels_ = std::move(vertices);
    for (std::size_t i = 0; i < labels_.size(); ++i) index_[labels_[i]] = i;
    adj_.assign(labels_.size(), std::vector<bool>(labels_.size(), false));
    for (const auto& [a, b] : edges) {
        if (a == b) throw domain_error("self-loop at vertex " + a);
        std::size_t i = index_of(a), j = index_of(b);
        adj_[i][j] = adj_[j][i] = true;
    }
}

std::size_t Graph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw domain_error("unknown vertex: " + label);
    return it->second;
}

bool Graph::has_vertex(const std::string& label) const {
    return index_.count(label) > 0;
}

bool Graph::adjacent(const std::string& a, const std::string& b) const {
    return adj_[index_of(a)][index_of(b)];
}

std::size_t Graph::edge_count() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (adj_[i][j]) ++c;
    return c;
}

std::vector<std::pair<std::string, std::string>> Graph::edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (adj_[i][j]) out.emplace_back(labels_[i], labels_[j]);
    return out;
}

std::vector<std::size_t> Graph::link(std::size_t v) const {
    if (v >= size()) throw domain_error("vertex index out of range");
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
        if (adj_[v][j]) out.push_back(j);
    return out;
}

std::vector<std::size_t> Graph::star(std::size_t v) const {
    auto out = link(v);
    out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::string> Graph::link_labels(const std::string& v) const {
    std::set<std::string> out;
    for (std::size_t j : link(index_of(v))) out.insert(labels_[j]);
    return out;
}

std::set<std::string> Graph::star_labels(const std::string& v) const {
    auto out = link_labels(v);
    out.insert(v);
    return out;
}

Graph Graph::complement() const {
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (!adj_[i][j]) es.emplace_back(labels_[i], labels_[j]);
    return Graph(labels_, es);
}

std::vector<std::vector<std::size_t>> Graph::connected_components() const {
    std::vector<int> comp(size(), -1);
    int nc = 0;
    for (std::size_t s = 0; s < size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < size(); ++j)
                if (adj_[v][j] && comp[j] < 0) {
                    comp[j] = nc;
                    stack.push_back(j);
                }
        }
        ++nc;
    }
    std::vector<std::vector<std::size_t>> out(nc);
    for (std::size_t v = 0; v < size(); ++v) out[comp[v]].push_back(v);
    return out;
}

Graph Graph::induced(const std::vector<std::size_t>& verts) const {
    std::vector<std::string> ls;
    for (std::size_t v : verts) ls.push_back(labels_.at(v));
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (adj_[verts[a]][verts[b]])
                es.emplace_back(labels_[verts[a]], labels_[verts[b]]);
    return Graph(ls, es);
}

namespace {

// Lexicographically minimal row-major upper-triangle bitstring over all
// vertex orderings, found by branch and bound.
std::string minimal_bitstring(const Graph& g) {
    const std::size_t n = g.size();
    if (n == 0) return "";
    std::string best;  // empty = none found yet
    std::vector<std::size_t> perm;  // perm[k] = original vertex at position k
    std::vector<bool> used(n, false);
    std::string cur;  // bits accumulated so far

    // tight == true while cur equals the corresponding prefix of best;
    // pruning against best is only sound in that state.
    std::function<void(bool)> rec = [&](bool tight) {
        std::size_t k = perm.size();
        if (k == n) {
            if (best.empty() || cur < best) best = cur;
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::string bits;
            bits.reserve(k);
            for (std::size_t p = 0; p < k; ++p)
                bits.push_back(g.adjacent(perm[p], v) ? '1' : '0');
            std::size_t off = cur.size();
            bool next_tight = false;
            if (tight && !best.empty()) {
                int cmp = bits.compare(best.substr(off, bits.size()));
                if (cmp > 0) continue;
                next_tight = (cmp == 0);
            }
            used[v] = true;
            perm.push_back(v);
            cur += bits;
            rec(next_tight);
            cur.resize(off);
            perm.pop_back();
            used[v] = false;
        }
    };
    rec(true);
    return best;
}

} // namespace

std::string Graph::canonical_form() const {
    return std::to_string(size()) + ":" + minimal_bitstring(*this);
}

Graph Graph::join(const Graph& a, const Graph& b) {
    std::vector<std::string> ls = a.vertices();
    for (const auto& l : b.vertices()) {
        if (a.has_vertex(l))
            throw domain_error("join: label collision on " + l);
        ls.push_back(l);
    }
    auto es = a.edges();
    for (const auto& e : b.edges()) es.push_back(e);
    for (const auto& u : a.vertices())
        for (const auto& v : b.vertices()) es.emplace_back(u, v);
    return Graph(ls, es);
}

std::optional<std::vector<std::pair<std::string, std::string>>>
graph_isomorphic(const Graph& g1, const Graph& g2) {
    const std::size_t n = g1.size();
    if (n != g2.size() || g1.edge_count() != g2.edge_count()) return std::nullopt;

    auto degrees = [](const Graph& g) {
        std::vector<std::size_t> d(g.size());
        for (std::size_t v = 0; v < g.size(); ++v) d[v] = g.link(v).size();
        return d;
    };
    auto d1 = degrees(g1), d2 = degrees(g2);
    {
        auto s1 = d1, s2 = d2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
        if (v == n) return true;
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || d1[v] != d2[w]) continue;
            bool ok = true;
            for (std::size_t u = 0; u < v; ++u)
                if (g1.adjacent(u, v) != g2.adjacent(static_cast<std::size_t>(map[u]), w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            map[v] = static_cast<int>(w);
            used[w] = true;
            if (rec(v + 1)) return true;
            used[w] = false;
            map[v] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t v = 0; v < n; ++v)
        out.emplace_back(g1.label(v), g2.label(static_cast<std::size_t>(map[v])));
    return out;
}

std::vector<std::vector<std::size_t>>
graph_automorphisms(const Graph& g, std::size_t vertex_cap) {
    const std::size_t n = g.size();
    if (n > vertex_cap)
        throw resource_error("graph_automorphisms: " + std::to_string(n) +
                             " vertices exceeds cap " + std::to_string(vertex_cap));
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.link(v).size();

    std::vector<std::vector<std::size_t>> result;
    std::vector<std::size_t> map(n, 0);
    std::vector<bool> used(n, false);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == n) {
            result.push_back(map);
            return;
        }
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || deg[v] != deg[w]) continue;
            bool ok = true;
            for (std::size_t u = 0; u < v; ++u)
                if (g.adjacent(u, v) != g.adjacent(map[u], w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            rec(v + 1);
            used[w] = false;
        }
    };
    rec(0);
    return result;
}

JoinDecomposition join_decompose(const Graph& g) {
    if (g.empty()) throw domain_error("join_decompose: empty graph");
    JoinDecomposition d;
    for (const auto& comp : g.complement().connected_components())
        d.factors.push_back(g.induced(comp));
    std::sort(d.factors.begin(), d.factors.end(),
              [](const Graph& a, const Graph& b) {
                  return a.canonical_form() < b.canonical_form();
              });
    for (const auto& f : d.factors) ++d.multiplicity[f.canonical_form()];
    return d;
}

Graph relabel_with_prefix(const Graph& g, const std::string& prefix) {
    std::vector<std::string> ls;
    for (const auto& l : g.vertices()) ls.push_back(prefix + l);
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& [a, b] : g.edges()) es.emplace_back(prefix + a, prefix + b);
    return Graph(ls, es);
}

} // namespace raaglab
