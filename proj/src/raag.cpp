#include "raaglab/raag.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace raaglab {

Raag::Raag(Graph g) : graph_(std::move(g)) {
    if (!graph_.empty()) {
        decomp_ = join_decompose(graph_);
        for (const auto& f : decomp_.factors)
            if (f.size() == 1) ++free_abelian_rank_;
    }
}

std::vector<std::string> Raag::prime_multiset() const {
    std::vector<std::string> out;
    for (const auto& f : decomp_.factors) out.push_back(f.canonical_form());
    std::sort(out.begin(), out.end());
    return out;
}

Graph Raag::gamma_prime() const {
    std::vector<std::size_t> verts;
    for (const auto& f : decomp_.factors) {
        if (f.size() == 1) continue;
        for (const auto& l : f.vertices()) verts.push_back(graph_.index_of(l));
    }
    std::sort(verts.begin(), verts.end());
    return graph_.induced(verts);
}

std::vector<std::string> Raag::central_generators() const {
    std::vector<std::string> out;
    for (const auto& f : decomp_.factors)
        if (f.size() == 1) out.push_back(f.vertices()[0]);
    std::sort(out.begin(), out.end());
    return out;
}

bool raag_isomorphic(const Raag& a, const Raag& b) {
    return graph_isomorphic(a.graph(), b.graph()).has_value();
}

Raag raag_product(const Raag& a, const Raag& b) {
    if (a.is_trivial()) return b;
    if (b.is_trivial()) return a;
    return Raag(Graph::join(relabel_with_prefix(a.graph(), "l."),
                            relabel_with_prefix(b.graph(), "r.")));
}

std::optional<Raag> cancel(const Raag& product_ac, const Raag& c) {
    std::map<std::string, std::size_t> have;
    std::map<std::string, const Graph*> rep;
    for (const auto& f : product_ac.decomposition().factors) {
        std::string k = f.canonical_form();
        ++have[k];
        rep[k] = &f;
    }
    for (const auto& f : c.decomposition().factors) {
        auto it = have.find(f.canonical_form());
        if (it == have.end() || it->second == 0) return std::nullopt;
        --it->second;
    }
    // assemble the difference as a join of the remaining factor graphs
    Graph acc({}, {});
    std::size_t tag = 0;
    for (const auto& [k, count] : have)
        for (std::size_t i = 0; i < count; ++i) {
            Graph part = relabel_with_prefix(*rep[k], "f" + std::to_string(tag++) + ".");
            acc = acc.empty() ? part : Graph::join(acc, part);
        }
    return Raag(acc);
}

std::string AutGenerator::describe(const Graph& g) const {
    std::ostringstream os;
    switch (kind) {
        case Kind::GraphAut: {
            os << "graph_aut(";
            for (std::size_t i = 0; i < perm.size(); ++i)
                os << (i ? " " : "") << g.label(i) << ">" << g.label(perm[i]);
            os << ")";
            break;
        }
        case Kind::Inversion:
            os << "inversion(" << g.label(v) << ")";
            break;
        case Kind::Transvection:
            os << "transvection(" << g.label(v) << "," << g.label(w) << ")";
            break;
        case Kind::PartialConjugation: {
            os << "partial_conj(" << g.label(v) << ",{";
            for (std::size_t i = 0; i < component.size(); ++i)
                os << (i ? " " : "") << g.label(component[i]);
            os << "})";
            break;
        }
    }
    return os.str();
}

std::vector<AutGenerator> enumerate_generators(const Raag& r,
                                               std::size_t vertex_cap) {
    const Graph& g = r.graph();
    const std::size_t n = g.size();
    if (n > vertex_cap)
        throw resource_error("enumerate_generators: vertex cap exceeded");
    std::vector<AutGenerator> out;
    for (auto& p : graph_automorphisms(g, vertex_cap)) {
        AutGenerator a;
        a.kind = AutGenerator::Kind::GraphAut;
        a.perm = std::move(p);
        out.push_back(std::move(a));
    }
    for (std::size_t v = 0; v < n; ++v) {
        AutGenerator a;
        a.kind = AutGenerator::Kind::Inversion;
        a.v = v;
        out.push_back(std::move(a));
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto lv = g.link(v);
        for (std::size_t w = 0; w < n; ++w) {
            if (v == w) continue;
            auto sw = g.star(w);
            bool ok = std::includes(sw.begin(), sw.end(), lv.begin(), lv.end());
            if (!ok) continue;
            AutGenerator a;
            a.kind = AutGenerator::Kind::Transvection;
            a.v = v;
            a.w = w;
            out.push_back(std::move(a));
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto sv = g.star(v);
        std::vector<std::size_t> rest;
        for (std::size_t u = 0; u < n; ++u)
            if (!std::binary_search(sv.begin(), sv.end(), u)) rest.push_back(u);
        if (rest.empty()) continue;
        Graph sub = g.induced(rest);
        for (const auto& comp : sub.connected_components()) {
            AutGenerator a;
            a.kind = AutGenerator::Kind::PartialConjugation;
            a.v = v;
            for (std::size_t i : comp) a.component.push_back(rest[i]);
            std::sort(a.component.begin(), a.component.end());
            out.push_back(std::move(a));
        }
    }
    return out;
}

namespace {

struct FactorInfo {
    std::vector<int> factor_of;      // vertex index -> factor index
    std::vector<bool> is_singleton;  // per factor
};

FactorInfo factor_info(const Raag& r) {
    FactorInfo fi;
    fi.factor_of.assign(r.graph().size(), -1);
    const auto& factors = r.decomposition().factors;
    fi.is_singleton.resize(factors.size());
    for (std::size_t fidx = 0; fidx < factors.size(); ++fidx) {
        fi.is_singleton[fidx] = (factors[fidx].size() == 1);
        for (const auto& l : factors[fidx].vertices())
            fi.factor_of[r.graph().index_of(l)] = static_cast<int>(fidx);
    }
    return fi;
}

GenClass classify(const Raag& r, const FactorInfo& fi, const AutGenerator& gen) {
    auto singleton_vertex = [&](std::size_t v) {
        return fi.is_singleton[fi.factor_of[v]];
    };
    switch (gen.kind) {
        case AutGenerator::Kind::Inversion:
            return singleton_vertex(gen.v) ? GenClass::GlPart
                                           : GenClass::FactorInternal;
        case AutGenerator::Kind::Transvection: {
            bool sv = singleton_vertex(gen.v), sw = singleton_vertex(gen.w);
            if (sv && sw) return GenClass::GlPart;
            if (!sv && sw) return GenClass::CentralTransvection;
            if (!sv && !sw && fi.factor_of[gen.v] == fi.factor_of[gen.w])
                return GenClass::FactorInternal;
            throw internal_error("transvection across non-Z factors: " +
                                 gen.describe(r.graph()));
        }
        case AutGenerator::Kind::PartialConjugation: {
            if (singleton_vertex(gen.v))
                throw internal_error("partial conjugation at central vertex");
            for (std::size_t u : gen.component)
                if (fi.factor_of[u] != fi.factor_of[gen.v])
                    throw internal_error("partial conjugation leaves its factor");
            return GenClass::FactorInternal;
        }
        case AutGenerator::Kind::GraphAut: {
            // every factor block must map onto a factor block
            const auto& factors = r.decomposition().factors;
            for (const auto& f : factors) {
                int target = -1;
                for (const auto& l : f.vertices()) {
                    std::size_t img = gen.perm[r.graph().index_of(l)];
                    if (target < 0)
                        target = fi.factor_of[img];
                    else if (fi.factor_of[img] != target)
                        throw internal_error("graph automorphism splits a factor");
                }
            }
            std::vector<std::size_t> moved;
            for (std::size_t v = 0; v < gen.perm.size(); ++v)
                if (gen.perm[v] != v) moved.push_back(v);
            if (moved.empty()) return GenClass::FactorInternal;
            bool all_singleton = true, all_one_block = true;
            int block = fi.factor_of[moved[0]];
            for (std::size_t v : moved) {
                if (!singleton_vertex(v)) all_singleton = false;
                if (fi.factor_of[v] != block ||
                    fi.factor_of[gen.perm[v]] != block)
                    all_one_block = false;
            }
            if (all_singleton) return GenClass::GlPart;
            if (all_one_block && !fi.is_singleton[block])
                return GenClass::FactorInternal;
            return GenClass::FactorPermuting;
        }
    }
    throw internal_error("unreachable generator kind");
}

} // namespace

AutStructure aut_structure(const Raag& r, std::size_t vertex_cap) {
    AutStructure s;
    s.d = r.free_abelian_rank();
    s.gamma_prime_size = r.graph().size() - s.d;
    s.central_transvection_rank = s.d * s.gamma_prime_size;
    std::map<std::string, std::size_t> blocks;
    for (const auto& f : r.decomposition().factors)
        if (f.size() > 1) ++blocks[f.canonical_form()];
    for (const auto& [k, m] : blocks) s.wreath_blocks.emplace_back(k, m);

    FactorInfo fi = factor_info(r);
    for (const auto& gen : enumerate_generators(r, vertex_cap))
        s.classified.emplace_back(gen, classify(r, fi, gen));
    return s;
}

} // namespace raaglab
