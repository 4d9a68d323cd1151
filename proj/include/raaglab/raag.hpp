#ifndef RAAGLAB_RAAG_HPP
#define RAAGLAB_RAAG_HPP

#include <optional>
#include <string>
#include <vector>

#include "raaglab/graph.hpp"

namespace raaglab {

/// A right-angled Artin group, carried by its defining graph together with
/// the cached maximal join decomposition. The free abelian rank d counts the
/// single-vertex join factors, so the group is Z^d x A_{Gamma'}.
class Raag {
public:
    explicit Raag(Graph g);
    static Raag trivial() { return Raag(Graph({}, {})); }

    const Graph& graph() const { return graph_; }
    const JoinDecomposition& decomposition() const { return decomp_; }
    std::size_t free_abelian_rank() const { return free_abelian_rank_; }
    bool is_trivial() const { return graph_.empty(); }
    std::size_t generator_count() const { return graph_.size(); }

    /// Sorted canonical forms of the prime factors, with multiplicity.
    std::vector<std::string> prime_multiset() const;
    /// Join of the non-single-vertex factors (original labels kept).
    Graph gamma_prime() const;
    /// Labels of the single-vertex factors (the central Z generators).
    std::vector<std::string> central_generators() const;

private:
    Graph graph_;
    JoinDecomposition decomp_;
    std::size_t free_abelian_rank_ = 0;
};

bool raag_isomorphic(const Raag& a, const Raag& b);

/// Direct product: join of the graphs, labels prefixed to stay disjoint.
Raag raag_product(const Raag& a, const Raag& b);

/// If the prime multiset of c is contained (up to isomorphism) in that of
/// product_ac, the RAAG with the difference multiset; otherwise nullopt
/// ("c is not a direct factor").
std::optional<Raag> cancel(const Raag& product_ac, const Raag& c);

struct AutGenerator {
    enum class Kind { GraphAut, Inversion, Transvection, PartialConjugation };
    Kind kind;
    std::vector<std::size_t> perm;       // GraphAut: index permutation
    std::size_t v = 0;                   // Inversion / Transvection / PartialConj
    std::size_t w = 0;                   // Transvection target
    std::vector<std::size_t> component;  // PartialConjugation: sorted indices

    std::string describe(const Graph& g) const;
};

/// All generators of Aut(A_Gamma): every graph automorphism, every inversion,
/// every transvection (v,w) with Link(v) <= Star(w), and every partial
/// conjugation (v, C) with C a component of Gamma minus Star(v).
std::vector<AutGenerator> enumerate_generators(const Raag& r,
                                               std::size_t vertex_cap = 10);

enum class GenClass {
    FactorInternal,       // acts inside one prime factor
    CentralTransvection,  // v -> vz, z a central Z generator, v in Gamma'
    FactorPermuting,      // graph automorphism moving Gamma' across blocks
    GlPart,               // lives in GL_d(Z) on the Z^d part
};

struct AutStructure {
    std::size_t d = 0;
    std::size_t gamma_prime_size = 0;
    std::size_t central_transvection_rank = 0;  // d * |Gamma'|
    // non-Z prime factors: (canonical graph form, multiplicity)
    std::vector<std::pair<std::string, std::size_t>> wreath_blocks;
    std::vector<std::pair<AutGenerator, GenClass>> classified;
};

/// Decomposition data of Aut(A_Gamma) plus a total classification of every
/// generator from enumerate_generators. Throws internal_error if a generator
/// fits no class.
AutStructure aut_structure(const Raag& r, std::size_t vertex_cap = 10);

} // namespace raaglab

#endif
