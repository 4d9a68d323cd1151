#ifndef RAAGLAB_GRAPH_HPP
#define RAAGLAB_GRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "raaglab/errors.hpp"

namespace raaglab {

/// A finite simplicial graph. Vertices carry opaque string labels; internal
/// indices are assigned by label sort order and all index-based accessors
/// refer to that order.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> vertices,
          std::vector<std::pair<std::string, std::string>> edges);

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::vector<std::string>& vertices() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::size_t index_of(const std::string& label) const;
    bool has_vertex(const std::string& label) const;

    bool adjacent(std::size_t i, std::size_t j) const { return adj_[i][j]; }
    bool adjacent(const std::string& a, const std::string& b) const;
    std::size_t edge_count() const;
    std::vector<std::pair<std::string, std::string>> edges() const;

    std::vector<std::size_t> link(std::size_t v) const;
    std::vector<std::size_t> star(std::size_t v) const;
    std::set<std::string> link_labels(const std::string& v) const;
    std::set<std::string> star_labels(const std::string& v) const;

    Graph complement() const;
    std::vector<std::vector<std::size_t>> connected_components() const;
    Graph induced(const std::vector<std::size_t>& verts) const;

    /// Minimal adjacency bitstring over all vertex orderings, prefixed with
    /// the vertex count. Two graphs are isomorphic iff forms are equal.
    std::string canonical_form() const;

    /// Disjoint union plus all cross edges. Label sets must be disjoint.
    static Graph join(const Graph& a, const Graph& b);

    bool operator==(const Graph& o) const {
        return labels_ == o.labels_ && adj_ == o.adj_;
    }

private:
    std::vector<std::string> labels_;          // sorted, unique
    std::vector<std::vector<bool>> adj_;       // symmetric, no loops
    std::map<std::string, std::size_t> index_;
};

/// Edge-preserving bijection from g1 vertices to g2 vertices, if one exists.
std::optional<std::vector<std::pair<std::string, std::string>>>
graph_isomorphic(const Graph& g1, const Graph& g2);

/// All automorphisms as permutations of internal indices. Throws
/// resource_error above the vertex cap.
std::vector<std::vector<std::size_t>>
graph_automorphisms(const Graph& g, std::size_t vertex_cap = 10);

struct JoinDecomposition {
    std::vector<Graph> factors;                 // sorted by canonical form
    std::map<std::string, std::size_t> multiplicity;  // canonical form -> count
};

/// Maximal join decomposition, computed as the connected components of the
/// complement graph. Throws domain_error on the empty graph.
JoinDecomposition join_decompose(const Graph& g);

/// Copy of g with every label prefixed; keeps adjacency.
Graph relabel_with_prefix(const Graph& g, const std::string& prefix);

} // namespace raaglab

#endif
