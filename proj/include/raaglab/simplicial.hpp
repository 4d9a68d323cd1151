#ifndef RAAGLAB_SIMPLICIAL_HPP
#define RAAGLAB_SIMPLICIAL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "raaglab/int_linalg.hpp"

namespace raaglab {

/// Finite simplicial complex. Faces are stored as sorted vertex-index
/// vectors; the face set is downward closed (the empty face is implicit).
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    explicit SimplicialComplex(std::vector<std::string> vertex_labels);
    static SimplicialComplex
    from_maximal(std::vector<std::string> vertex_labels,
                 const std::vector<std::vector<std::string>>& maximal_faces);

    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<std::string>& vertex_labels() const { return labels_; }
    std::size_t index_of(const std::string& label) const;

    /// Adds the face and all its subsets.
    void add_face(std::vector<int> face);
    void add_face_labels(const std::vector<std::string>& face);

    bool has_face(std::vector<int> face) const;
    /// Max face dimension; -1 for a complex with no faces at all.
    int dimension() const;
    std::vector<std::vector<int>> faces_of_dim(int p) const;
    std::size_t face_count() const { return faces_.size(); }
    const std::set<std::vector<int>>& all_faces() const { return faces_; }
    bool is_empty() const { return faces_.empty(); }

    /// Link of a face: { tau : tau disjoint from sigma, tau u sigma a face }.
    /// Link of the empty face is the complex itself.
    SimplicialComplex link_of(const std::vector<int>& sigma) const;
    /// Full subcomplex on the given vertex subset.
    SimplicialComplex full_subcomplex(const std::set<int>& verts) const;
    /// Cone: new apex joined to every face.
    SimplicialComplex cone(const std::string& apex_label) const;

    long long euler_characteristic() const;  // reduced: empty face counts -1

private:
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::set<std::vector<int>> faces_;  // sorted, nonempty
};

struct HomologyReport {
    bool empty_complex = false;
    int max_dim = -1;
    std::vector<long long> betti;            // reduced, dims 0..max_dim
    std::vector<std::vector<Int>> torsion;   // divisors > 1, per dim
    bool trivial_through(int k) const;
    std::string summary() const;
};

/// Reduced integral homology in dimensions 0..max_dim.
HomologyReport homology(const SimplicialComplex& c, int max_dim);

struct ConnectivityVerdict {
    bool pass = false;
    bool empty_complex = false;
    int first_failing_dim = -2;  // -1 means "empty, fails (-1)-connectivity"
    std::string detail;
};

/// Homological k-connectivity: nonempty and reduced homology vanishes
/// through degree k. k = -1 asks only for nonemptiness.
ConnectivityVerdict homological_connectivity(const SimplicialComplex& c, int k);

struct CmLinkEntry {
    std::vector<int> simplex;  // empty vector = the whole complex
    int required_connectivity;
    bool pass;
    std::string detail;
};

struct CmCertificate {
    bool pass = false;
    std::string reason;
    std::vector<CmLinkEntry> links;
};

/// Cohen-Macaulay of dimension n, with homological connectivity standing in
/// for homotopy connectivity: dim = n, (n-1)-connected, and every p-simplex
/// link (n-p-2)-connected.
CmCertificate is_cohen_macaulay(const SimplicialComplex& c, int n);

struct JoinVerdict {
    bool pass = false;
    // 0 ok; 1 not simplicial; 2 not surjective; 3 not injective on a simplex;
    // 4 completeness fails (a cross-fiber choice is not a face)
    int failed_condition = 0;
    std::string witness;
};

/// Checks that proj exhibits y as a complete join over x.
JoinVerdict verify_complete_join(const SimplicialComplex& y,
                                 const SimplicialComplex& x,
                                 const std::map<std::string, std::string>& proj);

/// Labeling system: nonempty label sets per (vertex, containing face),
/// shrinking as the face grows.
struct LabelingSystem {
    // key: (vertex index, face); invariant: labels(x,tau) >= labels(x,sigma)
    // for x in tau subset sigma
    std::map<std::pair<int, std::vector<int>>, std::set<std::string>> labels;
};

/// The complex X^L with vertices (x,l) and simplices the label-compatible
/// lifts of simplices of x. Vertex labels are "x|l".
SimplicialComplex build_from_labeling(const SimplicialComplex& x,
                                      const LabelingSystem& ls);

/// Semisimplicial set: per-dimension simplex keys plus face-map tables.
class SemiSimplicialSet {
public:
    /// levels[p] = keys of p-simplices; face(p, i, s) = index into level p-1.
    void set_levels(std::vector<std::vector<std::string>> levels);
    void set_face(int p, int i, std::vector<int> table);

    int top_dim() const { return static_cast<int>(levels_.size()) - 1; }
    std::size_t size(int p) const;
    const std::string& key(int p, int s) const { return levels_.at(p).at(s); }
    int face(int p, int i, int s) const;

    /// Checks d_i d_j = d_{j-1} d_i for all i < j on every simplex;
    /// returns a witness description on failure.
    std::optional<std::string> check_identities() const;

private:
    std::vector<std::vector<std::string>> levels_;
    // face_[p][i] = table for d_i : level p -> level p-1
    std::vector<std::vector<std::vector<int>>> face_;
};

} // namespace raaglab

#endif
