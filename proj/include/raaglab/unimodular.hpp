#ifndef RAAGLAB_UNIMODULAR_HPP
#define RAAGLAB_UNIMODULAR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "raaglab/int_linalg.hpp"
#include "raaglab/raag.hpp"
#include "raaglab/simplicial.hpp"

namespace raaglab {

std::string vector_label(const std::vector<Int>& v);

/// A simplicial complex whose vertices are integer vectors.
struct VectorComplex {
    SimplicialComplex complex;
    std::vector<std::vector<Int>> vectors;  // per vertex index
};

/// Vertices: primitive vectors in Z^n with every coordinate in [-q, q];
/// faces: subsets forming partial bases. Face search stops at dimension
/// max_dim when max_dim >= 0. Caps: n <= 5, q <= 8.
VectorComplex build_unimodular_complex(int n, int q, int max_dim = -1);

/// Full subcomplex on the vertices whose last coordinate has absolute
/// value <= q.
VectorComplex maazen_filtration(const VectorComplex& base, int q);

/// kappa(z) = 0 for |z| < q+1, else the round-toward-zero quotient
/// sign(z) * floor(|z| / (q+1)); satisfies |z - kappa(z)(q+1)| < q+1.
Int kappa(const Int& z, int q);

struct RetractionResult {
    bool pass = false;
    std::string witness;
    std::vector<std::vector<Int>> images;  // per vertex index of the link
};

/// The retraction w -> w - eps1 * kappa((w)_n) * v1 on a (sub)complex of the
/// link of v1; requires |(v1)_n| = q+1. Verifies that images land in O_q,
/// that O_q vertices are fixed, that the map is simplicial (face images,
/// extended by v1, stay partial bases), and that it is idempotent.
RetractionResult maazen_retraction(const VectorComplex& link,
                                   const std::vector<Int>& v1, int q);

/// Complement of a vertex of SI_n(A, Z): the lattice part T = K cap Z^n of
/// rank n-1, plus one twist row per A-generator (the Z^n-part w_k paired
/// with a_k, so K is generated by {a_k w_k} and T).
struct ZComplement {
    Lattice lattice;
    IntMatrix twist;  // r x n
};

/// A vertex (f, K) of SI_n(A, Z): f(1) = theta * v with v in Z^n primitive
/// and theta an (abelianized) A-twist.
struct SIVertex {
    std::vector<Int> v;      // primitive vector in Z^n
    std::vector<Int> theta;  // length r; exponent vector of the A-part
    ZComplement K;
};

/// True iff f(1) = theta * v lies in K: v minus the twist contribution of
/// theta lies in the lattice part.
bool in_complement(const SIVertex& f, const ZComplement& K);

/// Simplexhood in I_n(A, Z) depends only on the vector parts.
bool is_simplex_In_Z(const std::vector<SIVertex>& vertices);

struct IntersectionCertificate {
    bool pass = false;
    std::string witness;
    Lattice lattice;           // intersection of the K_i cap Z^n
    IntMatrix combined_twist;  // r x n, row k pairs with a_k in A'
    std::vector<std::vector<Int>> m;  // m[i][k]
    std::size_t rank_m = 0;           // the m of A x Z^m
};

/// Intersection of the complements of an SI-simplex: A' generated by
/// a_k f_0^{m_{0,k}} ... f_p^{m_{p,k}} together with the lattice
/// intersection; certifies the A x Z^m form. Throws domain_error with the
/// violating pair when the input is not an SI-simplex.
IntersectionCertificate
complement_intersection(const std::vector<SIVertex>& vertices, const Raag& A,
                        int n);

struct SnVerdict {
    bool pass = false;
    std::string witness;
};

/// Checks K_j = K x prod_{i != j} f_i(Z) for K the computed intersection:
/// lattice equality T_j = T cap + sum of the other f_i, and twist congruence
/// of every K_j generator against the combined twist.
SnVerdict verify_Sn_equals_SIn(const std::vector<SIVertex>& vertices,
                               const Raag& A, int n);

/// Seeded sample of a p-simplex of SI_n(A, Z): a random GL_n(Z) frame
/// applied to the standard splitting, with random bounded twists.
std::vector<SIVertex> sample_SI_simplex(const Raag& A, int n, int p,
                                        std::uint64_t seed, int twist_bound);

/// Random unimodular matrix as a product of `length` elementary operations.
IntMatrix random_unimodular(int n, std::uint64_t seed, int length = 20,
                            int bound = 2);

} // namespace raaglab

#endif
