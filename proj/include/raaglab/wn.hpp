#ifndef RAAGLAB_WN_HPP
#define RAAGLAB_WN_HPP

#include <cstdint>

#include "raaglab/colored.hpp"
#include "raaglab/unimodular.hpp"

namespace raaglab {

/// Sampled chunk of W_n(A, X) for X != Z: p-simplices are ordered tuples of
/// distinct-color vertices of the I_n sample plus the set of images already
/// absorbed into the complement; the face d_j deletes the j-th tuple entry
/// and absorbs its image. Top simplices have dimension top_p.
SemiSimplicialSet build_Wn_sample_colored(const InSample& sample, int top_p,
                                          int max_top_simplices,
                                          std::uint64_t seed);

/// Sampled chunk of W_n(A, Z): p-simplices are splittings
/// (f_0..f_p, H = (lattice, twist)); the face d_j deletes f_j and absorbs it
/// into the lattice, with twist rows reduced to canonical representatives.
/// Top simplices come from `n_frames` seeded random GL_n(Z) frames.
SemiSimplicialSet build_Wn_sample_Z(const Raag& A, int n, int top_p,
                                    int n_frames, int twist_bound,
                                    std::uint64_t seed);

} // namespace raaglab

#endif
