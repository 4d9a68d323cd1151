#ifndef RAAGLAB_SELFTEST_ORACLES_HPP
#define RAAGLAB_SELFTEST_ORACLES_HPP

#include <random>
#include <string>
#include <vector>

#include "raaglab/graph.hpp"
#include "raaglab/int_linalg.hpp"

namespace raaglab::selftest {

/// Random graph with labels g0..g{n-1}, each edge present with prob 1/2.
Graph random_graph(int n, std::mt19937_64& rng);

/// Brute-force join decomposition: recursively search all vertex
/// bipartitions for one with every cross edge present. Returns the sorted
/// canonical forms of the factors.
std::vector<std::string> oracle_join_multiset(const Graph& g);

/// Definition-level enumeration of the automorphism generators, computed
/// from the raw edge list: all permutations preserving edges, all
/// inversions, all ordered pairs with Link(v) contained in Star(w), and all
/// components of the complement of each star. Returns sorted description
/// strings in the library's format.
std::vector<std::string> oracle_generator_descriptions(const Graph& g);

/// Determinant by Laplace expansion (reference for <= 4x4).
Int oracle_det(const IntMatrix& m);

/// All lattice points whose basis coefficients lie in [-bound, bound].
std::vector<std::vector<Int>> bounded_lattice_points(const Lattice& l,
                                                     int bound);

} // namespace raaglab::selftest

#endif
