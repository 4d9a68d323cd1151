#ifndef RAAGLAB_COLORED_HPP
#define RAAGLAB_COLORED_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "raaglab/simplicial.hpp"
#include "raaglab/word.hpp"

namespace raaglab {

/// The product A x X^n with labels "A.<g>" for A-generators and "X<j>.<g>"
/// for the j-th copy of X (j = 1..n).
struct ColoredAmbient {
    std::shared_ptr<const Raag> ambient;
    Raag A = Raag::trivial();
    Raag X = Raag::trivial();
    int n = 0;
    std::vector<std::string> x_gen_labels;  // generator labels of X, sorted

    std::string copy_label(int j, const std::string& x_gen) const;
    /// 1..n if the vertex lies in the j-th X-copy, 0 if it is an A-vertex.
    int copy_of(std::size_t ambient_vertex) const;
    /// True if the ambient vertex generates a central Z-factor.
    bool is_central(std::size_t ambient_vertex) const;
};

/// Requires X unfactorizable and different from Z, and A without an X-factor.
ColoredAmbient make_colored_ambient(const Raag& A, const Raag& X, int n);

/// A map X -> A x X^n given by the images of the X-generators; the vertex
/// datum of the colored complex.
struct ColoredVertexData {
    std::vector<Word> images;  // indexed like x_gen_labels
    int color = 0;             // 1..n

    std::string key() const;  // canonical: image normal forms joined
};

/// The factor-form complement A x prod_{i not in colors} X_i.
struct FactorComplement {
    std::vector<std::string> factors;  // "A" then "X<i>" ascending
    std::string str() const;
};

/// The color of a single split map: the X-copy receiving the non-central
/// parts of the images. Throws domain_error if the images straddle copies,
/// touch a non-central A-vertex, or are entirely central.
int color_of(const ColoredAmbient& amb, const std::vector<Word>& images);

/// Complement of a simplex with the given colors. Throws on repeated colors.
FactorComplement canonical_complement(const ColoredAmbient& amb,
                                      const std::vector<int>& colors);

/// Simplex law: distinct colors.
bool is_simplex_In(const std::vector<ColoredVertexData>& vertices);

/// Standard inclusion of X into the j-th copy.
ColoredVertexData standard_inclusion(const ColoredAmbient& amb, int j);

/// Apply an ambient automorphism generator to every image.
ColoredVertexData apply_to_vertex(const ColoredAmbient& amb,
                                  const AutGenerator& g,
                                  const ColoredVertexData& v);

struct InSample {
    ColoredAmbient amb;
    std::vector<ColoredVertexData> vertices;  // complex vertex i = vertices[i]
    SimplicialComplex complex;                // labels "v<i>"
    SimplicialComplex delta;                  // Delta^{n-1}, labels "c<j>"
    std::map<std::string, std::string> projection;  // v<i> -> c<color>
};

/// A finite full subcomplex of I_n(A,X): per color, `vertices_per_color`
/// distinct vertices obtained by applying seeded random automorphism words
/// of length <= aut_word_length to standard inclusions, keeping only images
/// whose central exponents stay within twist_bound; simplices are the
/// distinct-color subsets. Ships with the color projection onto Delta^{n-1}.
InSample build_In_sample(const Raag& A, const Raag& X, int n,
                         int vertices_per_color, int twist_bound,
                         int aut_word_length, std::uint64_t seed);

} // namespace raaglab

#endif
