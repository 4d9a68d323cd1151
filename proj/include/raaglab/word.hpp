#ifndef RAAGLAB_WORD_HPP
#define RAAGLAB_WORD_HPP

#include <memory>
#include <string>
#include <vector>

#include "raaglab/raag.hpp"

namespace raaglab {

struct Letter {
    std::size_t vertex;  // index into the ambient graph
    long long exp;       // nonzero
    bool operator==(const Letter&) const = default;
};

/// A group element in left-greedy normal form: each letter is shuffled as far
/// left as commutation allows, equal-vertex letters merged and cancelled, and
/// commuting runs sorted by vertex index. Two raw sequences represent the
/// same element iff they normalize identically.
class Word {
public:
    explicit Word(std::shared_ptr<const Raag> ambient)
        : ambient_(std::move(ambient)) {}
    Word(std::shared_ptr<const Raag> ambient, const std::vector<Letter>& raw);

    const Raag& ambient() const { return *ambient_; }
    const std::shared_ptr<const Raag>& ambient_ptr() const { return ambient_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }

    Word operator*(const Word& o) const;
    Word inverse() const;
    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator<(const Word& o) const;

    /// Space-separated text form, e.g. "a b^-2 c". Identity prints as "1".
    std::string str() const;
    static Word parse(std::shared_ptr<const Raag> ambient, const std::string& text);

    /// Generator as a one-letter word.
    static Word generator(std::shared_ptr<const Raag> ambient,
                          const std::string& label, long long exp = 1);

private:
    void push_letter(std::size_t vertex, long long exp);
    std::shared_ptr<const Raag> ambient_;
    std::vector<Letter> letters_;
};

/// Action of an automorphism generator on a word: inversion v -> v^-1,
/// transvection (v,w): v -> vw, partial conjugation (v,C): x -> vxv^-1 for
/// x in C, graph automorphism: relabel. Result is normalized.
Word apply_generator(const AutGenerator& g, const Word& w);

/// Action of the inverse of g (transvection v -> vw^-1, conjugation by v^-1,
/// inverse permutation; inversions are involutions).
Word apply_generator_inverse(const AutGenerator& g, const Word& w);

} // namespace raaglab

#endif
