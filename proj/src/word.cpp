#include "raaglab/word.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace raaglab {

Word::Word(std::shared_ptr<const Raag> ambient, const std::vector<Letter>& raw)
    : ambient_(std::move(ambient)) {
    for (const Letter& l : raw) {
        if (l.vertex >= ambient_->graph().size())
            throw domain_error("word letter names an unknown generator");
        push_letter(l.vertex, l.exp);
    }
}

void Word::push_letter(std::size_t v, long long e) {
    if (e == 0) return;
    const Graph& g = ambient_->graph();
    // walk left past commuting letters looking for a merge partner
    std::size_t j = letters_.size();
    std::size_t merge_pos = letters_.size();
    bool found = false;
    while (j > 0) {
        const Letter& l = letters_[j - 1];
        if (l.vertex == v) {
            merge_pos = j - 1;
            found = true;
            break;
        }
        if (!g.adjacent(l.vertex, v)) break;
        --j;
    }
    if (found) {
        letters_[merge_pos].exp += e;
        if (letters_[merge_pos].exp == 0) {
            std::vector<Letter> suffix(letters_.begin() + merge_pos + 1,
                                       letters_.end());
            letters_.erase(letters_.begin() + merge_pos, letters_.end());
            for (const Letter& l : suffix) push_letter(l.vertex, l.exp);
        }
        return;
    }
    // left-greedy placement: find the maximal suffix of letters commuting
    // with v, then insert before the first of them with a larger vertex
    std::size_t p0 = letters_.size();
    while (p0 > 0 && g.adjacent(letters_[p0 - 1].vertex, v)) --p0;
    std::size_t pos = p0;
    while (pos < letters_.size() && letters_[pos].vertex < v) ++pos;
    letters_.insert(letters_.begin() + pos, Letter{v, e});
}

Word Word::operator*(const Word& o) const {
    if (ambient_.get() != o.ambient_.get() &&
        !(ambient_->graph() == o.ambient_->graph()))
        throw domain_error("word product: ambient mismatch");
    Word out = *this;
    for (const Letter& l : o.letters_) out.push_letter(l.vertex, l.exp);
    return out;
}

Word Word::inverse() const {
    Word out(ambient_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.push_letter(it->vertex, -it->exp);
    return out;
}

bool Word::operator<(const Word& o) const {
    return std::lexicographical_compare(
        letters_.begin(), letters_.end(), o.letters_.begin(), o.letters_.end(),
        [](const Letter& a, const Letter& b) {
            return a.vertex != b.vertex ? a.vertex < b.vertex : a.exp < b.exp;
        });
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << " ";
        os << ambient_->graph().label(letters_[i].vertex);
        if (letters_[i].exp != 1) os << "^" << letters_[i].exp;
    }
    return os.str();
}

Word Word::parse(std::shared_ptr<const Raag> ambient, const std::string& text) {
    Word out(ambient);
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        auto caret = tok.find('^');
        std::string label = tok.substr(0, caret);
        long long e = 1;
        if (caret != std::string::npos) {
            try {
                e = std::stoll(tok.substr(caret + 1));
            } catch (const std::exception&) {
                throw domain_error("bad exponent in word token: " + tok);
            }
        }
        out.push_letter(ambient->graph().index_of(label), e);
    }
    return out;
}

Word Word::generator(std::shared_ptr<const Raag> ambient,
                     const std::string& label, long long exp) {
    Word out(ambient);
    out.push_letter(ambient->graph().index_of(label), exp);
    return out;
}

namespace {

Word map_letters(const Word& w,
                 const std::function<void(Word&, std::size_t, long long)>& f) {
    Word out(w.ambient_ptr());
    for (const Letter& l : w.letters()) f(out, l.vertex, l.exp);
    return out;
}

void check_compatible(const AutGenerator& g, const Word& w) {
    const std::size_t n = w.ambient().graph().size();
    auto in_range = [&](std::size_t v) { return v < n; };
    switch (g.kind) {
        case AutGenerator::Kind::GraphAut:
            if (g.perm.size() != n)
                throw domain_error("generator/word ambient mismatch");
            break;
        case AutGenerator::Kind::Inversion:
            if (!in_range(g.v)) throw domain_error("generator/word ambient mismatch");
            break;
        case AutGenerator::Kind::Transvection:
            if (!in_range(g.v) || !in_range(g.w))
                throw domain_error("generator/word ambient mismatch");
            break;
        case AutGenerator::Kind::PartialConjugation:
            if (!in_range(g.v)) throw domain_error("generator/word ambient mismatch");
            for (std::size_t u : g.component)
                if (!in_range(u)) throw domain_error("generator/word ambient mismatch");
            break;
    }
}

} // namespace

Word apply_generator(const AutGenerator& g, const Word& w) {
    check_compatible(g, w);
    switch (g.kind) {
        case AutGenerator::Kind::GraphAut:
            return map_letters(w, [&](Word& out, std::size_t v, long long e) {
                out = out * Word(w.ambient_ptr(), {{g.perm[v], e}});
            });
        case AutGenerator::Kind::Inversion:
            return map_letters(w, [&](Word& out, std::size_t v, long long e) {
                out = out * Word(w.ambient_ptr(), {{v, v == g.v ? -e : e}});
            });
        case AutGenerator::Kind::Transvection:
            return map_letters(w, [&](Word& out, std::size_t v, long long e) {
                if (v != g.v) {
                    out = out * Word(w.ambient_ptr(), {{v, e}});
                    return;
                }
                std::vector<Letter> img;
                if (e > 0)
                    for (long long i = 0; i < e; ++i) {
                        img.push_back({g.v, 1});
                        img.push_back({g.w, 1});
                    }
                else
                    for (long long i = 0; i < -e; ++i) {
                        img.push_back({g.w, -1});
                        img.push_back({g.v, -1});
                    }
                out = out * Word(w.ambient_ptr(), img);
            });
        case AutGenerator::Kind::PartialConjugation:
            return map_letters(w, [&](Word& out, std::size_t v, long long e) {
                bool in_c = std::binary_search(g.component.begin(),
                                               g.component.end(), v);
                std::vector<Letter> img;
                if (in_c) img.push_back({g.v, 1});
                img.push_back({v, e});
                if (in_c) img.push_back({g.v, -1});
                out = out * Word(w.ambient_ptr(), img);
            });
    }
    throw internal_error("unreachable generator kind");
}

Word apply_generator_inverse(const AutGenerator& g, const Word& w) {
    check_compatible(g, w);
    switch (g.kind) {
        case AutGenerator::Kind::GraphAut: {
            AutGenerator inv = g;
            for (std::size_t i = 0; i < g.perm.size(); ++i) inv.perm[g.perm[i]] = i;
            return apply_generator(inv, w);
        }
        case AutGenerator::Kind::Inversion:
            return apply_generator(g, w);
        case AutGenerator::Kind::Transvection:
            return map_letters(w, [&](Word& out, std::size_t v, long long e) {
                if (v != g.v) {
                    out = out * Word(w.ambient_ptr(), {{v, e}});
                    return;
                }
                std::vector<Letter> img;
                if (e > 0)
                    for (long long i = 0; i < e; ++i) {
                        img.push_back({g.v, 1});
                        img.push_back({g.w, -1});
                    }
                else
                    for (long long i = 0; i < -e; ++i) {
                        img.push_back({g.w, 1});
                        img.push_back({g.v, -1});
                    }
                out = out * Word(w.ambient_ptr(), img);
            });
        case AutGenerator::Kind::PartialConjugation:
            return map_letters(w, [&](Word& out, std::size_t v, long long e) {
                bool in_c = std::binary_search(g.component.begin(),
                                               g.component.end(), v);
                std::vector<Letter> img;
                if (in_c) img.push_back({g.v, -1});
                img.push_back({v, e});
                if (in_c) img.push_back({g.v, 1});
                out = out * Word(w.ambient_ptr(), img);
            });
    }
    throw internal_error("unreachable generator kind");
}

} // namespace raaglab
