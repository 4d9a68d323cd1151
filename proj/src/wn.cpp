#include "raaglab/wn.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace raaglab {

namespace {

// Generic top-down assembly: start from top simplices, close under faces.
// Simplex type S must provide key() and face(j) -> S.
template <typename S>
SemiSimplicialSet assemble(std::vector<S> tops, int top_p) {
    std::vector<std::vector<S>> levels(top_p + 1);
    std::vector<std::map<std::string, int>> index(top_p + 1);
    for (auto& s : tops) {
        std::string k = s.key();
        if (index[top_p].count(k)) continue;
        index[top_p][k] = static_cast<int>(levels[top_p].size());
        levels[top_p].push_back(std::move(s));
    }
    // face tables: faces_at[p][j][s]
    std::vector<std::vector<std::vector<int>>> tables(top_p + 1);
    for (int p = top_p; p >= 1; --p) {
        tables[p].assign(p + 1, std::vector<int>(levels[p].size(), -1));
        for (std::size_t s = 0; s < levels[p].size(); ++s)
            for (int j = 0; j <= p; ++j) {
                S f = levels[p][s].face(j);
                std::string k = f.key();
                auto it = index[p - 1].find(k);
                int idx;
                if (it == index[p - 1].end()) {
                    idx = static_cast<int>(levels[p - 1].size());
                    index[p - 1][k] = idx;
                    levels[p - 1].push_back(std::move(f));
                } else {
                    idx = it->second;
                }
                tables[p][j][s] = idx;
            }
    }
    SemiSimplicialSet out;
    std::vector<std::vector<std::string>> keys(top_p + 1);
    for (int p = 0; p <= top_p; ++p)
        for (const auto& s : levels[p]) keys[p].push_back(s.key());
    out.set_levels(std::move(keys));
    for (int p = top_p; p >= 1; --p)
        for (int j = 0; j <= p; ++j) out.set_face(p, j, tables[p][j]);
    return out;
}

struct ColoredSplit {
    std::vector<std::string> tuple;  // ordered vertex keys
    std::set<std::string> absorbed;  // image keys already in the complement

    std::string key() const {
        std::ostringstream os;
        os << "tuple=[";
        for (std::size_t i = 0; i < tuple.size(); ++i)
            os << (i ? "; " : "") << tuple[i];
        os << "] absorbed={";
        bool first = true;
        for (const auto& a : absorbed) {
            os << (first ? "" : "; ") << a;
            first = false;
        }
        os << "}";
        return os.str();
    }
    ColoredSplit face(int j) const {
        ColoredSplit out = *this;
        out.absorbed.insert(out.tuple[j]);
        out.tuple.erase(out.tuple.begin() + j);
        return out;
    }
};

struct ZSplit {
    std::vector<std::vector<Int>> fs;  // images f_0..f_p
    Lattice lattice;                   // lattice part of H, HNF
    IntMatrix twist;                   // r x n, rows reduced mod lattice

    std::string key() const {
        std::ostringstream os;
        os << "f=[";
        for (std::size_t i = 0; i < fs.size(); ++i)
            os << (i ? "; " : "") << vector_label(fs[i]);
        os << "] L=" << lattice.basis.to_string()
           << " W=" << twist.to_string();
        return os.str();
    }
    void reduce_twist() {
        for (std::size_t k = 0; k < twist.rows(); ++k) {
            std::vector<Int> row = twist.row(k);
            row = reduce_mod_lattice(lattice, std::move(row));
            for (std::size_t c = 0; c < twist.cols(); ++c)
                twist.at(k, c) = row[c];
        }
    }
    ZSplit face(int j) const {
        ZSplit out = *this;
        out.lattice =
            lattice_sum(out.lattice,
                        lattice_from_rows(lattice.ambient, {fs[j]}));
        out.fs.erase(out.fs.begin() + j);
        out.reduce_twist();
        return out;
    }
};

} // namespace

SemiSimplicialSet build_Wn_sample_colored(const InSample& sample, int top_p,
                                          int max_top_simplices,
                                          std::uint64_t seed) {
    if (top_p < 0 || top_p >= sample.amb.n)
        throw domain_error("build_Wn_sample_colored: need 0 <= top_p < n");
    // ordered tuples of distinct-color sample vertices
    const auto& vs = sample.vertices;
    std::vector<ColoredSplit> all;
    std::vector<std::size_t> stack;
    std::set<int> colors;
    // depth-first enumeration of ordered tuples
    std::function<void()> rec = [&]() {
        if (static_cast<int>(stack.size()) == top_p + 1) {
            ColoredSplit s;
            for (std::size_t i : stack) s.tuple.push_back(vs[i].key());
            all.push_back(std::move(s));
            return;
        }
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (colors.count(vs[i].color)) continue;
            colors.insert(vs[i].color);
            stack.push_back(i);
            rec();
            stack.pop_back();
            colors.erase(vs[i].color);
        }
    };
    rec();
    std::mt19937_64 rng(seed);
    std::shuffle(all.begin(), all.end(), rng);
    if (static_cast<int>(all.size()) > max_top_simplices)
        all.resize(max_top_simplices);
    return assemble(std::move(all), top_p);
}

SemiSimplicialSet build_Wn_sample_Z(const Raag& A, int n, int top_p,
                                    int n_frames, int twist_bound,
                                    std::uint64_t seed) {
    if (top_p < 0 || top_p >= n)
        throw domain_error("build_Wn_sample_Z: need 0 <= top_p < n");
    const std::size_t r = A.graph().size();
    std::vector<ZSplit> tops;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < n_frames; ++t) {
        IntMatrix u = random_unimodular(n, seed + 1000003ull * t);
        ZSplit s;
        for (int i = 0; i <= top_p; ++i) s.fs.push_back(u.row(n - 1 - top_p + i));
        std::vector<std::vector<Int>> trows;
        for (int row = 0; row < n - 1 - top_p; ++row) trows.push_back(u.row(row));
        s.lattice = trows.empty()
                        ? Lattice{static_cast<std::size_t>(n), IntMatrix(0, n)}
                        : lattice_from_rows(n, trows);
        s.twist = IntMatrix(r, n);
        if (twist_bound > 0)
            for (std::size_t k = 0; k < r; ++k)
                for (int c = 0; c < n; ++c)
                    s.twist.at(k, c) =
                        static_cast<long long>(rng() % (2 * twist_bound + 1)) -
                        twist_bound;
        s.reduce_twist();
        tops.push_back(std::move(s));
    }
    return assemble(std::move(tops), top_p);
}

} // namespace raaglab
