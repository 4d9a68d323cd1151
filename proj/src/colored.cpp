#include "raaglab/colored.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace raaglab {

std::string ColoredAmbient::copy_label(int j, const std::string& x_gen) const {
    return "X" + std::to_string(j) + "." + x_gen;
}

int ColoredAmbient::copy_of(std::size_t ambient_vertex) const {
    const std::string& l = ambient->graph().label(ambient_vertex);
    if (l.rfind("A.", 0) == 0) return 0;
    auto dot = l.find('.');
    if (l.empty() || l[0] != 'X' || dot == std::string::npos)
        throw internal_error("unrecognized ambient label: " + l);
    return std::stoi(l.substr(1, dot - 1));
}

bool ColoredAmbient::is_central(std::size_t ambient_vertex) const {
    const auto& cg = ambient->central_generators();
    return std::binary_search(cg.begin(), cg.end(),
                              ambient->graph().label(ambient_vertex));
}

ColoredAmbient make_colored_ambient(const Raag& A, const Raag& X, int n) {
    if (n < 1) throw domain_error("need n >= 1");
    if (X.is_trivial() || X.decomposition().factors.size() != 1)
        throw domain_error("X must be unfactorizable");
    if (X.graph().size() == 1)
        throw domain_error("X = Z is not handled by the colored builders");
    const std::string xform = X.graph().canonical_form();
    for (const auto& f : A.prime_multiset())
        if (f == xform)
            throw domain_error(
                "A contains an X-factor; cancel it before building");
    Graph acc = relabel_with_prefix(A.graph(), "A.");
    for (int j = 1; j <= n; ++j) {
        Graph part =
            relabel_with_prefix(X.graph(), "X" + std::to_string(j) + ".");
        acc = acc.empty() ? part : Graph::join(acc, part);
    }
    ColoredAmbient amb;
    amb.ambient = std::make_shared<Raag>(Graph(acc));
    amb.A = A;
    amb.X = X;
    amb.n = n;
    amb.x_gen_labels = X.graph().vertices();
    return amb;
}

std::string ColoredVertexData::key() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < images.size(); ++i)
        os << (i ? " | " : "") << images[i].str();
    return os.str();
}

std::string FactorComplement::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i)
        os << (i ? " x " : "") << factors[i];
    return os.str();
}

int color_of(const ColoredAmbient& amb, const std::vector<Word>& images) {
    int color = 0;
    for (const Word& w : images)
        for (const Letter& l : w.letters()) {
            if (amb.is_central(l.vertex)) continue;
            int c = amb.copy_of(l.vertex);
            if (c == 0)
                throw domain_error(
                    "not F-split: image touches a non-central A-generator " +
                    amb.ambient->graph().label(l.vertex));
            if (color == 0)
                color = c;
            else if (color != c)
                throw domain_error(
                    "not F-split: images straddle copies " +
                    std::to_string(color) + " and " + std::to_string(c));
        }
    if (color == 0)
        throw domain_error("not F-split: images are entirely central");
    return color;
}

FactorComplement canonical_complement(const ColoredAmbient& amb,
                                      const std::vector<int>& colors) {
    std::set<int> used;
    for (int c : colors) {
        if (c < 1 || c > amb.n) throw domain_error("color out of range");
        if (!used.insert(c).second)
            throw domain_error("repeated color " + std::to_string(c));
    }
    FactorComplement out;
    out.factors.push_back("A");
    for (int i = 1; i <= amb.n; ++i)
        if (!used.count(i)) out.factors.push_back("X" + std::to_string(i));
    return out;
}

bool is_simplex_In(const std::vector<ColoredVertexData>& vertices) {
    std::set<int> colors;
    for (const auto& v : vertices)
        if (!colors.insert(v.color).second) return false;
    return true;
}

ColoredVertexData standard_inclusion(const ColoredAmbient& amb, int j) {
    if (j < 1 || j > amb.n) throw domain_error("copy index out of range");
    ColoredVertexData v;
    for (const auto& g : amb.x_gen_labels)
        v.images.push_back(Word::generator(amb.ambient, amb.copy_label(j, g)));
    v.color = j;
    return v;
}

ColoredVertexData apply_to_vertex(const ColoredAmbient& amb,
                                  const AutGenerator& g,
                                  const ColoredVertexData& v) {
    ColoredVertexData out;
    for (const Word& w : v.images) out.images.push_back(apply_generator(g, w));
    out.color = color_of(amb, out.images);
    return out;
}

namespace {

bool twists_within(const ColoredAmbient& amb, const ColoredVertexData& v,
                   int bound) {
    for (const Word& w : v.images)
        for (const Letter& l : w.letters())
            if (amb.is_central(l.vertex) &&
                (l.exp > bound || l.exp < -bound))
                return false;
    return true;
}

} // namespace

InSample build_In_sample(const Raag& A, const Raag& X, int n,
                         int vertices_per_color, int twist_bound,
                         int aut_word_length, std::uint64_t seed) {
    if (vertices_per_color < 1 || twist_bound < 0 || aut_word_length < 0)
        throw domain_error("build_In_sample: bad caps");
    InSample s;
    s.amb = make_colored_ambient(A, X, n);
    const auto gens =
        enumerate_generators(*s.amb.ambient, s.amb.ambient->graph().size());

    std::vector<std::vector<ColoredVertexData>> bucket(n + 1);
    std::set<std::string> seen;
    auto offer = [&](const ColoredVertexData& v) {
        if (static_cast<int>(bucket[v.color].size()) >= vertices_per_color)
            return;
        if (!twists_within(s.amb, v, twist_bound)) return;
        if (!seen.insert(v.key()).second) return;
        bucket[v.color].push_back(v);
    };
    for (int j = 1; j <= n; ++j) offer(standard_inclusion(s.amb, j));

    std::mt19937_64 rng(seed);
    auto full = [&] {
        for (int j = 1; j <= n; ++j)
            if (static_cast<int>(bucket[j].size()) < vertices_per_color)
                return false;
        return true;
    };
    std::size_t attempts = 0;
    const std::size_t max_attempts =
        20000 * static_cast<std::size_t>(n) *
        static_cast<std::size_t>(vertices_per_color);
    while (!full()) {
        if (++attempts > max_attempts)
            throw resource_error("build_In_sample: sampling did not fill all "
                                 "color fibers within the attempt budget");
        int j = 1 + static_cast<int>(rng() % n);
        ColoredVertexData v = standard_inclusion(s.amb, j);
        int len = aut_word_length == 0
                      ? 0
                      : 1 + static_cast<int>(rng() % aut_word_length);
        for (int t = 0; t < len; ++t)
            v = apply_to_vertex(s.amb, gens[rng() % gens.size()], v);
        offer(v);
    }

    std::vector<std::string> vlabels;
    for (int j = 1; j <= n; ++j)
        for (const auto& v : bucket[j]) {
            vlabels.push_back("v" + std::to_string(s.vertices.size()));
            s.vertices.push_back(v);
        }
    s.complex = SimplicialComplex(vlabels);
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
        s.projection[vlabels[i]] =
            "c" + std::to_string(s.vertices[i].color);

    // maximal faces: one vertex from every color fiber
    std::vector<int> offset(n + 2, 0);
    for (int j = 1; j <= n; ++j)
        offset[j + 1] = offset[j] + static_cast<int>(bucket[j].size());
    std::vector<int> pick(n, 0);
    for (;;) {
        std::vector<int> face;
        for (int j = 1; j <= n; ++j) face.push_back(offset[j] + pick[j - 1]);
        s.complex.add_face(std::move(face));
        int j = 0;
        while (j < n) {
            if (++pick[j] < static_cast<int>(bucket[j + 1].size())) break;
            pick[j] = 0;
            ++j;
        }
        if (j == n) break;
    }

    std::vector<std::string> dlabels;
    for (int j = 1; j <= n; ++j) dlabels.push_back("c" + std::to_string(j));
    s.delta = SimplicialComplex(dlabels);
    std::vector<int> top;
    for (int j = 0; j < n; ++j) top.push_back(j);
    s.delta.add_face(std::move(top));
    return s;
}

} // namespace raaglab
