#include "raaglab/unimodular.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace raaglab {

std::string vector_label(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

namespace {

bool is_primitive(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g == 1;
}

bool partial_basis_quick(const std::vector<std::vector<Int>>& vs) {
    const std::size_t n = vs.empty() ? 0 : vs[0].size();
    if (vs.size() > n) return false;
    IntMatrix m = IntMatrix::from_rows(vs);
    if (vs.size() == n) {
        Int d = determinant(m);
        return d == 1 || d == -1;
    }
    return is_partial_basis(m);
}

std::string face_label(const VectorComplex& vc, const std::vector<int>& face) {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < face.size(); ++i)
        os << (i ? " " : "") << vector_label(vc.vectors[face[i]]);
    os << ">";
    return os.str();
}

} // namespace

VectorComplex build_unimodular_complex(int n, int q, int max_dim) {
    if (n < 1 || q < 0) throw domain_error("build_unimodular_complex: bad n or q");
    if (n > 5 || q > 8)
        throw resource_error("build_unimodular_complex: caps are n <= 5, q <= 8");
    VectorComplex vc;
    // enumerate primitive vectors in [-q, q]^n, lexicographic order
    std::vector<Int> cur(n, -q);
    for (;;) {
        if (is_primitive(cur)) vc.vectors.push_back(cur);
        int i = n - 1;
        while (i >= 0) {
            if (++cur[i] <= q) break;
            cur[i] = -q;
            --i;
        }
        if (i < 0) break;
    }
    std::vector<std::string> labels;
    for (const auto& v : vc.vectors) labels.push_back(vector_label(v));
    vc.complex = SimplicialComplex(labels);

    const int top = max_dim < 0 ? n - 1 : std::min(max_dim, n - 1);
    std::vector<std::vector<int>> level;
    for (int i = 0; i < static_cast<int>(vc.vectors.size()); ++i) {
        vc.complex.add_face({i});
        level.push_back({i});
    }
    for (int p = 1; p <= top; ++p) {
        std::vector<std::vector<int>> next;
        for (const auto& face : level) {
            std::vector<std::vector<Int>> vs;
            for (int i : face) vs.push_back(vc.vectors[i]);
            vs.emplace_back();
            for (int j = face.back() + 1;
                 j < static_cast<int>(vc.vectors.size()); ++j) {
                vs.back() = vc.vectors[j];
                if (!partial_basis_quick(vs)) continue;
                std::vector<int> f = face;
                f.push_back(j);
                vc.complex.add_face(f);
                next.push_back(std::move(f));
            }
        }
        level = std::move(next);
    }
    return vc;
}

VectorComplex maazen_filtration(const VectorComplex& base, int q) {
    std::set<int> keep;
    for (int i = 0; i < static_cast<int>(base.vectors.size()); ++i) {
        const Int& last = base.vectors[i].back();
        if (last <= q && last >= -q) keep.insert(i);
    }
    VectorComplex out;
    out.complex = base.complex.full_subcomplex(keep);
    out.vectors = base.vectors;
    return out;
}

Int kappa(const Int& z, int q) {
    if (q < 0) throw domain_error("kappa: q must be >= 0");
    Int a = z < 0 ? Int(-z) : z;
    if (a < q + 1) return 0;
    Int k = a / (q + 1);
    return z < 0 ? Int(-k) : k;
}

RetractionResult maazen_retraction(const VectorComplex& link,
                                   const std::vector<Int>& v1, int q) {
    RetractionResult res;
    const std::size_t n = v1.size();
    const Int last = v1.back();
    if (last != q + 1 && last != -(q + 1))
        throw domain_error("maazen_retraction: need |(v1)_n| = q+1");
    const Int eps1 = last > 0 ? 1 : -1;
    for (const auto& w : link.vectors) {
        if (w.size() != n)
            throw domain_error("maazen_retraction: dimension mismatch");
        std::vector<Int> img(n);
        Int k = kappa(w.back(), q);
        for (std::size_t c = 0; c < n; ++c) img[c] = w[c] - eps1 * k * v1[c];
        res.images.push_back(std::move(img));
    }
    auto fail = [&](std::string why) {
        res.pass = false;
        res.witness = std::move(why);
        return res;
    };
    for (const auto& f : link.complex.faces_of_dim(0)) {
        const auto& w = link.vectors[f[0]];
        const auto& img = res.images[f[0]];
        if (img.back() > q || img.back() < -q)
            return fail("image " + vector_label(img) + " of " + vector_label(w) +
                        " leaves O_q");
        if (w.back() <= q && w.back() >= -q && img != w)
            return fail("vertex " + vector_label(w) + " in O_q moved");
        // idempotence: a second application must do nothing
        if (kappa(img.back(), q) != 0)
            return fail("retraction not idempotent at " + vector_label(w));
    }
    for (const auto& face : link.complex.all_faces()) {
        std::vector<std::vector<Int>> pre, post;
        for (int i : face) {
            pre.push_back(link.vectors[i]);
            post.push_back(res.images[i]);
        }
        pre.push_back(v1);
        if (!partial_basis_quick(pre))
            return fail("precondition: face " + face_label(link, face) +
                        " with v1 is not a partial basis");
        std::vector<std::vector<Int>> sorted = post;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return fail("image of face " + face_label(link, face) +
                        " collapses vertices");
        post.push_back(v1);
        if (!partial_basis_quick(post))
            return fail("image of face " + face_label(link, face) +
                        " is not a simplex of the link");
    }
    res.pass = true;
    return res;
}

bool in_complement(const SIVertex& f, const ZComplement& K) {
    const std::size_t n = f.v.size();
    if (K.lattice.ambient != n || K.twist.cols() != n ||
        f.theta.size() != K.twist.rows())
        throw domain_error("in_complement: shape mismatch");
    std::vector<Int> diff = f.v;
    for (std::size_t k = 0; k < K.twist.rows(); ++k)
        for (std::size_t c = 0; c < n; ++c)
            diff[c] -= f.theta[k] * K.twist.at(k, c);
    return lattice_contains(K.lattice, diff);
}

bool is_simplex_In_Z(const std::vector<SIVertex>& vertices) {
    if (vertices.empty()) return false;
    std::vector<std::vector<Int>> vs;
    for (const auto& f : vertices) vs.push_back(f.v);
    std::vector<std::vector<Int>> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    return partial_basis_quick(vs);
}

namespace {

// coordinates of w in the unimodular frame [T basis rows; f]
std::vector<Int> frame_coords(const SIVertex& f, const std::vector<Int>& w) {
    const std::size_t n = f.v.size();
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < f.K.lattice.rank(); ++i)
        rows.push_back(f.K.lattice.basis.row(i));
    rows.push_back(f.v);
    IntMatrix frame = IntMatrix::from_rows(rows);
    if (frame.rows() != n)
        throw domain_error("complement lattice rank is not n-1");
    Int d = determinant(frame);
    if (d != 1 && d != -1)
        throw domain_error(
            "complement and image do not span Z^n (frame not unimodular)");
    auto coords = solve_rows(frame, w);
    if (!coords) throw internal_error("unimodular frame failed to solve");
    return *coords;
}

} // namespace

IntersectionCertificate
complement_intersection(const std::vector<SIVertex>& vertices, const Raag& A,
                        int n) {
    if (vertices.empty()) throw domain_error("empty simplex");
    if (static_cast<int>(vertices.size()) > n)
        throw domain_error("more vertices than ambient rank");
    const std::size_t r = A.graph().size();
    const std::size_t p = vertices.size() - 1;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto& f = vertices[i];
        if (f.v.size() != static_cast<std::size_t>(n) ||
            f.K.lattice.ambient != static_cast<std::size_t>(n) ||
            f.K.twist.rows() != r ||
            f.K.twist.cols() != static_cast<std::size_t>(n))
            throw domain_error("vertex " + std::to_string(i) +
                               ": shape mismatch");
        if (!is_primitive(f.v))
            throw domain_error("vertex " + std::to_string(i) +
                               ": f not primitive");
    }
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            if (i == j) continue;
            if (!in_complement(vertices[i], vertices[j].K))
                throw domain_error("not an SI-simplex: f_" + std::to_string(i) +
                                   " is not in K_" + std::to_string(j));
        }
    IntersectionCertificate cert;
    // m_{i,k} = f_i-coefficient of the twist row w^{(i)}_k in [T_i; f_i]
    cert.m.resize(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t k = 0; k < r; ++k) {
            auto coords = frame_coords(vertices[i], vertices[i].K.twist.row(k));
            cert.m[i].push_back(coords.back());
        }
    cert.combined_twist = IntMatrix(r, n);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (int c = 0; c < n; ++c)
                cert.combined_twist.at(k, c) += cert.m[i][k] * vertices[i].v[c];
    cert.lattice = vertices[0].K.lattice;
    for (std::size_t i = 1; i < vertices.size(); ++i)
        cert.lattice = intersect_lattices(cert.lattice, vertices[i].K.lattice);
    cert.rank_m = cert.lattice.rank();
    // consistency: combined twist rows agree with each K_j modulo T_j
    for (std::size_t j = 0; j < vertices.size(); ++j)
        for (std::size_t k = 0; k < r; ++k) {
            std::vector<Int> diff(n);
            for (int c = 0; c < n; ++c)
                diff[c] = cert.combined_twist.at(k, c) -
                          vertices[j].K.twist.at(k, c);
            if (!lattice_contains(vertices[j].K.lattice, diff)) {
                cert.witness = "combined generator a_" + std::to_string(k) +
                               " fails membership in K_" + std::to_string(j);
                return cert;
            }
        }
    if (cert.rank_m != static_cast<std::size_t>(n) - p - 1) {
        cert.witness = "lattice intersection has rank " +
                       std::to_string(cert.rank_m) + ", expected " +
                       std::to_string(n - p - 1);
        return cert;
    }
    cert.pass = true;
    return cert;
}

SnVerdict verify_Sn_equals_SIn(const std::vector<SIVertex>& vertices,
                               const Raag& A, int n) {
    SnVerdict v;
    IntersectionCertificate cert = complement_intersection(vertices, A, n);
    if (!cert.pass) {
        v.witness = "intersection certificate failed: " + cert.witness;
        return v;
    }
    const std::size_t r = A.graph().size();
    for (std::size_t j = 0; j < vertices.size(); ++j) {
        Lattice rhs = cert.lattice;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (i == j) continue;
            rhs = lattice_sum(rhs, lattice_from_rows(n, {vertices[i].v}));
        }
        if (!(rhs == vertices[j].K.lattice)) {
            v.witness = "lattice parts differ at j = " + std::to_string(j);
            return v;
        }
        for (std::size_t k = 0; k < r; ++k) {
            std::vector<Int> diff(n);
            for (int c = 0; c < n; ++c)
                diff[c] = vertices[j].K.twist.at(k, c) -
                          cert.combined_twist.at(k, c);
            if (!lattice_contains(rhs, diff)) {
                v.witness = "generator a_" + std::to_string(k) + " of K_" +
                            std::to_string(j) +
                            " is not in K x prod f_i(Z)";
                return v;
            }
        }
    }
    v.pass = true;
    return v;
}

IntMatrix random_unimodular(int n, std::uint64_t seed, int length, int bound) {
    std::mt19937_64 rng(seed);
    IntMatrix u = IntMatrix::identity(n);
    if (n == 1) {
        if (rng() % 2) u.at(0, 0) = -1;
        return u;
    }
    for (int t = 0; t < length; ++t) {
        switch (rng() % 3) {
            case 0: {  // row j += c * row i
                int i = static_cast<int>(rng() % n);
                int j = static_cast<int>(rng() % (n - 1));
                if (j >= i) ++j;
                long long c = 1 + static_cast<long long>(rng() % bound);
                if (rng() % 2) c = -c;
                for (int col = 0; col < n; ++col)
                    u.at(j, col) += c * u.at(i, col);
                break;
            }
            case 1: {  // swap two rows
                int i = static_cast<int>(rng() % n);
                int j = static_cast<int>(rng() % (n - 1));
                if (j >= i) ++j;
                for (int col = 0; col < n; ++col)
                    std::swap(u.at(i, col), u.at(j, col));
                break;
            }
            default: {  // negate a row
                int i = static_cast<int>(rng() % n);
                for (int col = 0; col < n; ++col) u.at(i, col) = -u.at(i, col);
                break;
            }
        }
    }
    return u;
}

std::vector<SIVertex> sample_SI_simplex(const Raag& A, int n, int p,
                                        std::uint64_t seed, int twist_bound) {
    if (p < 0 || p >= n)
        throw domain_error("sample_SI_simplex: need 0 <= p < n");
    IntMatrix u = random_unimodular(n, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    const std::size_t r = A.graph().size();
    std::vector<SIVertex> out;
    for (int i = 0; i <= p; ++i) {
        SIVertex f;
        f.v = u.row(n - 1 - p + i);
        f.theta.assign(r, 0);
        std::vector<std::vector<Int>> trows;
        for (int row = 0; row < n; ++row)
            if (row != n - 1 - p + i) trows.push_back(u.row(row));
        f.K.lattice = lattice_from_rows(n, trows);
        f.K.twist = IntMatrix(r, n);
        // any twist gives a valid complement (central transvections)
        if (twist_bound > 0)
            for (std::size_t k = 0; k < r; ++k)
                for (int c = 0; c < n; ++c)
                    f.K.twist.at(k, c) =
                        static_cast<long long>(rng() % (2 * twist_bound + 1)) -
                        twist_bound;
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace raaglab
