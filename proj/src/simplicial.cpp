#include "raaglab/simplicial.hpp"

#include <algorithm>
#include <sstream>

namespace raaglab {

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_labels)
    : labels_(std::move(vertex_labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (index_.count(labels_[i]))
            throw domain_error("duplicate complex vertex: " + labels_[i]);
        index_[labels_[i]] = static_cast<int>(i);
    }
}

SimplicialComplex SimplicialComplex::from_maximal(
    std::vector<std::string> vertex_labels,
    const std::vector<std::vector<std::string>>& maximal_faces) {
    SimplicialComplex c(std::move(vertex_labels));
    for (const auto& f : maximal_faces) c.add_face_labels(f);
    return c;
}

std::size_t SimplicialComplex::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw domain_error("unknown complex vertex: " + label);
    return static_cast<std::size_t>(it->second);
}

void SimplicialComplex::add_face(std::vector<int> face) {
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    for (int v : face)
        if (v < 0 || v >= static_cast<int>(labels_.size()))
            throw domain_error("face vertex out of range");
    if (face.empty()) return;
    // insert all nonempty subsets
    const std::size_t k = face.size();
    for (std::size_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i)) sub.push_back(face[i]);
        faces_.insert(std::move(sub));
    }
}

void SimplicialComplex::add_face_labels(const std::vector<std::string>& face) {
    std::vector<int> f;
    for (const auto& l : face) f.push_back(static_cast<int>(index_of(l)));
    add_face(std::move(f));
}

bool SimplicialComplex::has_face(std::vector<int> face) const {
    std::sort(face.begin(), face.end());
    if (face.empty()) return true;
    return faces_.count(face) > 0;
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : faces_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::vector<std::vector<int>> SimplicialComplex::faces_of_dim(int p) const {
    std::vector<std::vector<int>> out;
    if (p < 0) return out;
    for (const auto& f : faces_)
        if (static_cast<int>(f.size()) == p + 1) out.push_back(f);
    return out;
}

SimplicialComplex SimplicialComplex::link_of(const std::vector<int>& sigma) const {
    std::vector<int> s = sigma;
    std::sort(s.begin(), s.end());
    if (!s.empty() && !faces_.count(s))
        throw domain_error("link_of: sigma is not a face");
    SimplicialComplex out(labels_);
    for (const auto& f : faces_) {
        std::vector<int> inter;
        std::set_intersection(f.begin(), f.end(), s.begin(), s.end(),
                              std::back_inserter(inter));
        if (!inter.empty()) continue;
        std::vector<int> uni;
        std::set_union(f.begin(), f.end(), s.begin(), s.end(),
                       std::back_inserter(uni));
        if (s.empty() || faces_.count(uni)) out.faces_.insert(f);
    }
    return out;
}

SimplicialComplex SimplicialComplex::full_subcomplex(const std::set<int>& verts) const {
    SimplicialComplex out(labels_);
    for (const auto& f : faces_) {
        bool inside = true;
        for (int v : f)
            if (!verts.count(v)) {
                inside = false;
                break;
            }
        if (inside) out.faces_.insert(f);
    }
    return out;
}

SimplicialComplex SimplicialComplex::cone(const std::string& apex_label) const {
    std::vector<std::string> ls = labels_;
    ls.push_back(apex_label);
    SimplicialComplex out(ls);
    int apex = static_cast<int>(ls.size()) - 1;
    out.add_face({apex});
    for (const auto& f : faces_) {
        out.faces_.insert(f);
        std::vector<int> g = f;
        g.push_back(apex);
        out.faces_.insert(g);
    }
    return out;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = -1;  // empty face
    for (const auto& f : faces_) chi += (f.size() % 2 == 1) ? 1 : -1;
    return chi;
}

// ---------------------------------------------------------------------------
// homology

namespace {

struct Sparse {
    std::size_t nrows = 0, ncols = 0;
    std::vector<std::map<std::size_t, Int>> rows;
    std::vector<std::set<std::size_t>> colrows;

    void init(std::size_t r, std::size_t c) {
        nrows = r;
        ncols = c;
        rows.assign(r, {});
        colrows.assign(c, {});
    }
    void set(std::size_t r, std::size_t c, Int v) {
        if (v == 0) return;
        rows[r][c] = std::move(v);
        colrows[c].insert(r);
    }
};

// Rank and Smith divisors via unit-pivot sparse elimination with a dense SNF
// on whatever cannot be cleared with +-1 pivots.
std::pair<std::size_t, std::vector<Int>> rank_and_divisors(Sparse m) {
    std::size_t rank = 0;
    std::vector<bool> row_done(m.nrows, false), col_done(m.ncols, false);
    for (;;) {
        // Markowitz: unit pivot minimizing fill estimate
        std::size_t best_r = 0, best_c = 0;
        long long best_score = -1;
        for (std::size_t r = 0; r < m.nrows; ++r) {
            if (row_done[r]) continue;
            for (const auto& [c, v] : m.rows[r]) {
                if (v != 1 && v != -1) continue;
                long long score =
                    (static_cast<long long>(m.rows[r].size()) - 1) *
                    (static_cast<long long>(m.colrows[c].size()) - 1);
                if (best_score < 0 || score < best_score) {
                    best_score = score;
                    best_r = r;
                    best_c = c;
                }
                if (best_score == 0) break;
            }
            if (best_score == 0) break;
        }
        if (best_score < 0) break;
        const Int pivot = m.rows[best_r][best_c];  // +-1
        auto pivot_row = m.rows[best_r];
        std::vector<std::size_t> targets(m.colrows[best_c].begin(),
                                         m.colrows[best_c].end());
        for (std::size_t r : targets) {
            if (r == best_r) continue;
            Int factor = m.rows[r][best_c] * pivot;  // entry / pivot
            for (const auto& [c, v] : pivot_row) {
                auto it = m.rows[r].find(c);
                Int nv = (it == m.rows[r].end() ? Int(0) : it->second) - factor * v;
                if (nv == 0) {
                    if (it != m.rows[r].end()) {
                        m.rows[r].erase(it);
                        m.colrows[c].erase(r);
                    }
                } else {
                    m.rows[r][c] = std::move(nv);
                    m.colrows[c].insert(r);
                }
            }
        }
        // retire pivot row and column
        for (const auto& [c, v] : pivot_row) m.colrows[c].erase(best_r);
        m.rows[best_r].clear();
        row_done[best_r] = true;
        col_done[best_c] = true;
        ++rank;
    }
    // densify the leftover and finish with SNF
    std::vector<std::size_t> rs, cs;
    for (std::size_t r = 0; r < m.nrows; ++r)
        if (!row_done[r] && !m.rows[r].empty()) rs.push_back(r);
    std::set<std::size_t> livecols;
    for (std::size_t r : rs)
        for (const auto& [c, v] : m.rows[r]) livecols.insert(c);
    cs.assign(livecols.begin(), livecols.end());
    std::vector<Int> divisors(rank, 1);
    if (!rs.empty()) {
        IntMatrix d(rs.size(), cs.size());
        std::map<std::size_t, std::size_t> cidx;
        for (std::size_t i = 0; i < cs.size(); ++i) cidx[cs[i]] = i;
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (const auto& [c, v] : m.rows[rs[i]]) d.at(i, cidx[c]) = v;
        for (const Int& dv : smith_divisors(d))
            if (dv != 0) {
                divisors.push_back(dv);
                ++rank;
            }
    }
    return {rank, divisors};
}

Sparse boundary_matrix(const SimplicialComplex& c, int p,
                       const std::map<std::vector<int>, std::size_t>& rows_idx,
                       const std::vector<std::vector<int>>& cols) {
    Sparse m;
    if (p == 0) {
        // augmentation: single row of ones
        m.init(1, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) m.set(0, j, 1);
        return m;
    }
    m.init(rows_idx.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& f = cols[j];
        int sign = 1;
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::vector<int> sub;
            for (std::size_t k = 0; k < f.size(); ++k)
                if (k != i) sub.push_back(f[k]);
            m.set(rows_idx.at(sub), j, sign);
            sign = -sign;
        }
    }
    return m;
}

} // namespace

bool HomologyReport::trivial_through(int k) const {
    if (empty_complex) return false;
    for (int i = 0; i <= k && i < static_cast<int>(betti.size()); ++i)
        if (betti[i] != 0 || !torsion[i].empty()) return false;
    return true;
}

std::string HomologyReport::summary() const {
    if (empty_complex) return "empty complex";
    std::ostringstream os;
    for (std::size_t i = 0; i < betti.size(); ++i) {
        os << "H~" << i << " = Z^" << betti[i];
        for (const Int& t : torsion[i]) os << " + Z/" << t;
        if (i + 1 < betti.size()) os << "; ";
    }
    return os.str();
}

HomologyReport homology(const SimplicialComplex& c, int max_dim) {
    HomologyReport rep;
    if (c.is_empty()) {
        rep.empty_complex = true;
        return rep;
    }
    rep.max_dim = max_dim;
    // faces and index maps per dimension, 0..max_dim+1
    std::vector<std::vector<std::vector<int>>> faces(max_dim + 2);
    std::vector<std::map<std::vector<int>, std::size_t>> idx(max_dim + 2);
    for (int p = 0; p <= max_dim + 1; ++p) {
        faces[p] = c.faces_of_dim(p);
        for (std::size_t i = 0; i < faces[p].size(); ++i) idx[p][faces[p][i]] = i;
    }
    std::vector<std::size_t> ranks(max_dim + 2, 0);
    std::vector<std::vector<Int>> divisors(max_dim + 2);
    for (int p = 0; p <= max_dim + 1; ++p) {
        if (faces[p].empty()) continue;
        Sparse b = boundary_matrix(c, p, p > 0 ? idx[p - 1] : idx[0], faces[p]);
        auto [rk, dv] = rank_and_divisors(std::move(b));
        ranks[p] = rk;
        divisors[p] = dv;
    }
    rep.betti.resize(max_dim + 1);
    rep.torsion.resize(max_dim + 1);
    for (int p = 0; p <= max_dim; ++p) {
        long long np = static_cast<long long>(faces[p].size());
        rep.betti[p] = np - static_cast<long long>(ranks[p]) -
                       static_cast<long long>(ranks[p + 1]);
        for (const Int& d : divisors[p + 1])
            if (d > 1) rep.torsion[p].push_back(d);
    }
    return rep;
}

ConnectivityVerdict homological_connectivity(const SimplicialComplex& c, int k) {
    ConnectivityVerdict v;
    if (c.is_empty()) {
        v.empty_complex = true;
        v.pass = false;
        v.first_failing_dim = -1;
        v.detail = "empty complex is not (-1)-connected";
        return v;
    }
    if (k < 0) {
        v.pass = true;
        v.detail = "nonempty";
        return v;
    }
    HomologyReport rep = homology(c, k);
    for (int i = 0; i <= k; ++i) {
        if (rep.betti[i] != 0 || !rep.torsion[i].empty()) {
            v.pass = false;
            v.first_failing_dim = i;
            std::ostringstream os;
            os << "reduced homology nonzero in degree " << i << ": "
               << rep.summary();
            v.detail = os.str();
            return v;
        }
    }
    v.pass = true;
    v.detail = "homologically " + std::to_string(k) + "-connected";
    return v;
}

CmCertificate is_cohen_macaulay(const SimplicialComplex& c, int n) {
    CmCertificate cert;
    if (c.dimension() != n) {
        cert.pass = false;
        cert.reason = "dimension is " + std::to_string(c.dimension()) +
                      ", expected " + std::to_string(n);
        return cert;
    }
    cert.pass = true;
    auto record = [&](const std::vector<int>& sigma, const SimplicialComplex& l,
                      int req) {
        CmLinkEntry e;
        e.simplex = sigma;
        e.required_connectivity = req;
        if (req <= -2) {
            e.pass = true;
            e.detail = "no condition";
        } else {
            auto v = homological_connectivity(l, req);
            e.pass = v.pass;
            e.detail = v.detail;
        }
        if (!e.pass) {
            cert.pass = false;
            if (cert.reason.empty()) cert.reason = "a link fails its connectivity bound";
        }
        cert.links.push_back(std::move(e));
    };
    record({}, c, n - 1);
    for (int p = 0; p <= c.dimension(); ++p)
        for (const auto& sigma : c.faces_of_dim(p))
            record(sigma, c.link_of(sigma), n - p - 2);
    return cert;
}

namespace {

std::string face_str(const SimplicialComplex& c, const std::vector<int>& f) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < f.size(); ++i)
        os << (i ? "," : "") << c.vertex_labels()[f[i]];
    os << "}";
    return os.str();
}

} // namespace

JoinVerdict verify_complete_join(const SimplicialComplex& y,
                                 const SimplicialComplex& x,
                                 const std::map<std::string, std::string>& proj) {
    JoinVerdict v;
    // vertex map in index form
    std::map<int, int> pmap;
    for (const auto& f : y.faces_of_dim(0)) {
        const std::string& yl = y.vertex_labels()[f[0]];
        auto it = proj.find(yl);
        if (it == proj.end()) {
            v.failed_condition = 1;
            v.witness = "no projection for vertex " + yl;
            return v;
        }
        pmap[f[0]] = static_cast<int>(x.index_of(it->second));
    }
    // simplicial and injective on simplices
    for (const auto& f : y.all_faces()) {
        std::vector<int> img;
        std::set<int> seen;
        for (int u : f) {
            int t = pmap.at(u);
            if (!seen.insert(t).second) {
                v.failed_condition = 3;
                v.witness = "projection not injective on " + face_str(y, f);
                return v;
            }
            img.push_back(t);
        }
        if (!x.has_face(img)) {
            v.failed_condition = 1;
            v.witness = "image of " + face_str(y, f) + " is not a simplex of the base";
            return v;
        }
    }
    // fibers over base vertices
    std::map<int, std::vector<int>> fiber;
    for (const auto& [u, t] : pmap) fiber[t].push_back(u);
    for (const auto& f : x.faces_of_dim(0))
        if (fiber[f[0]].empty()) {
            v.failed_condition = 2;
            v.witness = "empty fiber over " + face_str(x, f);
            return v;
        }
    // completeness: every cross-fiber choice over every base simplex is a face
    for (const auto& sigma : x.all_faces()) {
        std::vector<std::size_t> pick(sigma.size(), 0);
        for (;;) {
            std::vector<int> choice;
            for (std::size_t i = 0; i < sigma.size(); ++i)
                choice.push_back(fiber[sigma[i]][pick[i]]);
            if (!y.has_face(choice)) {
                v.failed_condition = 4;
                v.witness = "fiber choice " + face_str(y, choice) +
                            " over " + face_str(x, sigma) + " is not a simplex";
                return v;
            }
            std::size_t i = 0;
            while (i < pick.size()) {
                if (++pick[i] < fiber[sigma[i]].size()) break;
                pick[i] = 0;
                ++i;
            }
            if (i == pick.size()) break;
        }
    }
    v.pass = true;
    return v;
}

SimplicialComplex build_from_labeling(const SimplicialComplex& x,
                                      const LabelingSystem& ls) {
    // validate: sets nonempty, present for every incidence, monotone
    auto get = [&](int vtx, const std::vector<int>& face)
        -> const std::set<std::string>& {
        auto it = ls.labels.find({vtx, face});
        if (it == ls.labels.end())
            throw domain_error("labeling system missing entry for vertex " +
                               x.vertex_labels()[vtx] + " in " + face_str(x, face));
        if (it->second.empty())
            throw domain_error("empty label set at vertex " +
                               x.vertex_labels()[vtx] + " in " + face_str(x, face));
        return it->second;
    };
    for (const auto& sigma : x.all_faces()) {
        for (int vtx : sigma) {
            const auto& lsigma = get(vtx, sigma);
            // every subface containing vtx must have a superset of labels
            const std::size_t k = sigma.size();
            for (std::size_t mask = 1; mask < (1u << k); ++mask) {
                std::vector<int> tau;
                for (std::size_t i = 0; i < k; ++i)
                    if (mask & (1u << i)) tau.push_back(sigma[i]);
                if (!std::binary_search(tau.begin(), tau.end(), vtx)) continue;
                const auto& ltau = get(vtx, tau);
                if (!std::includes(ltau.begin(), ltau.end(), lsigma.begin(),
                                   lsigma.end()))
                    throw domain_error(
                        "labeling not monotone at vertex " + x.vertex_labels()[vtx] +
                        ": labels shrink from " + face_str(x, tau) + " to " +
                        face_str(x, sigma));
            }
        }
    }
    // vertices (x, l)
    std::vector<std::string> verts;
    std::map<std::pair<int, std::string>, int> vidx;
    for (const auto& f : x.faces_of_dim(0))
        for (const auto& l : get(f[0], f)) {
            vidx[{f[0], l}] = static_cast<int>(verts.size());
            verts.push_back(x.vertex_labels()[f[0]] + "|" + l);
        }
    SimplicialComplex out(verts);
    for (const auto& sigma : x.all_faces()) {
        std::vector<std::vector<std::string>> options;
        for (int vtx : sigma) {
            const auto& s = get(vtx, sigma);
            options.emplace_back(s.begin(), s.end());
        }
        std::vector<std::size_t> pick(sigma.size(), 0);
        for (;;) {
            std::vector<int> face;
            for (std::size_t i = 0; i < sigma.size(); ++i)
                face.push_back(vidx.at({sigma[i], options[i][pick[i]]}));
            out.add_face(std::move(face));
            std::size_t i = 0;
            while (i < pick.size()) {
                if (++pick[i] < options[i].size()) break;
                pick[i] = 0;
                ++i;
            }
            if (i == pick.size()) break;
        }
    }
    return out;
}

void SemiSimplicialSet::set_levels(std::vector<std::vector<std::string>> levels) {
    levels_ = std::move(levels);
    face_.assign(levels_.size(), {});
    for (std::size_t p = 0; p < levels_.size(); ++p)
        face_[p].assign(p + 1, {});
}

void SemiSimplicialSet::set_face(int p, int i, std::vector<int> table) {
    if (p <= 0 || p > top_dim() || i < 0 || i > p)
        throw domain_error("set_face: bad indices");
    if (table.size() != levels_[p].size())
        throw domain_error("set_face: table size mismatch");
    face_[p][i] = std::move(table);
}

std::size_t SemiSimplicialSet::size(int p) const {
    if (p < 0 || p > top_dim()) return 0;
    return levels_[p].size();
}

int SemiSimplicialSet::face(int p, int i, int s) const {
    return face_.at(p).at(i).at(s);
}

std::optional<std::string> SemiSimplicialSet::check_identities() const {
    for (int p = 2; p <= top_dim(); ++p)
        for (int j = 1; j <= p; ++j)
            for (int i = 0; i < j; ++i)
                for (std::size_t s = 0; s < levels_[p].size(); ++s) {
                    int a = face(p - 1, i, face(p, j, static_cast<int>(s)));
                    int b = face(p - 1, j - 1, face(p, i, static_cast<int>(s)));
                    if (a != b) {
                        std::ostringstream os;
                        os << "d_" << i << " d_" << j << " != d_" << j - 1
                           << " d_" << i << " on " << levels_[p][s];
                        return os.str();
                    }
                }
    return std::nullopt;
}

} // namespace raaglab
