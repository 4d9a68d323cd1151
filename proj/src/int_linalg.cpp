#include "raaglab/int_linalg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace raaglab {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return IntMatrix(0, 0);
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size())
            throw domain_error("from_rows: ragged rows");
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

std::vector<Int> IntMatrix::row(std::size_t r) const {
    std::vector<Int> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw domain_error("matrix product: shape mismatch");
    IntMatrix m(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) m.at(r, c) += a * o.at(k, c);
        }
    return m;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? " " : "") << at(r, c);
        os << "]";
    }
    return os.str();
}

namespace {

// floor division, divisor > 0
Int fdiv(const Int& a, const Int& b) {
    Int q = a / b;
    if (a - q * b < 0) q -= 1;
    return q;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

// row a -= q * row b
void row_axpy(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(a, c) -= q * m.at(b, c);
}

void col_axpy(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, a) -= q * m.at(r, b);
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = -m.at(r, c);
}

SmithResult smith_impl(const IntMatrix& input, bool with_transforms) {
    SmithResult res;
    IntMatrix a = input;
    const std::size_t r = a.rows(), c = a.cols();
    if (with_transforms) {
        res.left = IntMatrix::identity(r);
        res.right = IntMatrix::identity(c);
    }
    const std::size_t steps = std::min(r, c);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // minimal-absolute-value pivot in the trailing submatrix
            std::size_t pi = t, pj = t;
            Int best = 0;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j) {
                    const Int& v = a.at(i, j);
                    if (v == 0) continue;
                    if (best == 0 || abs(v) < best) {
                        best = abs(v);
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) goto done;
            swap_rows(a, t, pi);
            swap_cols(a, t, pj);
            if (with_transforms) {
                swap_rows(res.left, t, pi);
                swap_cols(res.right, t, pj);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                Int q = a.at(i, t) / a.at(t, t);
                row_axpy(a, i, t, q);
                if (with_transforms) row_axpy(res.left, i, t, q);
                if (a.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                Int q = a.at(t, j) / a.at(t, t);
                col_axpy(a, j, t, q);
                if (with_transforms) col_axpy(res.right, j, t, q);
                if (a.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // enforce the divisibility chain
            bool divides = true;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        row_axpy(a, t, i, Int(-1));
                        if (with_transforms) row_axpy(res.left, t, i, Int(-1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a.at(t, t) < 0) {
            negate_row(a, t);
            if (with_transforms) negate_row(res.left, t);
        }
    }
done:
    res.divisors.resize(steps);
    for (std::size_t t = 0; t < steps; ++t) res.divisors[t] = a.at(t, t);
    return res;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& m) { return smith_impl(m, true); }

std::vector<Int> smith_divisors(const IntMatrix& m) {
    return smith_impl(m, false).divisors;
}

std::pair<IntMatrix, IntMatrix> hermite_with_transform(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        // gcd elimination among rows >= row in this column
        for (;;) {
            std::size_t pi = row;
            Int best = 0;
            for (std::size_t i = row; i < a.rows(); ++i)
                if (a.at(i, col) != 0 && (best == 0 || abs(a.at(i, col)) < best)) {
                    best = abs(a.at(i, col));
                    pi = i;
                }
            if (best == 0) break;
            swap_rows(a, row, pi);
            swap_rows(u, row, pi);
            bool clean = true;
            for (std::size_t i = row + 1; i < a.rows(); ++i) {
                Int q = a.at(i, col) / a.at(row, col);
                row_axpy(a, i, row, q);
                row_axpy(u, i, row, q);
                if (a.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a.at(row, col) == 0) continue;
        if (a.at(row, col) < 0) {
            negate_row(a, row);
            negate_row(u, row);
        }
        for (std::size_t i = 0; i < row; ++i) {
            Int q = fdiv(a.at(i, col), a.at(row, col));
            row_axpy(a, i, row, q);
            row_axpy(u, i, row, q);
        }
        ++row;
    }
    return {u, a};
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
    auto [u, h] = hermite_with_transform(m);
    std::vector<std::vector<Int>> rows;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        bool zero = true;
        for (std::size_t c = 0; c < h.cols(); ++c)
            if (h.at(r, c) != 0) {
                zero = false;
                break;
            }
        if (!zero) rows.push_back(h.row(r));
    }
    IntMatrix out(rows.size(), m.cols());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = rows[r][c];
    return out;
}

IntMatrix left_kernel(const IntMatrix& m) {
    auto [u, h] = hermite_with_transform(m);
    std::vector<std::vector<Int>> rows;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        bool zero = true;
        for (std::size_t c = 0; c < h.cols(); ++c)
            if (h.at(r, c) != 0) {
                zero = false;
                break;
            }
        if (zero) rows.push_back(u.row(r));
    }
    IntMatrix k(rows.size(), m.rows());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < m.rows(); ++c) k.at(r, c) = rows[r][c];
    return hermite_normal_form(k);
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw domain_error("determinant: not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t swap = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap == n) return 0;
            swap_rows(a, k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

bool is_partial_basis(const IntMatrix& vectors) {
    if (vectors.rows() > vectors.cols())
        throw domain_error("is_partial_basis: more rows than ambient rank");
    if (vectors.rows() == 0) return true;
    for (const Int& d : smith_divisors(vectors))
        if (d != 1) return false;
    return true;
}

IntMatrix reduce_to_standard(const IntMatrix& vectors) {
    const std::size_t k = vectors.rows(), n = vectors.cols();
    if (!is_partial_basis(vectors))
        throw domain_error("reduce_to_standard: input is not a partial basis");
    SmithResult s = smith_normal_form(vectors);
    // vectors = left^-1 [I_k 0] right^-1, so blockdiag(left^T, I) * right^T
    // carries row i onto e_{i+1}; permute to land on the last k slots.
    IntMatrix blk(n, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) blk.at(i, j) = s.left.at(j, i);
    for (std::size_t i = k; i < n; ++i) blk.at(i, i) = 1;
    IntMatrix w = blk * s.right.transpose();
    IntMatrix p(n, n);
    for (std::size_t i = 0; i < k; ++i) p.at(n - k + i, i) = 1;
    for (std::size_t i = k; i < n; ++i) p.at(i - k, i) = 1;
    IntMatrix m = p * w;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r = 0; r < n; ++r) {
            Int v = 0;
            for (std::size_t c = 0; c < n; ++c) v += m.at(r, c) * vectors.at(i, c);
            Int want = (r == n - k + i) ? 1 : 0;
            if (v != want)
                throw internal_error("reduce_to_standard: verification failed");
        }
    return m;
}

Lattice lattice_from_rows(std::size_t ambient,
                          const std::vector<std::vector<Int>>& rows) {
    IntMatrix m(rows.size(), ambient);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != ambient)
            throw domain_error("lattice_from_rows: wrong vector length");
        for (std::size_t c = 0; c < ambient; ++c) m.at(r, c) = rows[r][c];
    }
    return lattice_from_matrix(ambient, m);
}

Lattice lattice_from_matrix(std::size_t ambient, const IntMatrix& rows) {
    if (rows.rows() > 0 && rows.cols() != ambient)
        throw domain_error("lattice_from_matrix: ambient mismatch");
    Lattice l;
    l.ambient = ambient;
    l.basis = hermite_normal_form(rows.rows() ? rows : IntMatrix(0, ambient));
    if (l.basis.cols() != ambient) l.basis = IntMatrix(0, ambient);
    return l;
}

namespace {

// pivot column of HNF basis row r
std::size_t pivot_col(const IntMatrix& b, std::size_t r) {
    for (std::size_t c = 0; c < b.cols(); ++c)
        if (b.at(r, c) != 0) return c;
    throw internal_error("zero row in lattice basis");
}

} // namespace

bool lattice_contains(const Lattice& l, const std::vector<Int>& v) {
    if (v.size() != l.ambient) throw domain_error("lattice_contains: wrong length");
    std::vector<Int> w = v;
    for (std::size_t r = 0; r < l.basis.rows(); ++r) {
        std::size_t p = pivot_col(l.basis, r);
        for (std::size_t c = 0; c < p; ++c)
            if (w[c] != 0) return false;
        if (w[p] % l.basis.at(r, p) != 0) return false;
        Int q = w[p] / l.basis.at(r, p);
        for (std::size_t c = p; c < l.ambient; ++c) w[c] -= q * l.basis.at(r, c);
    }
    for (const Int& x : w)
        if (x != 0) return false;
    return true;
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    if (a.ambient != b.ambient) throw domain_error("lattice_sum: ambient mismatch");
    IntMatrix st(a.basis.rows() + b.basis.rows(), a.ambient);
    for (std::size_t r = 0; r < a.basis.rows(); ++r)
        for (std::size_t c = 0; c < a.ambient; ++c) st.at(r, c) = a.basis.at(r, c);
    for (std::size_t r = 0; r < b.basis.rows(); ++r)
        for (std::size_t c = 0; c < a.ambient; ++c)
            st.at(a.basis.rows() + r, c) = b.basis.at(r, c);
    return lattice_from_matrix(a.ambient, st);
}

Lattice intersect_lattices(const Lattice& a, const Lattice& b) {
    if (a.ambient != b.ambient)
        throw domain_error("intersect_lattices: ambient mismatch");
    const std::size_t ra = a.basis.rows(), rb = b.basis.rows();
    IntMatrix st(ra + rb, a.ambient);
    for (std::size_t r = 0; r < ra; ++r)
        for (std::size_t c = 0; c < a.ambient; ++c) st.at(r, c) = a.basis.at(r, c);
    for (std::size_t r = 0; r < rb; ++r)
        for (std::size_t c = 0; c < a.ambient; ++c) st.at(ra + r, c) = -b.basis.at(r, c);
    IntMatrix k = left_kernel(st);  // rows [u v] with u*A = v*B
    IntMatrix rows(k.rows(), a.ambient);
    for (std::size_t r = 0; r < k.rows(); ++r)
        for (std::size_t c = 0; c < a.ambient; ++c) {
            Int v = 0;
            for (std::size_t i = 0; i < ra; ++i) v += k.at(r, i) * a.basis.at(i, c);
            rows.at(r, c) = v;
        }
    return lattice_from_matrix(a.ambient, rows);
}

std::optional<std::vector<Int>> solve_rows(const IntMatrix& basis_rows,
                                           const std::vector<Int>& v) {
    if (v.size() != basis_rows.cols()) throw domain_error("solve_rows: wrong length");
    auto [u, h] = hermite_with_transform(basis_rows);
    // solve y * h = v by echelon substitution, then x = y * u
    std::vector<Int> y(h.rows(), 0);
    std::vector<Int> w = v;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        std::size_t p = h.cols();
        for (std::size_t c = 0; c < h.cols(); ++c)
            if (h.at(r, c) != 0) {
                p = c;
                break;
            }
        if (p == h.cols()) continue;  // zero row
        for (std::size_t c = 0; c < p; ++c)
            if (w[c] != 0) return std::nullopt;
        if (w[p] % h.at(r, p) != 0) return std::nullopt;
        y[r] = w[p] / h.at(r, p);
        for (std::size_t c = p; c < h.cols(); ++c) w[c] -= y[r] * h.at(r, c);
    }
    for (const Int& x : w)
        if (x != 0) return std::nullopt;
    std::vector<Int> out(basis_rows.rows(), 0);
    for (std::size_t c = 0; c < basis_rows.rows(); ++c)
        for (std::size_t r = 0; r < h.rows(); ++r) out[c] += y[r] * u.at(r, c);
    return out;
}

std::vector<Int> reduce_mod_lattice(const Lattice& l, std::vector<Int> v) {
    if (v.size() != l.ambient) throw domain_error("reduce_mod_lattice: wrong length");
    for (std::size_t r = 0; r < l.basis.rows(); ++r) {
        std::size_t p = pivot_col(l.basis, r);
        Int q = fdiv(v[p], l.basis.at(r, p));
        for (std::size_t c = p; c < l.ambient; ++c) v[c] -= q * l.basis.at(r, c);
    }
    return v;
}

} // namespace raaglab
