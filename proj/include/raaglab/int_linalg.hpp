#ifndef RAAGLAB_INT_LINALG_HPP
#define RAAGLAB_INT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "raaglab/errors.hpp"

namespace raaglab {

using Int = boost::multiprecision::cpp_int;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::vector<Int> row(std::size_t r) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;
    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

struct SmithResult {
    std::vector<Int> divisors;  // nonnegative, d1 | d2 | ..., length min(r,c)
    IntMatrix left;             // r x r, det +-1
    IntMatrix right;            // c x c, det +-1; left*m*right = diag(divisors)
};

SmithResult smith_normal_form(const IntMatrix& m);
std::vector<Int> smith_divisors(const IntMatrix& m);

/// Row-style Hermite normal form: echelon, positive pivots, entries above a
/// pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Full HNF with transform: returns (U, H) with U*m = H, U unimodular,
/// H in HNF with zero rows kept at the bottom.
std::pair<IntMatrix, IntMatrix> hermite_with_transform(const IntMatrix& m);

/// Basis (in HNF) of the left kernel { x : x*m = 0 }.
IntMatrix left_kernel(const IntMatrix& m);

Int determinant(const IntMatrix& m);

/// True iff the rows extend to a basis of Z^n, i.e. all SNF divisors are 1.
/// Throws domain_error when rows > cols.
bool is_partial_basis(const IntMatrix& vectors);

/// For a k x n partial basis V, a matrix M in GL_n(Z) with
/// M * V.row(i)^T = e_{n-k+i} (1-based), so the rows are carried onto the
/// last k standard basis vectors.
IntMatrix reduce_to_standard(const IntMatrix& vectors);

/// Sublattice of Z^n, basis rows independent and stored in HNF.
struct Lattice {
    std::size_t ambient = 0;
    IntMatrix basis;  // rank x ambient

    std::size_t rank() const { return basis.rows(); }
    bool operator==(const Lattice& o) const = default;
};

Lattice lattice_from_rows(std::size_t ambient, const std::vector<std::vector<Int>>& rows);
Lattice lattice_from_matrix(std::size_t ambient, const IntMatrix& rows);
bool lattice_contains(const Lattice& l, const std::vector<Int>& v);
Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice intersect_lattices(const Lattice& a, const Lattice& b);

/// Integer coordinates of v in the given basis rows (which must be square
/// unimodular when uniqueness is required); nullopt if no integer solution.
std::optional<std::vector<Int>> solve_rows(const IntMatrix& basis_rows,
                                           const std::vector<Int>& v);

/// Reduce v modulo the lattice: subtract multiples of HNF basis rows so each
/// pivot column entry lands in [0, pivot). Canonical coset representative.
std::vector<Int> reduce_mod_lattice(const Lattice& l, std::vector<Int> v);

} // namespace raaglab

#endif
