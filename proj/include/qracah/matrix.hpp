#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "qracah/rational.hpp"

namespace qracah {

// Dense matrix over the exact rationals, row-major storage.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);  // zero-filled
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(int n);
    // Square matrix with the given diagonal.
    static Matrix diagonal(const std::vector<Rational>& entries);
    // Single column from the given entries.
    static Matrix column_vector(const std::vector<Rational>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(int i, int j);
    const Rational& at(int i, int j) const;
    Rational& operator()(int i, int j) { return at(i, j); }
    const Rational& operator()(int i, int j) const { return at(i, j); }

    bool is_zero() const;

    Matrix transpose() const;
    Matrix operator-() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    friend Matrix operator*(const Rational& c, const Matrix& m);

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix column(int j) const;
    // Rows [r0, r1) and columns [c0, c1).
    Matrix submatrix(int r0, int r1, int c0, int c1) const;
    static Matrix hconcat(const Matrix& a, const Matrix& b);

    // Kronecker product; the FIRST factor varies slowest:
    // (A kron B)[ia*B.rows + ib][ja*B.cols + jb] = A[ia][ja] * B[ib][jb].
    static Matrix kron(const Matrix& a, const Matrix& b);

    // Exact matrix power, e >= 0.
    Matrix pow(long e) const;

    // Multi-line rendering "[[..], [..]]" style, one row per line.
    std::string str() const;
    // Single-line entry dump used for hashing; stable across builds.
    std::string entry_dump() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

// Result of bringing a matrix to reduced row echelon form. The elimination
// runs fraction-free (Bareiss) on denominator-cleared integer rows with
// first-nonzero pivoting, then an exact rational back-substitution
// normalizes pivots to 1 and clears above them. RREF is unique, so this is
// a canonical form.
struct Echelon {
    Matrix rref;
    std::vector<int> pivot_cols;
    int rank = 0;
};

Echelon reduced_row_echelon(const Matrix& m);

int rank(const Matrix& m);

// Exact inverse; throws SingularMatrixError carrying the rank when singular.
Matrix inverse(const Matrix& m);

// Canonical basis of the null space {x : m x = 0}, as columns. The basis is
// the standard free-column parameterization read off the RREF.
Matrix kernel_basis(const Matrix& m);

// Linear subspace of Q^n held via a canonical basis (reduced column echelon
// form), so equal subspaces compare equal entrywise.
class Subspace {
public:
    static Subspace zero(int ambient_dim);
    static Subspace full(int ambient_dim);
    // Span of the given columns (any spanning set; dependent columns fine).
    static Subspace span(const Matrix& columns);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.cols(); }
    // ambient_dim x dim matrix, canonical.
    const Matrix& basis() const { return basis_; }

    bool contains(const Matrix& column_vector) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    Subspace(int ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
    int ambient_ = 0;
    Matrix basis_;  // ambient_ x dim, reduced column echelon form
};

// General solution of a x = rhs (rhs one column): one particular solution
// plus the homogeneous kernel. Throws NoSolutionError if inconsistent.
struct AffineSolution {
    Matrix particular;
    Subspace homogeneous;
};

AffineSolution solve_affine(const Matrix& a, const Matrix& rhs);

// nullopt instead of a throw when inconsistent.
std::optional<Matrix> try_solve(const Matrix& a, const Matrix& rhs);

Subspace intersect(const Subspace& u, const Subspace& w);
Subspace sum(const Subspace& u, const Subspace& w);

// True iff the sum of the parts is direct, i.e. the dimension of the sum
// equals the sum of the dimensions. Filling the ambient space is not
// required here; callers check that separately when they need it.
bool is_direct_sum(const std::vector<Subspace>& parts);

} // namespace qracah
