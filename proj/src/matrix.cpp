#include "qracah/matrix.hpp"

#include <sstream>
#include <utility>

namespace qracah {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw DimensionMismatch(msg);
}

std::string shape(const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

} // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    require(rows >= 0 && cols >= 0, "negative matrix dimension");
    a_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    a_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        require(static_cast<int>(r.size()) == cols_, "ragged initializer rows");
        for (const auto& x : r) a_.push_back(x);
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& entries) {
    Matrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) = entries[i];
    return m;
}

Matrix Matrix::column_vector(const std::vector<Rational>& entries) {
    Matrix m(static_cast<int>(entries.size()), 1);
    for (int i = 0; i < m.rows(); ++i) m.at(i, 0) = entries[i];
    return m;
}

Rational& Matrix::at(int i, int j) {
    require(i >= 0 && i < rows_ && j >= 0 && j < cols_,
            "index (" + std::to_string(i) + "," + std::to_string(j) +
                ") out of range for " + shape(*this));
    return a_[static_cast<std::size_t>(i) * cols_ + j];
}

const Rational& Matrix::at(int i, int j) const {
    return const_cast<Matrix&>(*this).at(i, j);
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_,
            "add: " + shape(*this) + " vs " + shape(o));
    Matrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_,
            "subtract: " + shape(*this) + " vs " + shape(o));
    Matrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require(cols_ == o.rows_, "multiply: " + shape(*this) + " vs " + shape(o));
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& bkj = o.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Matrix operator*(const Rational& c, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.a_) x *= c;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix Matrix::column(int j) const { return submatrix(0, rows_, j, j + 1); }

Matrix Matrix::submatrix(int r0, int r1, int c0, int c1) const {
    require(0 <= r0 && r0 <= r1 && r1 <= rows_ && 0 <= c0 && c0 <= c1 && c1 <= cols_,
            "submatrix range out of bounds for " + shape(*this));
    Matrix s(r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) s.at(i - r0, j - c0) = at(i, j);
    return s;
}

Matrix Matrix::hconcat(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), "hconcat: " + shape(a) + " vs " + shape(b));
    Matrix r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ia = 0; ia < a.rows(); ++ia)
        for (int ja = 0; ja < a.cols(); ++ja) {
            const Rational& f = a.at(ia, ja);
            if (f.is_zero()) continue;
            for (int ib = 0; ib < b.rows(); ++ib)
                for (int jb = 0; jb < b.cols(); ++jb) {
                    const Rational& g = b.at(ib, jb);
                    if (!g.is_zero())
                        r.at(ia * b.rows() + ib, ja * b.cols() + jb) = f * g;
                }
        }
    return r;
}

Matrix Matrix::pow(long e) const {
    require(is_square(), "pow of non-square " + shape(*this));
    if (e < 0) throw DimensionMismatch("pow with negative exponent");
    Matrix acc = identity(rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " [");
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j);
        }
        os << "]";
        if (i + 1 < rows_) os << ",\n";
    }
    os << "]";
    return os.str();
}

std::string Matrix::entry_dump() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << ":";
    for (const auto& x : a_) os << x << ";";
    return os.str();
}

Echelon reduced_row_echelon(const Matrix& m) {
    const int nr = m.rows(), nc = m.cols();

    // Clear denominators row by row; row scaling does not change the RREF.
    std::vector<std::vector<mpz_class>> z(nr, std::vector<mpz_class>(nc));
    for (int i = 0; i < nr; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < nc; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).denominator().get_mpz_t());
        for (int j = 0; j < nc; ++j)
            z[i][j] = m.at(i, j).numerator() * (l / m.at(i, j).denominator());
    }

    // Fraction-free forward elimination (Bareiss one-step). Pivot rule: first
    // row with a nonzero entry in the current column. The division by the
    // previous pivot is exact by the Sylvester determinant identity; that is
    // asserted, not assumed.
    std::vector<int> pivots;
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int p = -1;
        for (int i = r; i < nr; ++i)
            if (z[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r) std::swap(z[p], z[r]);
        for (int i = r + 1; i < nr; ++i) {
            for (int j = c + 1; j < nc; ++j) {
                mpz_class t = z[r][c] * z[i][j] - z[i][c] * z[r][j];
                mpz_class quo, rem;
                mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(),
                            t.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0)
                    throw Error("internal: fraction-free elimination produced "
                                "a non-exact division");
                z[i][j] = quo;
            }
            z[i][c] = 0;
        }
        prev = z[r][c];
        pivots.push_back(c);
        ++r;
    }

    // Back-substitution over the rationals: unit pivots, zeros above.
    Matrix rr(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) rr.at(i, j) = Rational(mpq_class(z[i][j]));
    for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
        const int pc = pivots[k];
        const Rational pv = rr.at(k, pc);
        for (int j = pc; j < nc; ++j) rr.at(k, j) /= pv;
        for (int i = 0; i < k; ++i) {
            const Rational f = rr.at(i, pc);
            if (f.is_zero()) continue;
            for (int j = pc; j < nc; ++j) rr.at(i, j) -= f * rr.at(k, j);
        }
    }

    Echelon e;
    e.rref = std::move(rr);
    e.pivot_cols = std::move(pivots);
    e.rank = static_cast<int>(e.pivot_cols.size());
    return e;
}

int rank(const Matrix& m) { return reduced_row_echelon(m).rank; }

Matrix inverse(const Matrix& m) {
    require(m.is_square(), "inverse of non-square matrix");
    const int n = m.rows();
    Echelon e = reduced_row_echelon(Matrix::hconcat(m, Matrix::identity(n)));
    int rank_left = 0;
    for (int c : e.pivot_cols)
        if (c < n) ++rank_left;
    if (rank_left < n)
        throw SingularMatrixError(
            "singular matrix (rank " + std::to_string(rank_left) + " of " +
                std::to_string(n) + ")",
            rank_left);
    return e.rref.submatrix(0, n, n, 2 * n);
}

Matrix kernel_basis(const Matrix& m) {
    const int nc = m.cols();
    Echelon e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(nc, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;

    Matrix basis(nc, nc - e.rank);
    int out = 0;
    for (int f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        basis.at(f, out) = Rational(1);
        for (int k = 0; k < e.rank; ++k)
            basis.at(e.pivot_cols[k], out) = -e.rref.at(k, f);
        ++out;
    }
    return basis;
}

Subspace Subspace::zero(int ambient_dim) {
    return Subspace(ambient_dim, Matrix(ambient_dim, 0));
}

Subspace Subspace::full(int ambient_dim) {
    return Subspace(ambient_dim, Matrix::identity(ambient_dim));
}

Subspace Subspace::span(const Matrix& columns) {
    // Reduced column echelon form: transpose, RREF, keep nonzero rows,
    // transpose back. Unique per subspace, so equality is entrywise.
    Echelon e = reduced_row_echelon(columns.transpose());
    Matrix basis = e.rref.submatrix(0, e.rank, 0, e.rref.cols()).transpose();
    return Subspace(columns.rows(), std::move(basis));
}

bool Subspace::contains(const Matrix& v) const {
    require(v.rows() == ambient_ && v.cols() == 1,
            "contains: expected a single ambient column");
    if (v.is_zero()) return true;
    if (dim() == 0) return false;
    return try_solve(basis_, v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
    require(other.ambient_ == ambient_, "contains: ambient dimension mismatch");
    for (int j = 0; j < other.dim(); ++j)
        if (!contains(other.basis_.column(j))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

AffineSolution solve_affine(const Matrix& a, const Matrix& rhs) {
    require(rhs.cols() == 1 && rhs.rows() == a.rows(),
            "solve_affine: rhs must be a column matching the row count");
    const int n = a.cols();
    Echelon e = reduced_row_echelon(Matrix::hconcat(a, rhs));
    for (int c : e.pivot_cols)
        if (c == n) throw NoSolutionError("inconsistent linear system");

    Matrix x(n, 1);
    for (int k = 0; k < e.rank; ++k) x.at(e.pivot_cols[k], 0) = e.rref.at(k, n);

    // The first n columns of the reduced augmented matrix are the RREF of a,
    // so the kernel reads off the same echelon.
    std::vector<bool> is_pivot(n, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    Matrix hom(n, n - e.rank);
    int out = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        hom.at(f, out) = Rational(1);
        for (int k = 0; k < e.rank; ++k)
            hom.at(e.pivot_cols[k], out) = -e.rref.at(k, f);
        ++out;
    }
    return AffineSolution{std::move(x), Subspace::span(hom)};
}

std::optional<Matrix> try_solve(const Matrix& a, const Matrix& rhs) {
    try {
        return solve_affine(a, rhs).particular;
    } catch (const NoSolutionError&) {
        return std::nullopt;
    }
}

Subspace intersect(const Subspace& u, const Subspace& w) {
    require(u.ambient_dim() == w.ambient_dim(), "intersect: ambient mismatch");
    const int amb = u.ambient_dim();
    if (u.dim() == 0 || w.dim() == 0) return Subspace::zero(amb);
    // (x; y) in ker [Bu | Bw]  <=>  Bu x = -Bw y lies in both spans.
    Matrix ker = kernel_basis(Matrix::hconcat(u.basis(), w.basis()));
    Matrix members(amb, ker.cols());
    for (int j = 0; j < ker.cols(); ++j) {
        Matrix x = ker.submatrix(0, u.dim(), j, j + 1);
        Matrix v = u.basis() * x;
        for (int i = 0; i < amb; ++i) members.at(i, j) = v.at(i, 0);
    }
    return Subspace::span(members);
}

Subspace sum(const Subspace& u, const Subspace& w) {
    require(u.ambient_dim() == w.ambient_dim(), "sum: ambient mismatch");
    return Subspace::span(Matrix::hconcat(u.basis(), w.basis()));
}

bool is_direct_sum(const std::vector<Subspace>& parts) {
    if (parts.empty()) return true;
    const int amb = parts.front().ambient_dim();
    int total = 0;
    Matrix all(amb, 0);
    for (const auto& p : parts) {
        require(p.ambient_dim() == amb, "is_direct_sum: ambient mismatch");
        total += p.dim();
        all = Matrix::hconcat(all, p.basis());
    }
    return Subspace::span(all).dim() == total;
}

} // namespace qracah
