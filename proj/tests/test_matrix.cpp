#include "doctest.h"

#include "helpers.hpp"

using namespace qracah;
using qracah::testing::r;
using qracah::testing::random_matrix;
using qracah::testing::RationalSampler;

namespace {

Matrix unit_column(int n, int i) {
    Matrix v(n, 1);
    v.at(i, 0) = r(1);
    return v;
}

} // namespace

TEST_CASE("matrix basic operations") {
    const Matrix a = {{r(0), r(1)}, {r(0), r(0)}};
    const Matrix b = {{r(0), r(0)}, {r(1), r(0)}};
    CHECK(a * b == Matrix{{r(1), r(0)}, {r(0), r(0)}});
    CHECK(b * a == Matrix{{r(0), r(0)}, {r(0), r(1)}});
    CHECK(Matrix::identity(2) * a == a);
    CHECK(a + b == Matrix{{r(0), r(1)}, {r(1), r(0)}});
    CHECK(a - a == Matrix(2, 2));
    CHECK((a - a).is_zero());
    CHECK(r(0) * a == Matrix(2, 2));
    CHECK(a.transpose() == b);
    CHECK((-a) + a == Matrix(2, 2));
    CHECK_THROWS_AS(a * Matrix(3, 3), DimensionMismatch);
    CHECK_THROWS_AS(a + Matrix(3, 3), DimensionMismatch);
    CHECK_THROWS_AS(a.at(2, 0), DimensionMismatch);
}

TEST_CASE("matrix power") {
    const Matrix n = {{r(0), r(1)}, {r(0), r(0)}};
    CHECK(n.pow(0) == Matrix::identity(2));
    CHECK(n.pow(1) == n);
    CHECK(n.pow(2).is_zero());
    const Matrix s = Matrix::diagonal({r(2), r(3)});
    CHECK(s.pow(5) == Matrix::diagonal({r(32), r(243)}));
}

TEST_CASE("kronecker product uses first-factor-slowest indexing") {
    const Matrix a = {{r(1), r(2)}, {r(3), r(4)}};
    const Matrix b = {{r(0), r(5)}, {r(6), r(0)}};
    const Matrix k = Matrix::kron(a, b);
    REQUIRE(k.rows() == 4);
    // Entry ((ia, ib), (ja, jb)) = a[ia][ja] * b[ib][jb].
    for (int ia = 0; ia < 2; ++ia)
        for (int ja = 0; ja < 2; ++ja)
            for (int ib = 0; ib < 2; ++ib)
                for (int jb = 0; jb < 2; ++jb)
                    CHECK(k.at(2 * ia + ib, 2 * ja + jb) ==
                          a.at(ia, ja) * b.at(ib, jb));
    // Mixed-product property on sampled matrices.
    RationalSampler s(7);
    for (int rep = 0; rep < 5; ++rep) {
        const Matrix a1 = random_matrix(s, 2, 3), a2 = random_matrix(s, 3, 2);
        const Matrix b1 = random_matrix(s, 3, 2), b2 = random_matrix(s, 2, 3);
        CHECK(Matrix::kron(a1 * a2, b1 * b2) ==
              Matrix::kron(a1, b1) * Matrix::kron(a2, b2));
    }
}

TEST_CASE("reduced row echelon form is canonical") {
    const Matrix m = {{r(2), r(4), r(2)}, {r(1), r(2), r(3)}};
    const Echelon e = reduced_row_echelon(m);
    CHECK(e.rank == 2);
    CHECK(e.pivot_cols == std::vector<int>{0, 2});
    CHECK(e.rref == Matrix{{r(1), r(2), r(0)}, {r(0), r(0), r(1)}});

    // Scaling rows must not change the reduced form.
    const Matrix m2 = {{r(1), r(2), r(1)}, {r(7, 3), r(14, 3), r(7)}};
    CHECK(reduced_row_echelon(m2).rref == e.rref);

    CHECK(reduced_row_echelon(Matrix(3, 3)).rank == 0);
    CHECK(rank(Matrix::identity(4)) == 4);
    CHECK(rank(Matrix{{r(1), r(1)}, {r(1), r(1)}}) == 1);
}

TEST_CASE("inverse on frozen examples") {
    CHECK(inverse(Matrix::identity(3)) == Matrix::identity(3));
    CHECK(inverse(Matrix::diagonal({r(2), r(-3, 5)})) ==
          Matrix::diagonal({r(1, 2), r(-5, 3)}));
    CHECK(inverse(Matrix{{r(1), r(1)}, {r(0), r(1)}}) ==
          Matrix{{r(1), r(-1)}, {r(0), r(1)}});
    try {
        inverse(Matrix{{r(1), r(1)}, {r(1), r(1)}});
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(e.rank() == 1);
    }
    CHECK_THROWS_AS(inverse(Matrix(2, 3)), DimensionMismatch);
}

TEST_CASE("inverse round-trips on sampled invertible matrices") {
    RationalSampler s(11);
    int done = 0;
    while (done < 10) {
        const int n = static_cast<int>(s.integer(1, 6));
        const Matrix m = random_matrix(s, n, n);
        if (rank(m) < n) continue;
        const Matrix mi = inverse(m);
        CHECK(m * mi == Matrix::identity(n));
        CHECK(mi * m == Matrix::identity(n));
        ++done;
    }
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(Matrix::identity(3)).cols() == 0);
    CHECK(kernel_basis(Matrix(2, 2)) == Matrix::identity(2));
    const Matrix m = {{r(1), r(1)}, {r(1), r(1)}};
    const Matrix k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
    CHECK(k == Matrix{{r(-1)}, {r(1)}});

    RationalSampler s(13);
    for (int rep = 0; rep < 10; ++rep) {
        const Matrix a = random_matrix(s, static_cast<int>(s.integer(1, 5)),
                                       static_cast<int>(s.integer(1, 5)));
        const Matrix kb = kernel_basis(a);
        CHECK(rank(a) + kb.cols() == a.cols());  // rank-nullity
        CHECK((a * kb).is_zero());
        if (kb.cols() > 0) CHECK(rank(kb) == kb.cols());
    }
}

TEST_CASE("solve_affine on frozen systems") {
    {
        const AffineSolution s =
            solve_affine(Matrix{{r(1), r(1)}, {r(0), r(1)}},
                         Matrix{{r(3)}, {r(1)}});
        CHECK(s.particular == Matrix{{r(2)}, {r(1)}});
        CHECK(s.homogeneous.dim() == 0);
    }
    {
        // 0 x = 0: everything solves.
        const AffineSolution s = solve_affine(Matrix(1, 1), Matrix(1, 1));
        CHECK(s.particular == Matrix(1, 1));
        CHECK(s.homogeneous.dim() == 1);
    }
    CHECK_THROWS_AS(solve_affine(Matrix(1, 1), Matrix{{r(1)}}),
                    NoSolutionError);
    CHECK(!try_solve(Matrix(1, 1), Matrix{{r(1)}}).has_value());
    CHECK(try_solve(Matrix::identity(2), Matrix{{r(5)}, {r(6)}}).value() ==
          Matrix{{r(5)}, {r(6)}});
}

TEST_CASE("solve_affine resubstitutes on sampled systems") {
    RationalSampler s(17);
    for (int rep = 0; rep < 15; ++rep) {
        const int m = static_cast<int>(s.integer(1, 5));
        const int n = static_cast<int>(s.integer(1, 5));
        const Matrix a = random_matrix(s, m, n);
        // Make a consistent rhs from a known solution.
        const Matrix x0 = random_matrix(s, n, 1);
        const Matrix rhs = a * x0;
        const AffineSolution sol = solve_affine(a, rhs);
        CHECK(a * sol.particular == rhs);
        for (int j = 0; j < sol.homogeneous.dim(); ++j) {
            const Matrix shifted =
                sol.particular + sol.homogeneous.basis().column(j);
            CHECK(a * shifted == rhs);
        }
    }
}

TEST_CASE("subspace canonical bases make equality order-independent") {
    const Matrix v1 = {{r(1)}, {r(2)}, {r(0)}};
    const Matrix v2 = {{r(0)}, {r(1)}, {r(1)}};
    const Matrix b12 = Matrix::hconcat(v1, v2);
    const Matrix b21 = Matrix::hconcat(v2, v1);
    const Matrix mixed = Matrix::hconcat(v1 + v2, v2);
    CHECK(Subspace::span(b12) == Subspace::span(b21));
    CHECK(Subspace::span(b12) == Subspace::span(mixed));
    CHECK(Subspace::span(b12).dim() == 2);
    CHECK(Subspace::span(Matrix::hconcat(v1, v1)).dim() == 1);

    const Subspace sp = Subspace::span(b12);
    CHECK(sp.contains(v1));
    CHECK(sp.contains(v2));
    CHECK(sp.contains(r(3) * v1 - r(7, 2) * v2));
    CHECK(!sp.contains(unit_column(3, 0)));
    CHECK(sp.contains(Matrix(3, 1)));  // zero vector

    CHECK(Subspace::zero(3).dim() == 0);
    CHECK(Subspace::full(3).dim() == 3);
    CHECK(Subspace::full(3).contains(sp));
    CHECK(!sp.contains(Subspace::full(3)));
}

TEST_CASE("subspace intersection and sum") {
    const Subspace e0 = Subspace::span(unit_column(3, 0));
    const Subspace e1 = Subspace::span(unit_column(3, 1));
    const Subspace e01 =
        Subspace::span(Matrix::hconcat(unit_column(3, 0), unit_column(3, 1)));
    CHECK(intersect(e0, e0) == e0);
    CHECK(intersect(e0, e1) == Subspace::zero(3));
    CHECK(sum(e0, e1) == e01);
    CHECK(intersect(e01, e1) == e1);
    CHECK(is_direct_sum({e0, e1}));
    CHECK(!is_direct_sum({e0, e01}));
    CHECK(is_direct_sum({}));

    // Dimension formula on sampled subspaces.
    RationalSampler s(19);
    for (int rep = 0; rep < 10; ++rep) {
        const int amb = 5;
        const Subspace u =
            Subspace::span(random_matrix(s, amb, static_cast<int>(s.integer(0, 4))));
        const Subspace w =
            Subspace::span(random_matrix(s, amb, static_cast<int>(s.integer(0, 4))));
        CHECK(intersect(u, w).dim() + sum(u, w).dim() == u.dim() + w.dim());
        CHECK(sum(u, w).contains(u));
        CHECK(u.contains(intersect(u, w)));
    }
}

TEST_CASE("fraction-free elimination handles large entry growth exactly") {
    // Hilbert-like matrix: notoriously ill-conditioned in floating point,
    // exactly invertible here.
    const int n = 7;
    Matrix h(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h.at(i, j) = r(1, i + j + 1);
    const Matrix hi = inverse(h);
    CHECK(h * hi == Matrix::identity(n));
    // Frozen corner entry of the inverse Hilbert matrix of order 7.
    CHECK(hi.at(0, 0) == r(49));
}
