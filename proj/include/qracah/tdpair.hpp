#pragma once

#include "qracah/uq_module.hpp"

namespace qracah {

// A candidate tridiagonal pair built on a module:
//   A  = a X01 + a^-1 X12        with eigenvalues  theta_i  = a q^(2i-d) + a^-1 q^(d-2i)
//   A* = b X23 + b^-1 X30        with eigenvalues  theta*_i = b q^(2i-d) + b^-1 q^(d-2i)
// for 0 <= i <= d, d the total diameter. v_spaces[i] / vstar_spaces[i] are
// the corresponding eigenspaces.
struct TDPairData {
    Matrix a_op, astar_op;
    int d = 0;
    Rational q, a, b;
    std::vector<Rational> theta, theta_star;
    std::vector<Subspace> v_spaces, vstar_spaces;
    EquitableGenerators x;

    int dim() const { return a_op.rows(); }
};

// Builds the pair from the module and the base parameters. Throws
// DegenerateParameters when predicted eigenvalues coincide, an eigenspace
// comes out zero-dimensional, or the eigenspaces fail to exhaust the module.
TDPairData build_td_pair(const Representation& rep, const Rational& a,
                         const Rational& b);

// The tridiagonal axioms and their sharpenings:
//  - eigenspace decomposition for both operators (diagonalizability)
//  - A* V_i <= V_(i-1) + V_i + V_(i+1) and A V*_i <= V*_(i-1) + V*_i + V*_(i+1)
//  - the reversed eigenvalue orderings also satisfy the containments
//  - for d == 2, the four non-standard orderings all violate them
//  - for d >= 3, consecutive eigenvalue ratios
//    (theta_(i-2) - theta_(i+1)) / (theta_(i-1) - theta_i) all equal
//    q^2 + 1 + q^-2, for both eigenvalue sequences
Report verify_tridiagonal_axioms(const TDPairData& td);

// Certificate that the pair acts irreducibly: the span of all words in
// {A, A*} is tracked length by length until it stabilizes; irreducible iff
// it reaches the full operator algebra dimension dim^2 (Burnside).
struct IrreducibilityCertificate {
    bool irreducible = false;
    bool inconclusive = false;
    int span_dim = 0;
    std::vector<int> span_profile;  // span dimension after each word length
};

IrreducibilityCertificate word_span(const std::vector<Matrix>& generators, int dim);
IrreducibilityCertificate verify_irreducible(const TDPairData& td);

// The split decomposition attached to the pair:
//   U_i = (V*_0 + ... + V*_i)  intersect  (V_0 + ... + V_(d-i))
// together with the operators K (acting on U_i as q^(d-2i)) and
// R = A - a K - a^-1 K^-1 (which shifts each U_i into U_(i+1)).
struct SplitDecomposition {
    std::vector<Subspace> u_spaces;
    std::vector<int> block_dims;   // dim U_i
    Matrix adapted_basis;          // columns: basis of U_0, then U_1, ...
    Matrix adapted_basis_inv;
    Matrix k, kinv, r;
};

// Computes the split decomposition and the K, R operators. Throws
// DegenerateParameters when the U_i fail to sum directly to the module or
// the partial-sum identities fail; also verifies the raising property
// R U_i <= U_(i+1) and the lowering property (A* - theta*_i) U_i <= U_(i-1)
// at construction time.
SplitDecomposition split_decomposition(const TDPairData& td);

// Report-level re-statement of everything split_decomposition guarantees,
// plus: K acts on U_i as q^(d-2i), a K + a^-1 K^-1 acts on U_i as
// theta_(d-i), A == a K + a^-1 K^-1 + R, and R^(d+1) == 0.
Report verify_split_identities(const TDPairData& td, const SplitDecomposition& sd);

// K equals the alternative generator X31 (= K0 on the module) and K^-1
// equals X13.
Report verify_k_is_x31(const SplitDecomposition& sd, const EquitableGenerators& x);

// The two closed forms of R:
//   R == a (X01 - X31) + a^-1 (X12 - X13)
//   R == (q - q^-1) (a q K0 F0 - a^-1 E1)
Report verify_r_forms(const SplitDecomposition& sd, const Representation& rep,
                      const EquitableGenerators& x, const Rational& a);

} // namespace qracah
