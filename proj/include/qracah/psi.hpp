#pragma once

#include <tuple>

#include "qracah/loperator.hpp"
#include "qracah/tdpair.hpp"

namespace qracah {

// The psi linear system has more than one solution; indicates an upstream
// construction bug, never expected for admissible non-degenerate input.
class NonUniqueSolution : public Error {
public:
    NonUniqueSolution(const std::string& msg, Matrix kernel)
        : Error(msg), kernel_(std::move(kernel)) {}

    // Columns span the homogeneous solution space (in unknown coordinates).
    const Matrix& kernel() const { return kernel_; }

private:
    Matrix kernel_;
};

// The L-operator route to psi demands the spectral parameter be tied to the
// eigenvalue base parameter (t == a^2).
class WrongParameter : public Error {
public:
    using Error::Error;
};

// An operator fails the block-lowering shape psi U_i <= U_(i-1).
class ShapeViolation : public Error {
public:
    using Error::Error;
};

// The lowering operator psi in both the original module basis and the basis
// adapted to the split decomposition (where its only nonzero blocks sit at
// block position (i-1, i)). block_profile rows are
// (i, dim U_i, rank of the block mapping U_i into U_(i-1)).
struct PsiOperator {
    Matrix psi;
    Matrix psi_adapted;
    std::vector<std::tuple<int, int, int>> block_profile;
};

// Solves for psi directly from its defining constraints:
//   psi U_i <= U_(i-1)   and   psi R - R psi == (q - q^-1)(K - K^-1).
// Unknowns are exactly the entries of the lowering blocks in the adapted
// basis; the affine system is solved exactly. Throws NoSolutionError if
// inconsistent and NonUniqueSolution if the homogeneous kernel is nonzero.
// The solved operator is re-checked against the full matrix constraint.
PsiOperator solve_psi(const SplitDecomposition& sd, const Rational& q);

// The closed-form route: psi == -a L00^-1 L01 for the L-operator at t == a^2.
// Throws WrongParameter when t != a^2, SingularL00 when L00 is not
// invertible, and ShapeViolation if the result fails the block-lowering
// shape against the given split decomposition.
PsiOperator psi_from_loperator(const LOperator& l, const Rational& a,
                               const SplitDecomposition& sd);

// The two routes agree entrywise. The failure witness is the difference.
Report verify_psi_agreement(const PsiOperator& solved, const PsiOperator& closed_form);

// The identity chains behind the closed form, checked step by step on the
// module: the K0 weight relation for psi, the reduction of the commutator
// constraint through L00, the combined identity it reduces to, and the four
// expansion chains for L00 psi K0 F0, L00 K0 F0 psi, L00 psi E1, and
// L00 E1 psi, plus L00 commuting with K0 and K1. Requires t == a^2.
Report verify_psi_identities(const LOperator& l, const Representation& rep,
                             const SplitDecomposition& sd, const Rational& a);

} // namespace qracah
