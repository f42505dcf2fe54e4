#include "qracah/psi.hpp"

namespace qracah {

namespace {

std::vector<int> block_offsets(const std::vector<int>& dims) {
    std::vector<int> off(dims.size() + 1, 0);
    for (std::size_t i = 0; i < dims.size(); ++i) off[i + 1] = off[i] + dims[i];
    return off;
}

std::vector<std::tuple<int, int, int>> profile_blocks(
    const Matrix& psi_adapted, const std::vector<int>& dims) {
    const auto off = block_offsets(dims);
    std::vector<std::tuple<int, int, int>> profile;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        int r = 0;
        if (i > 0) {
            const Matrix block = psi_adapted.submatrix(
                off[i - 1], off[i], off[i], off[i + 1]);
            r = rank(block);
        }
        profile.emplace_back(static_cast<int>(i), dims[i], r);
    }
    return profile;
}

// Requires every entry of m outside the blocks (i-1, i) to vanish; tag
// names the operator in the error message.
void require_lowering_shape(const Matrix& m, const std::vector<int>& dims,
                            const std::string& tag) {
    const auto off = block_offsets(dims);
    const int nb = static_cast<int>(dims.size());
    for (int bi = 0; bi < nb; ++bi)
        for (int bj = 0; bj < nb; ++bj) {
            if (bi == bj - 1) continue;
            for (int i = off[bi]; i < off[bi + 1]; ++i)
                for (int j = off[bj]; j < off[bj + 1]; ++j)
                    if (!m.at(i, j).is_zero())
                        throw ShapeViolation(
                            tag + " has a nonzero entry in block (" +
                            std::to_string(bi) + "," + std::to_string(bj) +
                            "), outside the lowering shape");
        }
}

} // namespace

PsiOperator solve_psi(const SplitDecomposition& sd, const Rational& q) {
    const std::vector<int>& dims = sd.block_dims;
    const int nb = static_cast<int>(dims.size());
    const int n = sd.k.rows();
    const auto off = block_offsets(dims);

    // Everything happens in the adapted basis, where the unknowns are the
    // entries of the lowering blocks (i-1, i) and R has blocks only at
    // (i+1, i). Both sides of the constraint then live on the block
    // diagonal, so only those coordinate equations are assembled; the full
    // matrix identity is re-checked at the end.
    const Matrix r_ad = sd.adapted_basis_inv * sd.r * sd.adapted_basis;
    const Matrix k_ad = sd.adapted_basis_inv * sd.k * sd.adapted_basis;
    const Matrix kinv_ad = sd.adapted_basis_inv * sd.kinv * sd.adapted_basis;
    const Matrix rhs_full = (q - q.inverse()) * (k_ad - kinv_ad);

    struct Unknown { int row; int col; };
    std::vector<Unknown> unknowns;
    for (int b = 1; b < nb; ++b)
        for (int i = off[b - 1]; i < off[b]; ++i)
            for (int j = off[b]; j < off[b + 1]; ++j)
                unknowns.push_back({i, j});
    const int nu = static_cast<int>(unknowns.size());

    // Equations: one per block-diagonal coordinate (p, c) with p, c in the
    // same block. (psi r_ad)[p][c] - (r_ad psi)[p][c] = rhs[p][c], linear in
    // the unknown entries of psi.
    int ne = 0;
    for (int b = 0; b < nb; ++b) ne += dims[b] * dims[b];
    Matrix sys(ne, nu);
    Matrix rhs(ne, 1);
    int row = 0;
    for (int b = 0; b < nb; ++b)
        for (int p = off[b]; p < off[b + 1]; ++p)
            for (int c = off[b]; c < off[b + 1]; ++c) {
                for (int u = 0; u < nu; ++u) {
                    const auto& [ur, uc] = unknowns[u];
                    Rational coeff(0);
                    if (ur == p) coeff += r_ad.at(uc, c);
                    if (uc == c) coeff -= r_ad.at(p, ur);
                    sys.at(row, u) = coeff;
                }
                rhs.at(row, 0) = rhs_full.at(p, c);
                ++row;
            }

    AffineSolution sol = solve_affine(sys, rhs);
    if (sol.homogeneous.dim() > 0)
        throw NonUniqueSolution(
            "psi system has a " + std::to_string(sol.homogeneous.dim()) +
                "-dimensional homogeneous kernel",
            sol.homogeneous.basis());

    PsiOperator out;
    out.psi_adapted = Matrix(n, n);
    for (int u = 0; u < nu; ++u)
        out.psi_adapted.at(unknowns[u].row, unknowns[u].col) =
            sol.particular.at(u, 0);

    // Full-matrix re-check of the commutator constraint.
    const Matrix residual =
        out.psi_adapted * r_ad - r_ad * out.psi_adapted - rhs_full;
    if (!residual.is_zero())
        throw Error("internal: solved psi fails the full commutator "
                    "constraint");

    out.psi = sd.adapted_basis * out.psi_adapted * sd.adapted_basis_inv;
    out.block_profile = profile_blocks(out.psi_adapted, dims);
    return out;
}

PsiOperator psi_from_loperator(const LOperator& l, const Rational& a,
                               const SplitDecomposition& sd) {
    if (l.t != a * a)
        throw WrongParameter(
            "closed-form psi requires the spectral parameter t == a^2 "
            "(got t = " + l.t.str() + ", a^2 = " + (a * a).str() + ")");
    const Matrix l00inv = l00_inverse(l);
    PsiOperator out;
    out.psi = (-a) * (l00inv * l.l01);
    out.psi_adapted = sd.adapted_basis_inv * out.psi * sd.adapted_basis;
    require_lowering_shape(out.psi_adapted, sd.block_dims, "closed-form psi");
    out.block_profile = profile_blocks(out.psi_adapted, sd.block_dims);
    return out;
}

Report verify_psi_agreement(const PsiOperator& solved,
                            const PsiOperator& closed_form) {
    Report out;
    out.add(check_zero("psi.routes_agree",
                       "psi solved from the commutator constraint equals "
                       "-a L00^-1 L01",
                       [&] { return solved.psi - closed_form.psi; }));
    return out;
}

Report verify_psi_identities(const LOperator& l, const Representation& rep,
                             const SplitDecomposition& sd, const Rational& a) {
    if (l.t != a * a)
        throw WrongParameter(
            "identity chains require the spectral parameter t == a^2");

    const Rational& q = rep.q;
    const Rational qi = q.inverse();
    const Rational ai = a.inverse();
    const Rational am2 = (a * a).inverse();
    const Rational c = q - qi;
    const Matrix &L00 = l.l00, &L01 = l.l01, &L10 = l.l10, &L11 = l.l11;
    const Matrix &E1 = rep.e1, &F0 = rep.f0, &K0 = rep.k0, &K1 = rep.k1;
    const Matrix psi_hat = (-a) * (l00_inverse(l) * L01);
    const Matrix &R = sd.r, &K = sd.k, &Kinv = sd.kinv;

    Report out;
    auto add = [&](const std::string& name, const std::string& identity,
                   std::function<Matrix()> residual) {
        out.add(check_zero("proof." + name, identity, residual));
    };

    add("k0_weight", "K0 psi == q^2 psi K0",
        [&] { return K0 * psi_hat - (q * q) * (psi_hat * K0); });

    add("commutator", "psi R - R psi == (q - q^-1)(K - K^-1)",
        [&] { return psi_hat * R - R * psi_hat - c * (K - Kinv); });

    add("l00_commutator", "L00 (psi R - R psi) == (q - q^-1) L00 (K0 - K1)",
        [&] {
            return L00 * (psi_hat * R - R * psi_hat) -
                   c * (L00 * (K0 - K1));
        });

    add("combined",
        "a q L00 (psi K0 F0 - K0 F0 psi) - a^-1 L00 (psi E1 - E1 psi) "
        "+ L00 (K1 - K0) == 0",
        [&] {
            const Matrix kf = K0 * F0;
            return (a * q) * (L00 * (psi_hat * kf - kf * psi_hat)) -
                   ai * (L00 * (psi_hat * E1 - E1 * psi_hat)) +
                   L00 * (K1 - K0);
        });

    // Expansion chain for L00 psi K0 F0.
    add("chain_psi_k0f0_step1", "L00 psi K0 F0 == -a L01 K0 F0",
        [&] { return L00 * psi_hat * (K0 * F0) + a * (L01 * (K0 * F0)); });
    add("chain_psi_k0f0_step2", "-a L01 K0 F0 == -a q^-2 K0 L01 F0",
        [&] {
            return (-a) * (L01 * (K0 * F0)) +
                   (a * qi * qi) * (K0 * (L01 * F0));
        });
    add("chain_psi_k0f0_step3",
        "-a q^-2 K0 L01 F0 == -a q^-1 K0 (F0 L01 - a^-2 L00 + a^-2 K1 L11)",
        [&] {
            const Matrix rhs_inner =
                F0 * L01 - am2 * L00 + am2 * (K1 * L11);
            return (-(a * qi * qi)) * (K0 * (L01 * F0)) +
                   (a * qi) * (K0 * rhs_inner);
        });

    // Expansion chain for L00 K0 F0 psi.
    add("chain_k0f0_psi_step1", "L00 K0 F0 psi == K0 L00 F0 psi",
        [&] {
            return L00 * (K0 * (F0 * psi_hat)) -
                   K0 * (L00 * (F0 * psi_hat));
        });
    add("chain_k0f0_psi_step2",
        "K0 L00 F0 psi == q^-1 K0 (a^-2 K1 L10 + F0 L00) psi",
        [&] {
            const Matrix inner = am2 * (K1 * L10) + F0 * L00;
            return K0 * (L00 * (F0 * psi_hat)) -
                   qi * (K0 * (inner * psi_hat));
        });
    add("chain_k0f0_psi_step3",
        "q^-1 K0 (a^-2 K1 L10 + F0 L00) psi == "
        "q^-1 K0 (a^-2 K1 L10 psi - a F0 L01)",
        [&] {
            const Matrix lhs_inner =
                (am2 * (K1 * L10) + F0 * L00) * psi_hat;
            const Matrix rhs_inner =
                am2 * (K1 * (L10 * psi_hat)) - a * (F0 * L01);
            return qi * (K0 * lhs_inner) - qi * (K0 * rhs_inner);
        });

    // Expansion chain for L00 psi E1.
    add("chain_psi_e1_step1", "L00 psi E1 == -a L01 E1",
        [&] { return L00 * (psi_hat * E1) + a * (L01 * E1); });
    add("chain_psi_e1_step2", "-a L01 E1 == -a (q E1 L01 + L11 - L00 K1)",
        [&] {
            return (-a) * (L01 * E1) +
                   a * (q * (E1 * L01) + L11 - L00 * K1);
        });
    add("chain_psi_e1_step3",
        "-a (q E1 L01 + L11 - L00 K1) == -a (q E1 L01 + L11 - K1 L00)",
        [&] { return a * (L00 * K1) - a * (K1 * L00); });

    // Expansion chain for L00 E1 psi.
    add("chain_e1_psi_step1", "L00 E1 psi == (L10 + q E1 L00) psi",
        [&] {
            return L00 * (E1 * psi_hat) -
                   (L10 + q * (E1 * L00)) * psi_hat;
        });
    add("chain_e1_psi_step2",
        "(L10 + q E1 L00) psi == L10 psi - q a E1 L01",
        [&] {
            return (L10 + q * (E1 * L00)) * psi_hat -
                   (L10 * psi_hat - (q * a) * (E1 * L01));
        });

    add("l00_k1_commute", "L00 K1 == K1 L00",
        [&] { return L00 * K1 - K1 * L00; });
    add("l00_k0_commute", "L00 K0 == K0 L00",
        [&] { return L00 * K0 - K0 * L00; });

    return out;
}

} // namespace qracah
