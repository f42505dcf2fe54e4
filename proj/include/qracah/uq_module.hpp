#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qracah/matrix.hpp"
#include "qracah/report.hpp"

namespace qracah {

// The eight generator matrices of a finite-dimensional module.
enum class Gen { E0, E1, F0, F1, K0, K0inv, K1, K1inv };

constexpr std::array<Gen, 8> kAllGens = {Gen::E0, Gen::E1, Gen::F0, Gen::F1,
                                         Gen::K0, Gen::K0inv, Gen::K1, Gen::K1inv};

const char* to_string(Gen g);

// A concrete module: the eight generator matrices over Q, plus bookkeeping.
// Basis vectors are indexed by multi-indices (i_1, ..., i_f), one index per
// tensor factor, ordered lexicographically with the FIRST factor slowest.
struct Representation {
    int dim = 0;
    Rational q;
    Matrix e0, e1, f0, f1, k0, k0inv, k1, k1inv;
    std::vector<std::pair<int, Rational>> factor_spec;  // (diameter, mu) per factor
    std::vector<std::vector<int>> basis_labels;

    const Matrix& gen(Gen g) const;
    int total_diameter() const;
};

// The (d+1)-dimensional module with evaluation parameter mu. On the standard
// basis v_0..v_d:
//   K1 v_i = q^(d-2i) v_i          K0 v_i = q^(2i-d) v_i
//   E1 v_i = [d-i+1] v_(i-1)       F1 v_i = [i+1] v_(i+1)
//   E0 v_i = mu [i+1] v_(i+1)      F0 v_i = mu^-1 [d-i+1] v_(i-1)
// Requires d >= 1, mu nonzero, q admissible.
Representation eval_module_rep(int d, const Rational& mu, const Rational& q);

// Tensor product module. Generators act by
//   K  -> K (x) K            (and the same for K^-1)
//   E  -> E (x) 1 + K (x) E
//   F  -> 1 (x) F + F (x) K^-1
// Both factors must share the same q.
Representation tensor_rep(const Representation& u, const Representation& v);

// Left-associated tensor product over all factors of an admissible ParamSet.
Representation rep_from_params(const ParamSet& p);

// Checks the fifteen defining relation families on the given matrices:
// the K inverses, K0 K1 = 1 = K1 K0, the eight K/E and K/F commutation
// twists, [Ei, Fi] = (Ki - Ki^-1)/(q - q^-1), [Ei, Fj] = 0 for i != j, and
// the four cubic Serre relations. One record per family.
Report verify_defining_relations(const Representation& rep);

// The alternative generating set X01, X12, X23, X30, X13 = K1, X31 = K0.
struct EquitableGenerators {
    Matrix x01, x12, x23, x30, x13, x31;
};

// Substitution:
//   X01 = K0 + q (q - q^-1) K0 F0      X12 = K1 - (q - q^-1) E1
//   X23 = K1 + q (q - q^-1) K1 F1      X30 = K0 - (q - q^-1) E0
// The inverse substitution is verified to reproduce all eight generator
// matrices exactly; a mismatch throws Error (internal inconsistency).
EquitableGenerators equitable_generators(const Representation& rep);

// Checks the relations this generating set satisfies: X13 X31 = 1 = X31 X13,
// the eight q-Weyl pairs (q X Y - q^-1 Y X)/(q - q^-1) = 1, and the four
// cubic relations between opposite generators. One record each.
Report verify_equitable_relations(const EquitableGenerators& x, const Rational& q);

} // namespace qracah
