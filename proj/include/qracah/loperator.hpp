#pragma once

#include "qracah/uq_module.hpp"

namespace qracah {

// L00 is singular at the requested spectral parameter. Carries the exact
// rank; for a single evaluation factor also the basis indices i whose
// diagonal entry vanishes (those with t == mu * q^(d+1-2i)).
class SingularL00 : public Error {
public:
    SingularL00(const std::string& msg, int rank, std::vector<int> offending = {})
        : Error(msg), rank_(rank), offending_(std::move(offending)) {}

    int rank() const { return rank_; }
    const std::vector<int>& offending_indices() const { return offending_; }

private:
    int rank_;
    std::vector<int> offending_;
};

// The four components of an L-operator with spectral parameter t, acting on
// a module of dimension dim(). The full operator on (module) (x) (dim-2
// auxiliary space) is assembled by full_map().
struct LOperator {
    Rational t;
    Matrix l00, l01, l10, l11;

    int dim() const { return l00.rows(); }
};

// L-operator of a single evaluation factor (diameter d, evaluation parameter
// mu), spectral parameter t, overall normalization xi. Entries on the
// standard basis (rows/cols indexed 0..d):
//   L00[i][i]     = xi * (q^(1-i)   - mu^-1 t q^(i-d)) / (q - q^-1)
//   L01[i][i-1]   = xi * [i] q^(1-i)
//   L10[i-1][i]   = xi * [d-i+1] q^(i-d) mu^-1 t
//   L11[i][i]     = xi * (q^(i-d+1) - mu^-1 t q^(-i))  / (q - q^-1)
LOperator eval_loperator(int d, const Rational& mu, const Rational& t,
                         const Rational& xi, const Rational& q);

// Composite L-operator on a tensor product (first factor slowest):
//   L_rs = sum_k  L_rk (x) L_ks.
// Both inputs must share the same spectral parameter.
LOperator tensor_loperator(const LOperator& lu, const LOperator& lv);

// Composite L-operator over all factors of an admissible ParamSet, at the
// given spectral parameter, applying each factor's xi.
LOperator loperator_from_params(const ParamSet& p, const Rational& t);

// Matrix of the full operator on (module) (x) Q^2, module index slowest:
// entry (2i + r, 2j + s) = L_rs[i][j].
Matrix full_map(const LOperator& l);

// The twenty-four exchange identities between the four components and the
// generator matrices of the module the L-operator lives on. One record per
// identity, grouped by generator.
Report verify_loperator_equations(const LOperator& l, const Representation& rep);

// The intertwining property: for every generator u, the full map satisfies
// L * Delta(u) == Delta_op(u) * L on (module) (x) (two-dimensional evaluation
// module at the spectral parameter), where Delta is the coproduct action
// used by tensor_rep and Delta_op is its opposite.
Report verify_intertwiner(const LOperator& l, const Representation& rep);

// Exact inverse of L00. Throws SingularL00 when singular; when factor_spec
// describes a single evaluation factor, the error lists the offending basis
// indices.
Matrix l00_inverse(const LOperator& l,
                   const std::vector<std::pair<int, Rational>>* factor_spec = nullptr);

} // namespace qracah
