#include "qracah/tdpair.hpp"

#include <algorithm>

namespace qracah {

namespace {

std::vector<Rational> predicted_eigenvalues(const Rational& base,
                                            const Rational& q, int d) {
    std::vector<Rational> th;
    th.reserve(d + 1);
    for (int i = 0; i <= d; ++i)
        th.push_back(base * q.pow(2 * i - d) + base.inverse() * q.pow(d - 2 * i));
    return th;
}

// Eigenspace for the predicted eigenvalue, as the kernel of (m - ev).
Subspace eigenspace(const Matrix& m, const Rational& ev) {
    const Matrix shifted = m - ev * Matrix::identity(m.rows());
    return Subspace::span(kernel_basis(shifted));
}

std::vector<Subspace> eigenspaces_or_throw(const Matrix& m,
                                           const std::vector<Rational>& evs,
                                           const std::string& label) {
    std::vector<Subspace> spaces;
    int total = 0;
    for (std::size_t i = 0; i < evs.size(); ++i) {
        Subspace s = eigenspace(m, evs[i]);
        if (s.dim() == 0)
            throw DegenerateParameters(
                "degenerate parameters: predicted eigenvalue " + evs[i].str() +
                " of " + label + " (index " + std::to_string(i) +
                ") has a zero eigenspace");
        total += s.dim();
        spaces.push_back(std::move(s));
    }
    if (total != m.rows())
        throw DegenerateParameters(
            "degenerate parameters: eigenspaces of " + label +
            " span dimension " + std::to_string(total) + " of " +
            std::to_string(m.rows()));
    return spaces;
}

void check_distinct(const std::vector<Rational>& evs, const std::string& label) {
    for (std::size_t i = 0; i < evs.size(); ++i)
        for (std::size_t j = i + 1; j < evs.size(); ++j)
            if (evs[i] == evs[j])
                throw DegenerateParameters(
                    "degenerate parameters: predicted eigenvalues " +
                    std::to_string(i) + " and " + std::to_string(j) + " of " +
                    label + " coincide (" + evs[i].str() + ")");
}

// True iff op maps each spaces[perm[i]] into the sum of its neighbors
// spaces[perm[i-1]] + spaces[perm[i]] + spaces[perm[i+1]].
bool tridiagonal_under_ordering(const Matrix& op,
                                const std::vector<Subspace>& spaces,
                                const std::vector<int>& perm,
                                std::string* first_violation = nullptr) {
    const int d = static_cast<int>(spaces.size()) - 1;
    for (int i = 0; i <= d; ++i) {
        Subspace allowed = spaces[perm[i]];
        if (i > 0) allowed = sum(allowed, spaces[perm[i - 1]]);
        if (i < d) allowed = sum(allowed, spaces[perm[i + 1]]);
        const Matrix& basis = spaces[perm[i]].basis();
        for (int j = 0; j < basis.cols(); ++j) {
            if (!allowed.contains(op * basis.column(j))) {
                if (first_violation)
                    *first_violation =
                        "image of position " + std::to_string(i) +
                        " (eigenspace " + std::to_string(perm[i]) +
                        ") leaves its tridiagonal band";
                return false;
            }
        }
    }
    return true;
}

std::vector<int> iota_perm(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

std::vector<Rational> flatten(const Matrix& m) {
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

// Incrementally maintained reduced row echelon span of flattened matrices.
class RowSpan {
public:
    explicit RowSpan(int width) : width_(width) {}

    int dim() const { return static_cast<int>(rows_.size()); }

    // Reduces v against the span; if independent, inserts it (keeping the
    // stored rows mutually reduced) and returns true.
    bool insert(std::vector<Rational> v) {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rational c = v[pivots_[k]];
            if (c.is_zero()) continue;
            for (int j = 0; j < width_; ++j) v[j] -= c * rows_[k][j];
        }
        int p = -1;
        for (int j = 0; j < width_; ++j)
            if (!v[j].is_zero()) { p = j; break; }
        if (p < 0) return false;
        const Rational inv = v[p].inverse();
        for (int j = 0; j < width_; ++j) v[j] *= inv;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rational c = rows_[k][p];
            if (c.is_zero()) continue;
            for (int j = 0; j < width_; ++j) rows_[k][j] -= c * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

private:
    int width_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> pivots_;
};

} // namespace

TDPairData build_td_pair(const Representation& rep, const Rational& a,
                         const Rational& b) {
    if (a.is_zero() || b.is_zero())
        throw ParameterError("a and b must be nonzero");

    TDPairData td;
    td.q = rep.q;
    td.a = a;
    td.b = b;
    td.d = rep.total_diameter();
    td.x = equitable_generators(rep);
    td.a_op = a * td.x.x01 + a.inverse() * td.x.x12;
    td.astar_op = b * td.x.x23 + b.inverse() * td.x.x30;
    td.theta = predicted_eigenvalues(a, rep.q, td.d);
    td.theta_star = predicted_eigenvalues(b, rep.q, td.d);

    check_distinct(td.theta, "the first operator");
    check_distinct(td.theta_star, "the second operator");
    td.v_spaces = eigenspaces_or_throw(td.a_op, td.theta, "the first operator");
    td.vstar_spaces =
        eigenspaces_or_throw(td.astar_op, td.theta_star, "the second operator");
    return td;
}

Report verify_tridiagonal_axioms(const TDPairData& td) {
    const int d = td.d;
    const int n = td.dim();
    Report out;

    auto eigensum = [&](const std::string& name,
                        const std::vector<Subspace>& spaces) {
        out.add(check_true(
            "tdpair.eigensum_" + name,
            "eigenspaces are nonzero and sum directly to the whole module",
            [&] {
                int total = 0;
                for (const auto& s : spaces) {
                    if (s.dim() == 0) return false;
                    total += s.dim();
                }
                return total == n && is_direct_sum(spaces);
            }));
    };
    eigensum("a", td.v_spaces);
    eigensum("astar", td.vstar_spaces);

    auto eigen_action = [&](const std::string& name, const Matrix& op,
                            const std::vector<Subspace>& spaces,
                            const std::vector<Rational>& evs) {
        out.add(check_zero(
            "tdpair.eigen_" + name,
            "operator acts on eigenspace i as multiplication by eigenvalue i",
            [&]() -> Matrix {
                for (int i = 0; i <= d; ++i) {
                    Matrix res = op * spaces[i].basis() - evs[i] * spaces[i].basis();
                    if (!res.is_zero()) return res;
                }
                return Matrix(0, 0);
            }));
    };
    eigen_action("a", td.a_op, td.v_spaces, td.theta);
    eigen_action("astar", td.astar_op, td.vstar_spaces, td.theta_star);

    const std::vector<int> id_perm = iota_perm(d + 1);
    std::vector<int> rev_perm = id_perm;
    std::reverse(rev_perm.begin(), rev_perm.end());

    auto tridiag_check = [&](const std::string& name,
                             const std::string& identity, const Matrix& op,
                             const std::vector<Subspace>& spaces) {
        std::string why;
        out.add(check_true(name, identity, [&] {
            return tridiagonal_under_ordering(op, spaces, id_perm, &why);
        }));
        if (!why.empty()) out.checks.back().note = why;
    };
    tridiag_check("tdpair.tridiag_astar_on_v",
                  "A* V_i <= V_(i-1) + V_i + V_(i+1)", td.astar_op,
                  td.v_spaces);
    tridiag_check("tdpair.tridiag_a_on_vstar",
                  "A V*_i <= V*_(i-1) + V*_i + V*_(i+1)", td.a_op,
                  td.vstar_spaces);
    out.add(check_true(
        "tdpair.reversed_ordering_standard",
        "the reversed eigenvalue orderings also satisfy the containments",
        [&] {
            return tridiagonal_under_ordering(td.astar_op, td.v_spaces,
                                              rev_perm) &&
                   tridiagonal_under_ordering(td.a_op, td.vstar_spaces,
                                              rev_perm);
        }));

    if (d == 2) {
        out.add(check_true(
            "tdpair.nonstandard_orderings_fail",
            "every ordering other than the identity and the reversal "
            "violates a tridiagonal containment",
            [&] {
                std::vector<int> perm = id_perm;
                do {
                    if (perm == id_perm || perm == rev_perm) continue;
                    if (tridiagonal_under_ordering(td.astar_op, td.v_spaces,
                                                   perm) ||
                        tridiagonal_under_ordering(td.a_op, td.vstar_spaces,
                                                   perm))
                        return false;
                } while (std::next_permutation(perm.begin(), perm.end()));
                return true;
            }));
    }

    if (d >= 3) {
        const Rational expected =
            td.q * td.q + Rational(1) + (td.q * td.q).inverse();
        out.add(check_true(
            "tdpair.eigenvalue_ratio",
            "(theta_(i-2) - theta_(i+1)) / (theta_(i-1) - theta_i) == "
            "q^2 + 1 + q^-2 for both eigenvalue sequences",
            [&] {
                for (const auto* seq : {&td.theta, &td.theta_star})
                    for (int i = 2; i + 1 <= d; ++i) {
                        const Rational dn = (*seq)[i - 1] - (*seq)[i];
                        if (dn.is_zero()) return false;
                        if (((*seq)[i - 2] - (*seq)[i + 1]) / dn != expected)
                            return false;
                    }
                return true;
            }));
    }
    return out;
}

IrreducibilityCertificate word_span(const std::vector<Matrix>& generators,
                                    int dim) {
    const int target = dim * dim;
    RowSpan span(target);
    IrreducibilityCertificate cert;

    std::vector<Matrix> frontier;
    span.insert(flatten(Matrix::identity(dim)));
    frontier.push_back(Matrix::identity(dim));
    cert.span_profile.push_back(span.dim());

    int rounds = 0;
    const int cap = target + 1;
    while (!frontier.empty() && span.dim() < target && rounds < cap) {
        std::vector<Matrix> next;
        for (const auto& w : frontier)
            for (const auto& g : generators) {
                Matrix p = g * w;
                if (span.insert(flatten(p))) next.push_back(std::move(p));
            }
        frontier = std::move(next);
        cert.span_profile.push_back(span.dim());
        ++rounds;
    }

    cert.span_dim = span.dim();
    cert.irreducible = cert.span_dim == target;
    cert.inconclusive = !cert.irreducible && !frontier.empty();
    return cert;
}

IrreducibilityCertificate verify_irreducible(const TDPairData& td) {
    return word_span({td.a_op, td.astar_op}, td.dim());
}

SplitDecomposition split_decomposition(const TDPairData& td) {
    const int d = td.d;
    const int n = td.dim();

    // Prefix sums of V*_i and of V_i.
    std::vector<Subspace> star_prefix, v_prefix;
    star_prefix.push_back(td.vstar_spaces[0]);
    v_prefix.push_back(td.v_spaces[0]);
    for (int i = 1; i <= d; ++i) {
        star_prefix.push_back(sum(star_prefix.back(), td.vstar_spaces[i]));
        v_prefix.push_back(sum(v_prefix.back(), td.v_spaces[i]));
    }

    SplitDecomposition sd;
    int total = 0;
    for (int i = 0; i <= d; ++i) {
        Subspace u = intersect(star_prefix[i], v_prefix[d - i]);
        total += u.dim();
        sd.block_dims.push_back(u.dim());
        sd.u_spaces.push_back(std::move(u));
    }
    if (total != n || !is_direct_sum(sd.u_spaces))
        throw DegenerateParameters(
            "degenerate parameters: split components fail to sum directly "
            "(total dimension " + std::to_string(total) + " of " +
            std::to_string(n) + ")");

    // Partial-sum identities tie the split components back to the
    // eigenspace filtrations.
    Subspace lower = Subspace::zero(n);
    std::vector<Subspace> upper_suffix(d + 2, Subspace::zero(n));
    for (int i = d; i >= 0; --i)
        upper_suffix[i] = sum(upper_suffix[i + 1], sd.u_spaces[i]);
    for (int i = 0; i <= d; ++i) {
        lower = sum(lower, sd.u_spaces[i]);
        if (lower != star_prefix[i])
            throw DegenerateParameters(
                "degenerate parameters: lower partial sums of the split "
                "components do not match the second operator's filtration at "
                "index " + std::to_string(i));
        if (upper_suffix[i] != v_prefix[d - i])
            throw DegenerateParameters(
                "degenerate parameters: upper partial sums of the split "
                "components do not match the first operator's filtration at "
                "index " + std::to_string(i));
    }

    // Adapted basis and the K, R operators.
    Matrix p(n, 0);
    std::vector<Rational> diag;
    for (int i = 0; i <= d; ++i) {
        p = Matrix::hconcat(p, sd.u_spaces[i].basis());
        for (int j = 0; j < sd.block_dims[i]; ++j)
            diag.push_back(td.q.pow(d - 2 * i));
    }
    sd.adapted_basis = p;
    sd.adapted_basis_inv = inverse(p);

    std::vector<Rational> diag_inv;
    for (const auto& x : diag) diag_inv.push_back(x.inverse());
    sd.k = p * Matrix::diagonal(diag) * sd.adapted_basis_inv;
    sd.kinv = p * Matrix::diagonal(diag_inv) * sd.adapted_basis_inv;
    sd.r = td.a_op - td.a * sd.k - td.a.inverse() * sd.kinv;

    // Raising and lowering shapes, verified exactly at construction.
    for (int i = 0; i <= d; ++i) {
        const Subspace raised =
            i + 1 <= d ? sd.u_spaces[i + 1] : Subspace::zero(n);
        const Subspace lowered =
            i - 1 >= 0 ? sd.u_spaces[i - 1] : Subspace::zero(n);
        const Matrix& basis = sd.u_spaces[i].basis();
        for (int j = 0; j < basis.cols(); ++j) {
            if (!raised.contains(sd.r * basis.column(j)))
                throw DegenerateParameters(
                    "degenerate parameters: R does not raise split component " +
                    std::to_string(i));
            const Matrix shifted =
                td.astar_op * basis.column(j) -
                td.theta_star[i] * basis.column(j);
            if (!lowered.contains(shifted))
                throw DegenerateParameters(
                    "degenerate parameters: (A* - theta*_i) does not lower "
                    "split component " + std::to_string(i));
        }
    }
    return sd;
}

Report verify_split_identities(const TDPairData& td,
                               const SplitDecomposition& sd) {
    const int d = td.d;
    const int n = td.dim();
    Report out;

    out.add(check_true("split.direct_sum",
                       "U_0 + ... + U_d is direct and exhausts the module",
                       [&] {
                           int total = 0;
                           for (const auto& u : sd.u_spaces) total += u.dim();
                           return total == n && is_direct_sum(sd.u_spaces);
                       }));

    out.add(check_true(
        "split.partial_sums_lower",
        "U_0 + ... + U_i == V*_0 + ... + V*_i for all i",
        [&] {
            Subspace acc = Subspace::zero(n), star = Subspace::zero(n);
            for (int i = 0; i <= d; ++i) {
                acc = sum(acc, sd.u_spaces[i]);
                star = sum(star, td.vstar_spaces[i]);
                if (acc != star) return false;
            }
            return true;
        }));

    out.add(check_true(
        "split.partial_sums_upper",
        "U_i + ... + U_d == V_0 + ... + V_(d-i) for all i",
        [&] {
            Subspace acc = Subspace::zero(n), v = Subspace::zero(n);
            for (int i = d; i >= 0; --i) {
                acc = sum(acc, sd.u_spaces[i]);
                v = sum(v, td.v_spaces[d - i]);
                if (acc != v) return false;
            }
            return true;
        }));

    out.add(check_zero("split.k_weight", "(K - q^(d-2i)) U_i == 0",
                       [&]() -> Matrix {
                           for (int i = 0; i <= d; ++i) {
                               Matrix res =
                                   sd.k * sd.u_spaces[i].basis() -
                                   td.q.pow(d - 2 * i) * sd.u_spaces[i].basis();
                               if (!res.is_zero()) return res;
                           }
                           return Matrix(0, 0);
                       }));

    out.add(check_zero(
        "split.k_theta", "(a K + a^-1 K^-1 - theta_(d-i)) U_i == 0",
        [&]() -> Matrix {
            const Matrix m = td.a * sd.k + td.a.inverse() * sd.kinv;
            for (int i = 0; i <= d; ++i) {
                Matrix res = m * sd.u_spaces[i].basis() -
                             td.theta[d - i] * sd.u_spaces[i].basis();
                if (!res.is_zero()) return res;
            }
            return Matrix(0, 0);
        }));

    out.add(check_zero("split.akr", "A == a K + a^-1 K^-1 + R", [&] {
        return td.a_op - (td.a * sd.k + td.a.inverse() * sd.kinv + sd.r);
    }));

    out.add(check_true("split.raising", "R U_i <= U_(i+1)", [&] {
        for (int i = 0; i <= d; ++i) {
            const Subspace target =
                i + 1 <= d ? sd.u_spaces[i + 1] : Subspace::zero(n);
            const Matrix& basis = sd.u_spaces[i].basis();
            for (int j = 0; j < basis.cols(); ++j)
                if (!target.contains(sd.r * basis.column(j))) return false;
        }
        return true;
    }));

    out.add(check_true("split.lowering", "(A* - theta*_i) U_i <= U_(i-1)", [&] {
        for (int i = 0; i <= d; ++i) {
            const Subspace target =
                i - 1 >= 0 ? sd.u_spaces[i - 1] : Subspace::zero(n);
            const Matrix& basis = sd.u_spaces[i].basis();
            for (int j = 0; j < basis.cols(); ++j) {
                const Matrix v = td.astar_op * basis.column(j) -
                                 td.theta_star[i] * basis.column(j);
                if (!target.contains(v)) return false;
            }
        }
        return true;
    }));

    out.add(check_zero("split.r_nilpotent", "R^(d+1) == 0",
                       [&] { return sd.r.pow(d + 1); }));
    return out;
}

Report verify_k_is_x31(const SplitDecomposition& sd,
                       const EquitableGenerators& x) {
    Report out;
    out.add(check_zero("split.k_is_x31", "K == X31",
                       [&] { return sd.k - x.x31; }));
    out.add(check_zero("split.kinv_is_x13", "K^-1 == X13",
                       [&] { return sd.kinv - x.x13; }));
    out.add(check_zero("split.k_kinv", "K*K^-1 == 1", [&] {
        return sd.k * sd.kinv - Matrix::identity(sd.k.rows());
    }));
    return out;
}

Report verify_r_forms(const SplitDecomposition& sd, const Representation& rep,
                      const EquitableGenerators& x, const Rational& a) {
    const Rational& q = rep.q;
    Report out;
    out.add(check_zero("split.r_equitable_form",
                       "R == a (X01 - X31) + a^-1 (X12 - X13)", [&] {
                           return sd.r - (a * (x.x01 - x.x31) +
                                          a.inverse() * (x.x12 - x.x13));
                       }));
    out.add(check_zero(
        "split.r_chevalley_form",
        "R == (q - q^-1) (a q K0 F0 - a^-1 E1)", [&] {
            const Matrix rhs =
                (q - q.inverse()) *
                ((a * q) * (rep.k0 * rep.f0) - a.inverse() * rep.e1);
            return sd.r - rhs;
        }));
    return out;
}

} // namespace qracah
