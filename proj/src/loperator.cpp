#include "qracah/loperator.hpp"

namespace qracah {

LOperator eval_loperator(int d, const Rational& mu, const Rational& t,
                         const Rational& xi, const Rational& q) {
    if (d < 1) throw ParameterError("diameter must be >= 1");
    if (mu.is_zero()) throw ParameterError("evaluation parameter zero");
    if (xi.is_zero()) throw ParameterError("normalization xi zero");
    if (q.is_zero() || q == Rational(1) || q == Rational(-1))
        throw ParameterError("q is a root of unity");

    const int n = d + 1;
    const Rational denom = q - q.inverse();
    const Rational mi_t = mu.inverse() * t;

    LOperator l;
    l.t = t;
    l.l00 = l.l01 = l.l10 = l.l11 = Matrix(n, n);
    for (int i = 0; i <= d; ++i) {
        l.l00.at(i, i) = xi * (q.pow(1 - i) - mi_t * q.pow(i - d)) / denom;
        l.l11.at(i, i) = xi * (q.pow(i - d + 1) - mi_t * q.pow(-i)) / denom;
        if (i >= 1) {
            l.l01.at(i, i - 1) = xi * qint(i, q) * q.pow(1 - i);
            l.l10.at(i - 1, i) = xi * qint(d - i + 1, q) * q.pow(i - d) * mi_t;
        }
    }
    return l;
}

LOperator tensor_loperator(const LOperator& lu, const LOperator& lv) {
    if (lu.t != lv.t)
        throw ParameterError("composite L-operator factors with different "
                             "spectral parameters");
    LOperator r;
    r.t = lu.t;
    r.l00 = Matrix::kron(lu.l00, lv.l00) + Matrix::kron(lu.l01, lv.l10);
    r.l01 = Matrix::kron(lu.l00, lv.l01) + Matrix::kron(lu.l01, lv.l11);
    r.l10 = Matrix::kron(lu.l10, lv.l00) + Matrix::kron(lu.l11, lv.l10);
    r.l11 = Matrix::kron(lu.l10, lv.l01) + Matrix::kron(lu.l11, lv.l11);
    return r;
}

LOperator loperator_from_params(const ParamSet& p, const Rational& t) {
    validate_params(p);
    LOperator l = eval_loperator(p.factors[0].d, p.factors[0].mu, t,
                                 p.factors[0].xi, p.q);
    for (std::size_t j = 1; j < p.factors.size(); ++j)
        l = tensor_loperator(
            l, eval_loperator(p.factors[j].d, p.factors[j].mu, t,
                              p.factors[j].xi, p.q));
    return l;
}

Matrix full_map(const LOperator& l) {
    const int n = l.dim();
    Matrix m(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.at(2 * i + 0, 2 * j + 0) = l.l00.at(i, j);
            m.at(2 * i + 0, 2 * j + 1) = l.l01.at(i, j);
            m.at(2 * i + 1, 2 * j + 0) = l.l10.at(i, j);
            m.at(2 * i + 1, 2 * j + 1) = l.l11.at(i, j);
        }
    return m;
}

Report verify_loperator_equations(const LOperator& l, const Representation& rep) {
    if (l.dim() != rep.dim)
        throw DimensionMismatch("L-operator and module dimensions differ");
    const Rational& q = rep.q;
    const Rational qi = q.inverse();
    const Rational q2 = q * q;
    const Rational qm2 = q2.inverse();
    const Rational& t = l.t;
    const Rational ti = t.inverse();
    const Matrix &L00 = l.l00, &L01 = l.l01, &L10 = l.l10, &L11 = l.l11;
    const Matrix &E0 = rep.e0, &E1 = rep.e1, &F0 = rep.f0, &F1 = rep.f1;
    const Matrix &K0 = rep.k0, &K1 = rep.k1;

    Report out;
    auto add = [&](const std::string& name, const std::string& identity,
                   std::function<Matrix()> residual) {
        out.add(check_zero("loperator." + name, identity, residual));
    };

    add("k1_l00", "K1*L00 == L00*K1", [&] { return K1 * L00 - L00 * K1; });
    add("k1_l01", "K1*L01 == q^-2*L01*K1",
        [&] { return K1 * L01 - qm2 * (L01 * K1); });
    add("k1_l10", "K1*L10 == q^2*L10*K1",
        [&] { return K1 * L10 - q2 * (L10 * K1); });
    add("k1_l11", "K1*L11 == L11*K1", [&] { return K1 * L11 - L11 * K1; });

    add("e1_l00", "L00*E1 - q*E1*L00 == L10",
        [&] { return L00 * E1 - q * (E1 * L00) - L10; });
    add("e1_l01", "L01*E1 - q*E1*L01 == L11 - L00*K1",
        [&] { return L01 * E1 - q * (E1 * L01) - (L11 - L00 * K1); });
    add("e1_l10", "L10*E1 - q^-1*E1*L10 == 0",
        [&] { return L10 * E1 - qi * (E1 * L10); });
    add("e1_l11", "L11*E1 - q^-1*E1*L11 == -L10*K1",
        [&] { return L11 * E1 - qi * (E1 * L11) + L10 * K1; });

    add("f1_l00", "F1*L00 - q^-1*L00*F1 == L01",
        [&] { return F1 * L00 - qi * (L00 * F1) - L01; });
    add("f1_l01", "F1*L01 - q*L01*F1 == 0",
        [&] { return F1 * L01 - q * (L01 * F1); });
    add("f1_l10", "F1*L10 - q^-1*L10*F1 == L11 - K0*L00",
        [&] { return F1 * L10 - qi * (L10 * F1) - (L11 - K0 * L00); });
    add("f1_l11", "F1*L11 - q*L11*F1 == -K0*L01",
        [&] { return F1 * L11 - q * (L11 * F1) + K0 * L01; });

    add("k0_l00", "K0*L00 == L00*K0", [&] { return K0 * L00 - L00 * K0; });
    add("k0_l01", "K0*L01 == q^2*L01*K0",
        [&] { return K0 * L01 - q2 * (L01 * K0); });
    add("k0_l10", "K0*L10 == q^-2*L10*K0",
        [&] { return K0 * L10 - qm2 * (L10 * K0); });
    add("k0_l11", "K0*L11 == L11*K0", [&] { return K0 * L11 - L11 * K0; });

    add("e0_l00", "L00*E0 - q^-1*E0*L00 == -t*L01*K0",
        [&] { return L00 * E0 - qi * (E0 * L00) + t * (L01 * K0); });
    add("e0_l01", "L01*E0 - q^-1*E0*L01 == 0",
        [&] { return L01 * E0 - qi * (E0 * L01); });
    add("e0_l10", "L10*E0 - q*E0*L10 == t*L00 - t*L11*K0",
        [&] { return L10 * E0 - q * (E0 * L10) - (t * L00 - t * (L11 * K0)); });
    add("e0_l11", "L11*E0 - q*E0*L11 == t*L01",
        [&] { return L11 * E0 - q * (E0 * L11) - t * L01; });

    add("f0_l00", "F0*L00 - q*L00*F0 == -t^-1*K1*L10",
        [&] { return F0 * L00 - q * (L00 * F0) + ti * (K1 * L10); });
    add("f0_l01", "F0*L01 - q^-1*L01*F0 == t^-1*L00 - t^-1*K1*L11",
        [&] {
            return F0 * L01 - qi * (L01 * F0) - (ti * L00 - ti * (K1 * L11));
        });
    add("f0_l10", "F0*L10 - q*L10*F0 == 0",
        [&] { return F0 * L10 - q * (L10 * F0); });
    add("f0_l11", "F0*L11 - q^-1*L11*F0 == t^-1*L10",
        [&] { return F0 * L11 - qi * (L11 * F0) - ti * L10; });

    return out;
}

Report verify_intertwiner(const LOperator& l, const Representation& rep) {
    if (l.dim() != rep.dim)
        throw DimensionMismatch("L-operator and module dimensions differ");

    // Delta(u) acts on (module) (x) (2-dim evaluation module at t) via
    // tensor_rep; Delta_op swaps the coproduct legs.
    const Representation aux = eval_module_rep(1, l.t, rep.q);
    const Representation big = tensor_rep(rep, aux);
    const Matrix iu = Matrix::identity(rep.dim);
    const Matrix iv = Matrix::identity(aux.dim);

    auto delta_op = [&](Gen g) -> Matrix {
        switch (g) {
            case Gen::E0:
            case Gen::E1: {
                const Matrix& kv = aux.gen(g == Gen::E0 ? Gen::K0 : Gen::K1);
                return Matrix::kron(iu, aux.gen(g)) +
                       Matrix::kron(rep.gen(g), kv);
            }
            case Gen::F0:
            case Gen::F1: {
                const Matrix &f = rep.gen(g), &fv = aux.gen(g);
                const Matrix& kinv =
                    rep.gen(g == Gen::F0 ? Gen::K0inv : Gen::K1inv);
                return Matrix::kron(f, iv) + Matrix::kron(kinv, fv);
            }
            case Gen::K0:
            case Gen::K0inv:
            case Gen::K1:
            case Gen::K1inv:
                return Matrix::kron(rep.gen(g), aux.gen(g));
        }
        throw Error("unknown generator");
    };

    const Matrix full = full_map(l);
    Report out;
    for (Gen g : kAllGens) {
        out.add(check_zero(
            std::string("intertwiner.") + to_string(g),
            std::string("L*Delta(") + to_string(g) + ") == Delta_op(" +
                to_string(g) + ")*L",
            [&] { return full * big.gen(g) - delta_op(g) * full; }));
    }
    return out;
}

Matrix l00_inverse(const LOperator& l,
                   const std::vector<std::pair<int, Rational>>* factor_spec) {
    try {
        return inverse(l.l00);
    } catch (const SingularMatrixError& e) {
        std::vector<int> offending;
        std::string detail;
        if (factor_spec && factor_spec->size() == 1) {
            // Single evaluation factor: L00 is diagonal, entry i vanishes
            // iff t == mu * q^(d+1-2i). Read the zeros off the matrix.
            const int d = factor_spec->front().first;
            for (int i = 0; i <= d; ++i)
                if (l.l00.at(i, i).is_zero()) offending.push_back(i);
            detail = "; zero diagonal at indices";
            for (int i : offending) detail += " " + std::to_string(i);
        }
        throw SingularL00("L00 is singular at t = " + l.t.str() + " (rank " +
                              std::to_string(e.rank()) + " of " +
                              std::to_string(l.dim()) + ")" + detail,
                          e.rank(), std::move(offending));
    }
}

} // namespace qracah
