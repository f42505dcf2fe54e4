#include "qracah/uq_module.hpp"

namespace qracah {

const char* to_string(Gen g) {
    switch (g) {
        case Gen::E0: return "E0";
        case Gen::E1: return "E1";
        case Gen::F0: return "F0";
        case Gen::F1: return "F1";
        case Gen::K0: return "K0";
        case Gen::K0inv: return "K0inv";
        case Gen::K1: return "K1";
        case Gen::K1inv: return "K1inv";
    }
    return "?";
}

const Matrix& Representation::gen(Gen g) const {
    switch (g) {
        case Gen::E0: return e0;
        case Gen::E1: return e1;
        case Gen::F0: return f0;
        case Gen::F1: return f1;
        case Gen::K0: return k0;
        case Gen::K0inv: return k0inv;
        case Gen::K1: return k1;
        case Gen::K1inv: return k1inv;
    }
    throw Error("unknown generator");
}

int Representation::total_diameter() const {
    int d = 0;
    for (const auto& [dj, mu] : factor_spec) d += dj;
    return d;
}

Representation eval_module_rep(int d, const Rational& mu, const Rational& q) {
    if (d < 1) throw ParameterError("diameter must be >= 1");
    if (mu.is_zero()) throw ParameterError("evaluation parameter zero");
    if (q.is_zero() || q == Rational(1) || q == Rational(-1))
        throw ParameterError("q is a root of unity");

    const int n = d + 1;
    Representation rep;
    rep.dim = n;
    rep.q = q;
    rep.factor_spec = {{d, mu}};
    rep.e0 = rep.e1 = rep.f0 = rep.f1 = Matrix(n, n);
    rep.k0 = rep.k0inv = rep.k1 = rep.k1inv = Matrix(n, n);
    for (int i = 0; i <= d; ++i) {
        rep.basis_labels.push_back({i});
        rep.k1.at(i, i) = q.pow(d - 2 * i);
        rep.k1inv.at(i, i) = q.pow(2 * i - d);
        rep.k0.at(i, i) = q.pow(2 * i - d);
        rep.k0inv.at(i, i) = q.pow(d - 2 * i);
        if (i >= 1) {
            // Column i, image hits v_(i-1).
            rep.e1.at(i - 1, i) = qint(d - i + 1, q);
            rep.f0.at(i - 1, i) = mu.inverse() * qint(d - i + 1, q);
        }
        if (i <= d - 1) {
            // Column i, image hits v_(i+1).
            rep.f1.at(i + 1, i) = qint(i + 1, q);
            rep.e0.at(i + 1, i) = mu * qint(i + 1, q);
        }
    }
    return rep;
}

Representation tensor_rep(const Representation& u, const Representation& v) {
    if (u.q != v.q)
        throw ParameterError("tensor factors with different q");
    Representation r;
    r.dim = u.dim * v.dim;
    r.q = u.q;

    const Matrix iu = Matrix::identity(u.dim);
    const Matrix iv = Matrix::identity(v.dim);
    r.e0 = Matrix::kron(u.e0, iv) + Matrix::kron(u.k0, v.e0);
    r.e1 = Matrix::kron(u.e1, iv) + Matrix::kron(u.k1, v.e1);
    r.f0 = Matrix::kron(iu, v.f0) + Matrix::kron(u.f0, v.k0inv);
    r.f1 = Matrix::kron(iu, v.f1) + Matrix::kron(u.f1, v.k1inv);
    r.k0 = Matrix::kron(u.k0, v.k0);
    r.k0inv = Matrix::kron(u.k0inv, v.k0inv);
    r.k1 = Matrix::kron(u.k1, v.k1);
    r.k1inv = Matrix::kron(u.k1inv, v.k1inv);

    r.factor_spec = u.factor_spec;
    r.factor_spec.insert(r.factor_spec.end(), v.factor_spec.begin(),
                         v.factor_spec.end());
    for (const auto& lu : u.basis_labels)
        for (const auto& lv : v.basis_labels) {
            std::vector<int> l = lu;
            l.insert(l.end(), lv.begin(), lv.end());
            r.basis_labels.push_back(std::move(l));
        }
    return r;
}

Representation rep_from_params(const ParamSet& p) {
    validate_params(p);
    Representation rep = eval_module_rep(p.factors[0].d, p.factors[0].mu, p.q);
    for (std::size_t j = 1; j < p.factors.size(); ++j)
        rep = tensor_rep(rep, eval_module_rep(p.factors[j].d, p.factors[j].mu, p.q));
    return rep;
}

namespace {

// X^3 Y - [3] X^2 Y X + [3] X Y X^2 - Y X^3
Matrix serre_residual(const Matrix& x, const Matrix& y, const Rational& three) {
    const Matrix x2 = x * x;
    const Matrix x3 = x2 * x;
    return x3 * y - three * (x2 * (y * x)) + three * (x * (y * x2)) - y * x3;
}

// Adds one record that requires every listed residual to vanish. On failure
// the witness is the first nonzero residual and the note names it.
void add_zero_family(Report& rep, const std::string& name,
                     const std::string& identity,
                     const std::vector<std::pair<std::string, std::function<Matrix()>>>& parts) {
    rep.add(check_zero(name, identity, [&]() -> Matrix {
        for (const auto& part : parts) {
            Matrix res = part.second();
            if (!res.is_zero()) return res;
        }
        return Matrix(0, 0);
    }));
    if (!rep.checks.empty() && rep.checks.back().status == CheckStatus::Fail) {
        // Identify which instance failed for the note.
        for (const auto& [tag, fn] : parts) {
            if (!fn().is_zero()) {
                rep.checks.back().note = "instance " + tag + " has nonzero residual";
                break;
            }
        }
    }
}

} // namespace

Report verify_defining_relations(const Representation& rep) {
    const Rational& q = rep.q;
    const Rational q2 = q * q;
    const Rational qm2 = q2.inverse();
    const Rational denom = q - q.inverse();
    const Rational three = qint(3, q);
    const Matrix id = Matrix::identity(rep.dim);
    const Matrix &E0 = rep.e0, &E1 = rep.e1, &F0 = rep.f0, &F1 = rep.f1;
    const Matrix &K0 = rep.k0, &K0i = rep.k0inv, &K1 = rep.k1, &K1i = rep.k1inv;

    Report out;
    auto twist = [&](const Matrix& k, const Matrix& x, const Rational& c) {
        return k * x - c * (x * k);
    };

    add_zero_family(out, "relations.k0_inverse", "K0*K0^-1 == 1 == K0^-1*K0",
                    {{"K0*K0^-1", [&] { return K0 * K0i - id; }},
                     {"K0^-1*K0", [&] { return K0i * K0 - id; }}});
    add_zero_family(out, "relations.k1_inverse", "K1*K1^-1 == 1 == K1^-1*K1",
                    {{"K1*K1^-1", [&] { return K1 * K1i - id; }},
                     {"K1^-1*K1", [&] { return K1i * K1 - id; }}});
    out.add(check_zero("relations.k0k1", "K0*K1 == 1",
                       [&] { return K0 * K1 - id; }));
    out.add(check_zero("relations.k1k0", "K1*K0 == 1",
                       [&] { return K1 * K0 - id; }));
    out.add(check_zero("relations.k0_e0", "K0*E0 == q^2*E0*K0",
                       [&] { return twist(K0, E0, q2); }));
    out.add(check_zero("relations.k1_e1", "K1*E1 == q^2*E1*K1",
                       [&] { return twist(K1, E1, q2); }));
    out.add(check_zero("relations.k0_f0", "K0*F0 == q^-2*F0*K0",
                       [&] { return twist(K0, F0, qm2); }));
    out.add(check_zero("relations.k1_f1", "K1*F1 == q^-2*F1*K1",
                       [&] { return twist(K1, F1, qm2); }));
    out.add(check_zero("relations.k0_e1", "K0*E1 == q^-2*E1*K0",
                       [&] { return twist(K0, E1, qm2); }));
    out.add(check_zero("relations.k1_e0", "K1*E0 == q^-2*E0*K1",
                       [&] { return twist(K1, E0, qm2); }));
    out.add(check_zero("relations.k0_f1", "K0*F1 == q^2*F1*K0",
                       [&] { return twist(K0, F1, q2); }));
    out.add(check_zero("relations.k1_f0", "K1*F0 == q^2*F0*K1",
                       [&] { return twist(K1, F0, q2); }));
    add_zero_family(out, "relations.ef_same",
                    "[Ei, Fi] == (Ki - Ki^-1)/(q - q^-1)",
                    {{"i=0",
                      [&] {
                          return E0 * F0 - F0 * E0 -
                                 denom.inverse() * (K0 - K0i);
                      }},
                     {"i=1",
                      [&] {
                          return E1 * F1 - F1 * E1 -
                                 denom.inverse() * (K1 - K1i);
                      }}});
    add_zero_family(out, "relations.ef_cross", "[Ei, Fj] == 0 for i != j",
                    {{"[E0,F1]", [&] { return E0 * F1 - F1 * E0; }},
                     {"[E1,F0]", [&] { return E1 * F0 - F0 * E1; }}});
    add_zero_family(
        out, "relations.serre",
        "X^3*Y - [3]*X^2*Y*X + [3]*X*Y*X^2 - Y*X^3 == 0 for (X,Y) in "
        "{(E0,E1),(E1,E0),(F0,F1),(F1,F0)}",
        {{"(E0,E1)", [&] { return serre_residual(E0, E1, three); }},
         {"(E1,E0)", [&] { return serre_residual(E1, E0, three); }},
         {"(F0,F1)", [&] { return serre_residual(F0, F1, three); }},
         {"(F1,F0)", [&] { return serre_residual(F1, F0, three); }}});
    return out;
}

EquitableGenerators equitable_generators(const Representation& rep) {
    const Rational& q = rep.q;
    const Rational c = q - q.inverse();
    const Matrix &E0 = rep.e0, &E1 = rep.e1, &F0 = rep.f0, &F1 = rep.f1;
    const Matrix &K0 = rep.k0, &K1 = rep.k1;

    EquitableGenerators x;
    x.x01 = K0 + (q * c) * (K0 * F0);
    x.x12 = K1 - c * E1;
    x.x23 = K1 + (q * c) * (K1 * F1);
    x.x30 = K0 - c * E0;
    x.x13 = K1;
    x.x31 = K0;

    // Inverse substitution must reproduce the original matrices exactly.
    const Rational ci = c.inverse();
    const Matrix id = Matrix::identity(rep.dim);
    const Matrix e1_back = ci * (x.x13 - x.x12);
    const Matrix e0_back = ci * (x.x31 - x.x30);
    const Matrix f1_back = (q.inverse() * ci) * (x.x31 * x.x23 - id);
    const Matrix f0_back = (q.inverse() * ci) * (x.x13 * x.x01 - id);
    if (e1_back != E1 || e0_back != E0 || f1_back != F1 || f0_back != F0 ||
        x.x13 != K1 || x.x31 != K0)
        throw Error("internal: alternative generator substitution does not "
                    "invert back to the original generators");
    return x;
}

Report verify_equitable_relations(const EquitableGenerators& x, const Rational& q) {
    const Rational c = q - q.inverse();
    const Rational three = qint(3, q);
    const int n = x.x13.rows();
    const Matrix id = Matrix::identity(n);

    Report out;
    auto weyl = [&](const std::string& name, const Matrix& a, const Matrix& b,
                    const std::string& an, const std::string& bn) {
        out.add(check_zero("equitable.weyl_" + name,
                           "(q*" + an + "*" + bn + " - q^-1*" + bn + "*" + an +
                               ")/(q - q^-1) == 1",
                           [&] {
                               return c.inverse() *
                                          (q * (a * b) - q.inverse() * (b * a)) -
                                      id;
                           }));
    };

    out.add(check_zero("equitable.x13_x31", "X13*X31 == 1",
                       [&] { return x.x13 * x.x31 - id; }));
    out.add(check_zero("equitable.x31_x13", "X31*X13 == 1",
                       [&] { return x.x31 * x.x13 - id; }));
    weyl("01_12", x.x01, x.x12, "X01", "X12");
    weyl("12_23", x.x12, x.x23, "X12", "X23");
    weyl("23_30", x.x23, x.x30, "X23", "X30");
    weyl("30_01", x.x30, x.x01, "X30", "X01");
    weyl("01_13", x.x01, x.x13, "X01", "X13");
    weyl("31_12", x.x31, x.x12, "X31", "X12");
    weyl("23_31", x.x23, x.x31, "X23", "X31");
    weyl("13_30", x.x13, x.x30, "X13", "X30");

    auto cubic = [&](const std::string& name, const Matrix& a, const Matrix& b,
                     const std::string& an, const std::string& bn) {
        out.add(check_zero("equitable.cubic_" + name,
                           an + "^3*" + bn + " - [3]*" + an + "^2*" + bn + "*" +
                               an + " + [3]*" + an + "*" + bn + "*" + an +
                               "^2 - " + bn + "*" + an + "^3 == 0",
                           [&] { return serre_residual(a, b, three); }));
    };
    cubic("01_23", x.x01, x.x23, "X01", "X23");
    cubic("12_30", x.x12, x.x30, "X12", "X30");
    cubic("23_01", x.x23, x.x01, "X23", "X01");
    cubic("30_12", x.x30, x.x12, "X30", "X12");
    return out;
}

} // namespace qracah
