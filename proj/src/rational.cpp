#include "qracah/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace qracah {

Rational::Rational(long num, long den) : v_(static_cast<signed long>(num),
                                            static_cast<signed long>(den)) {
    if (den == 0) throw ParameterError("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    // Strict shape: -?digits(/-?digits)?  with no whitespace. GMP's own
    // parser is laxer (accepts bases, whitespace), so validate first.
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = s, den = "1";
    if (auto pos = s.find('/'); pos != std::string_view::npos) {
        num = s.substr(0, pos);
        den = s.substr(pos + 1);
    }
    if (!is_int(num) || !is_int(den))
        throw ParameterError("malformed rational literal: \"" + std::string(s) + "\"");
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0)
        throw ParameterError("rational with zero denominator: \"" + std::string(s) + "\"");
    mpq_class v(n);
    v /= mpq_class(d);
    return Rational(std::move(v));
}

Rational Rational::inverse() const {
    if (is_zero()) throw ParameterError("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ParameterError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool neg = e < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-(e + 1)) + 1UL
                          : static_cast<unsigned long>(e);
    if (neg && is_zero()) throw ParameterError("negative power of zero");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    mpq_class r(num);
    r /= mpq_class(den);
    if (neg) r = 1 / r;
    return Rational(std::move(r));
}

std::string Rational::str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

Rational qint(long n, const Rational& q) {
    if (q.is_zero() || q == Rational(1) || q == Rational(-1))
        throw ParameterError("q-integer undefined for q in {0, 1, -1}");
    if (n == 0) return Rational(0);
    return (q.pow(n) - q.pow(-n)) / (q - q.inverse());
}

int ParamSet::total_diameter() const {
    int d = 0;
    for (const auto& f : factors) d += f.d;
    return d;
}

long ParamSet::dimension() const {
    long n = 1;
    for (const auto& f : factors) n *= f.d + 1;
    return n;
}

std::vector<std::string> param_violations(const ParamSet& p) {
    std::vector<std::string> v;
    if (p.q.is_zero())
        v.push_back("q is zero");
    else if (p.q == Rational(1) || p.q == Rational(-1))
        v.push_back("q is a root of unity");
    if (p.a.is_zero()) v.push_back("a is zero");
    if (p.b.is_zero()) v.push_back("b is zero");
    if (p.factors.empty()) v.push_back("no tensor factors given");
    for (std::size_t j = 0; j < p.factors.size(); ++j) {
        const auto& f = p.factors[j];
        const std::string tag = "factor " + std::to_string(j);
        if (f.d < 1) v.push_back(tag + ": diameter must be >= 1");
        if (f.mu.is_zero()) v.push_back(tag + ": evaluation parameter zero");
        if (f.xi.is_zero()) v.push_back(tag + ": normalization xi zero");
    }
    return v;
}

const ParamSet& validate_params(const ParamSet& p) {
    auto v = param_violations(p);
    if (!v.empty()) {
        std::string msg = "inadmissible parameters:";
        for (const auto& s : v) msg += " [" + s + "]";
        throw ParameterError(msg, std::move(v));
    }
    return p;
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace qracah
