#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qracah/errors.hpp"

namespace qracah {

// Arbitrary-precision rational number, always held in canonical form:
// denominator > 0 and gcd(|num|, den) = 1. All operations are exact; there
// is no floating point anywhere in this library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den);

    // Accepts "p" or "p/q" with optional leading '-', arbitrary size.
    // Throws ParameterError on malformed input or zero denominator.
    static Rational parse(std::string_view s);

    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    // Multiplicative inverse; throws ParameterError on zero.
    Rational inverse() const;

    // Exact integer power; negative exponents require a nonzero base.
    Rational pow(long e) const;

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "p" for integers, "p/q" otherwise; matches parse().
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

// Balanced q-integer [n] = (q^n - q^-n) / (q - q^-1), defined for q not in
// {0, 1, -1}. Satisfies [0] = 0, [1] = 1, [-n] = -[n].
Rational qint(long n, const Rational& q);

// One tensor factor of a module: diameter d, evaluation parameter mu, and a
// free normalization xi applied to its L-operator.
struct Factor {
    int d = 0;
    Rational mu;
    Rational xi = Rational(1);
};

// Full parameter set for a run: deformation parameter q, the two eigenvalue
// base parameters a and b, and the list of tensor factors.
struct ParamSet {
    Rational q;
    Rational a;
    Rational b;
    std::vector<Factor> factors;

    // Sum of factor diameters; the module dimension is prod(d_j + 1).
    int total_diameter() const;
    long dimension() const;
};

// Every admissibility violation in the set, in a stable order. Empty means
// the parameters are admissible. Checked rules: q nonzero and not a root of
// unity detectable over the rationals (q != 1, -1; also q^(2i) != 1 is then
// automatic), a, b nonzero, at least one factor, every d >= 1, every mu and
// xi nonzero.
std::vector<std::string> param_violations(const ParamSet& p);

// Returns p unchanged if admissible, otherwise throws ParameterError whose
// violations() lists every problem. Idempotent.
const ParamSet& validate_params(const ParamSet& p);

// FNV-1a 64-bit hash, used to fingerprint large matrices in reports.
std::uint64_t fnv1a64(std::string_view s);

} // namespace qracah
