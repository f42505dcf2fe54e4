#pragma once

#include <random>
#include <vector>

#include "qracah/driver.hpp"

namespace qracah::testing {

inline Rational r(long num, long den = 1) { return Rational(num, den); }

// The standard small parameter point used for frozen oracle values.
inline ParamSet base_params(std::vector<Factor> factors) {
    ParamSet p;
    p.q = r(2);
    p.a = r(3);
    p.b = r(7);
    p.factors = std::move(factors);
    return p;
}

// Deterministic rational sampler: num in [-17, 17] \ {0}, den in [1, 17].
// Plain modular reduction, so the stream is identical everywhere.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : gen_(seed) {}

    Rational nonzero() {
        for (;;) {
            const long num = static_cast<long>(gen_() % 35) - 17;
            const long den = static_cast<long>(gen_() % 17) + 1;
            if (num == 0) continue;
            return Rational(num, den);
        }
    }

    Rational any() {
        const long num = static_cast<long>(gen_() % 35) - 17;
        const long den = static_cast<long>(gen_() % 17) + 1;
        return Rational(num, den);
    }

    Rational q_like() {
        for (;;) {
            Rational q = nonzero();
            if (q != Rational(1) && q != Rational(-1)) return q;
        }
    }

    long integer(long lo, long hi) {
        return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 gen_;
};

inline Matrix random_matrix(RationalSampler& s, int rows, int cols) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = s.any();
    return m;
}

} // namespace qracah::testing
