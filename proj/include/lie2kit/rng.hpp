#ifndef LIE2KIT_RNG_HPP
#define LIE2KIT_RNG_HPP

#include <cstdint>
#include <random>

#include "lie2kit/matrix.hpp"

namespace lie2kit {

// Seeded generator for sampling checkers. Draws are reduced by modulus
// rather than std::uniform_int_distribution so that runs are reproducible
// across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : g_(seed) {}

    uint64_t next() { return g_(); }

    long int_in(long lo, long hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(next() % span);
    }

    Rational rational_in(long lo, long hi) { return Rational(int_in(lo, hi)); }

    Vec vec(int n, long bound) {
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = rational_in(-bound, bound);
        return v;
    }

    Matrix matrix(int rows, int cols, long bound) {
        Matrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = rational_in(-bound, bound);
        return m;
    }

    Matrix invertible(int n, long bound) {
        for (;;) {
            Matrix m = matrix(n, n, bound);
            if (rank(m) == n) return m;
        }
    }

private:
    std::mt19937_64 g_;
};

} // namespace lie2kit

#endif
