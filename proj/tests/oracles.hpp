#pragma once

// Test-only reference implementations. They share no code with the library
// paths they check.

#include <cstddef>
#include <random>
#include <vector>

#include "hk/matrix.hpp"
#include "hk/scalar.hpp"

namespace oracle {

/// Laplace expansion along the first row.
inline hk::Scalar cofactor_det(const hk::RingMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    hk::Scalar total;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        hk::RingMatrix minor(n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j) {
                if (j == c) continue;
                minor(i - 1, jj++) = m(i, j);
            }
        hk::Scalar term = m(0, c) * cofactor_det(minor);
        if (c % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

inline hk::RingMatrix hankel_matrix(const std::vector<hk::Scalar>& seq, std::size_t n, std::size_t k) {
    hk::RingMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = seq.at(i + j + k);
    return m;
}

/// Nonzero rational with small numerator and denominator.
inline mpq_class random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-7, 7), den(1, 4);
    long p = 0;
    while (p == 0) p = num(rng);
    mpq_class q(p, den(rng));
    q.canonicalize();
    return q;
}

}  // namespace oracle
