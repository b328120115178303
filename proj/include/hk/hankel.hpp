#pragma once

#include <cstddef>
#include <vector>

#include "hk/matrix.hpp"
#include "hk/sequences.hpp"

namespace hk {

struct HankelQuery {
    SequenceSpec spec;
    std::size_t k = 0;  // shift
    std::size_t n = 0;  // size
};

/// Number of sequence terms a size-n, shift-k Hankel matrix reads.
inline std::size_t hankel_terms_needed(std::size_t n, std::size_t k) { return n == 0 ? 0 : 2 * n - 1 + k; }

/// (terms[i+j+k]) for i, j < n.
RingMatrix hankel_matrix(const std::vector<Scalar>& terms, std::size_t n, std::size_t k);

Scalar hankel_det(const std::vector<Scalar>& terms, std::size_t n, std::size_t k,
                  DetMethod method = DetMethod::automatic);
Scalar hankel_det(const HankelQuery& q, DetMethod method = DetMethod::automatic);

/// Determinants for sizes 0..max_n at a fixed shift, from one set of terms.
std::vector<Scalar> hankel_det_range(const std::vector<Scalar>& terms, std::size_t k, std::size_t max_n,
                                     DetMethod method = DetMethod::automatic);
std::vector<Scalar> hankel_det_range(const SequenceSpec& spec, std::size_t k, std::size_t max_n,
                                     DetMethod method = DetMethod::automatic);

/// d2(n) d0(n) == d0(n+1) d2(n-1) + d1(n)^2 with every determinant computed directly.
bool condensation_check(const SequenceSpec& spec, std::size_t n);

}  // namespace hk
