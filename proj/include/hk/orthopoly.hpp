#pragma once

#include <cstddef>
#include <vector>

#include "hk/scalar.hpp"
#include "hk/sequences.hpp"

namespace hk {

/// Three-term recurrence data p_{n+1} = (z - s(n)) p_n - t(n-1) p_{n-1}.
struct JacobiCoeffs {
    std::vector<Scalar> s;  // s(0..N-1)
    std::vector<Scalar> t;  // t(0..N-2)
    bool operator==(const JacobiCoeffs&) const = default;
};

/// a(0..count-1) from the weighted Motzkin triangle
/// v(n,j) = v(n-1,j-1) + s(j) v(n-1,j) + t(j) v(n-1,j+1), a(n) = v(n,0).
/// Throws std::invalid_argument when the coefficients are too short.
std::vector<Scalar> moments_from_jacobi(const JacobiCoeffs& j, std::size_t count);

/// Inverse of moments_from_jacobi by Gram-Schmidt against the moment
/// functional. Returns `count` values of s and count-1 of t; needs 2*count
/// moments. Only ratios of functional values enter, so a(0) need not be 1.
/// Throws SingularHankel(n) when d0(n) vanishes.
JacobiCoeffs jacobi_from_moments(const std::vector<Scalar>& moments, std::size_t count);

struct OrthPoly {
    Scalar p;               // polynomial in z
    Scalar signed_at_zero;  // (-1)^n p_n(0)
};

OrthPoly orth_poly(const JacobiCoeffs& j, std::size_t n);

/// The bordered Hankel determinant with last column 1, z, ..., z^n.
Scalar char_poly_tilde(const std::vector<Scalar>& terms, std::size_t n);
Scalar char_poly_tilde(const SequenceSpec& spec, std::size_t n);

struct NormalizedCharPoly {
    Scalar value;
    bool normalized = false;  // false: b^{n(n-1)/m} is not a polynomial, value left as is
};

/// p~_n divided by b^{n(n-1)/m}.
NormalizedCharPoly char_poly_normalized(const SequenceSpec& spec, std::size_t n);

/// The closed form of the recurrence data of C(n+1,3,a,b,t)/a:
/// s(3n) = (n+1)a+t, s(3n+1) = a, s(3n+2) = -((n+1)a+t),
/// t(3n) = b/((n+1)a+t), t(3n+1) = -t(3n), t(3n+2) = -((n+1)a+t)((n+2)a+t).
JacobiCoeffs jacobi_shifted_m3(const Scalar& a, const Scalar& b, const Scalar& t, std::size_t count);

/// C(n+1,3,a,b,t)/a for n = 0..count-1.
std::vector<Scalar> shifted_m3_moments(const Scalar& a, const Scalar& b, const Scalar& t, std::size_t count);

}  // namespace hk
