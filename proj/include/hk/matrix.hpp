#pragma once

#include <cstddef>
#include <vector>

#include "hk/scalar.hpp"

namespace hk {

/// Square matrix over Scalar. Dimension 0 is allowed (determinant 1).
class RingMatrix {
public:
    RingMatrix() = default;
    explicit RingMatrix(std::size_t n) : n_(n), data_(n * n) {}
    RingMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    std::size_t size() const noexcept { return n_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    bool all_numeric() const;
    void swap_rows(std::size_t i, std::size_t j);
    RingMatrix evaluate(const Assignment& point) const;

private:
    std::size_t n_ = 0;
    std::vector<Scalar> data_;
};

enum class DetMethod {
    automatic,  // Bareiss for numeric entries, Berkowitz otherwise
    berkowitz,
    bareiss,
};

/// Exact determinant.
Scalar det_exact(const RingMatrix& m, DetMethod method = DetMethod::automatic);

/// Division-free Berkowitz determinant; valid over any commutative ring.
Scalar det_berkowitz(const RingMatrix& m);

/// Fraction-free elimination with row pivoting. Exact divisions only, so it
/// is valid over integral domains; a column without a nonzero pivot means
/// the determinant is zero.
Scalar det_bareiss(RingMatrix m);

}  // namespace hk
