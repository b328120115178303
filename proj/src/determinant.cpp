#include "hk/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hk {

RingMatrix::RingMatrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : n_(rows.size()), data_() {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw std::invalid_argument("RingMatrix rows must form a square");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

bool RingMatrix::all_numeric() const {
    for (const auto& x : data_)
        if (!x.is_numeric()) return false;
    return true;
}

void RingMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

RingMatrix RingMatrix::evaluate(const Assignment& point) const {
    RingMatrix out(n_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].evaluate(point);
    return out;
}

Scalar det_berkowitz(const RingMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    // Coefficients of the characteristic polynomial det(xI - A_r) of the
    // leading r x r block, highest degree first.
    std::vector<Scalar> chi{Scalar(1), -a(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
        std::vector<Scalar> toeplitz(r + 2);
        toeplitz[0] = 1;
        toeplitz[1] = -a(r, r);
        std::vector<Scalar> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            Scalar dot;
            for (std::size_t j = 0; j < r; ++j)
                if (!a(r, j).is_zero() && !v[j].is_zero()) dot += a(r, j) * v[j];
            toeplitz[k + 2] = -dot;
            if (k + 1 == r) break;
            std::vector<Scalar> next(r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    if (!a(i, j).is_zero() && !v[j].is_zero()) next[i] += a(i, j) * v[j];
            v = std::move(next);
        }
        std::vector<Scalar> updated(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                if (!toeplitz[i - j].is_zero() && !chi[j].is_zero()) updated[i] += toeplitz[i - j] * chi[j];
        chi = std::move(updated);
    }
    return (n % 2 == 0) ? chi[n] : -chi[n];
}

Scalar det_bareiss(RingMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    bool integral = true;
    for (std::size_t i = 0; i < n && integral; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!m(i, j).is_integer()) {
                integral = false;
                break;
            }
    Scalar previous = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            m.swap_rows(pivot, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Scalar v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = integral ? exact_div(v, previous) : v / previous;
            }
            m(i, k) = 0;
        }
        previous = m(k, k);
    }
    Scalar d = m(n - 1, n - 1);
    return negate ? -d : d;
}

Scalar det_exact(const RingMatrix& m, DetMethod method) {
    switch (method) {
        case DetMethod::berkowitz: return det_berkowitz(m);
        case DetMethod::bareiss: return det_bareiss(m);
        case DetMethod::automatic: break;
    }
    return m.all_numeric() ? det_bareiss(m) : det_berkowitz(m);
}

}  // namespace hk
