#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hk/scalar.hpp"
#include "hk/sequences.hpp"

namespace hk {

/// Power series c_0 + c_1 z + ... + c_N z^N + O(z^{N+1}). Binary operations
/// truncate to the smaller of the two orders.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order = 0) : c_(order + 1) {}
    /// Coefficients c_0..c_N; an empty list is treated as the zero series of order 0.
    explicit TruncatedSeries(std::vector<Scalar> coeffs);

    static TruncatedSeries constant(const Scalar& c, std::size_t order);
    /// c z^k, truncated.
    static TruncatedSeries monomial(const Scalar& c, std::size_t k, std::size_t order);

    std::size_t order() const noexcept { return c_.size() - 1; }
    const Scalar& operator[](std::size_t i) const { return c_.at(i); }
    Scalar& operator[](std::size_t i) { return c_.at(i); }
    const std::vector<Scalar>& coeffs() const noexcept { return c_; }

    /// Index of the highest nonzero coefficient, or nullopt for zero.
    std::optional<std::size_t> degree() const;
    TruncatedSeries truncated(std::size_t order) const;
    TruncatedSeries evaluate(const Assignment& point) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& u, const TruncatedSeries& v);
    friend TruncatedSeries operator-(const TruncatedSeries& u, const TruncatedSeries& v);
    friend TruncatedSeries operator*(const TruncatedSeries& u, const TruncatedSeries& v);
    TruncatedSeries scaled(const Scalar& c) const;
    /// Multiplication by z^k within the same order.
    TruncatedSeries shifted(std::size_t k) const;
    TruncatedSeries pow(unsigned e) const;

    /// ZeroConstantTerm when c_0 = 0.
    TruncatedSeries reciprocal() const;
    /// The root with constant term 1; NonUnitConstantTerm unless c_0 = 1.
    TruncatedSeries sqrt() const;

    /// Coefficientwise equality up to the common order.
    friend bool operator==(const TruncatedSeries& u, const TruncatedSeries& v);

private:
    std::vector<Scalar> c_;
};

/// (1 - a z)^2 - 4 b z^m.
TruncatedSeries discriminant_series(int m, const Scalar& a, const Scalar& b, std::size_t order);
/// alpha = (1 - a z + sqrt(D)) / 2 and beta = (1 - a z - sqrt(D)) / 2.
TruncatedSeries alpha_series(int m, const Scalar& a, const Scalar& b, std::size_t order);
TruncatedSeries beta_series(int m, const Scalar& a, const Scalar& b, std::size_t order);

/// Generating function of the sequence from its radical form:
/// f = 2 / (1 - a z + sqrt(D)), F = 2 / (1 - (a + 2t) z + sqrt(D)), G = 1 / sqrt(D).
TruncatedSeries gen_series(const SequenceSpec& spec, std::size_t order);

/// F built from f as f / (1 - t z f).
TruncatedSeries shifted_from_restricted(const TruncatedSeries& f, const Scalar& t);

enum class KernelVariant { fib, fib_t, lucas };

/// fib:   Fib_{2n+2}(1 - a z, -b z^m)
/// fib_t: Fib_{2n+2}(1 - a z, -b z^m) - t z Fib_{2n+1}(1 - a z, -b z^m)
/// lucas: L_{2n+1}(1 - a z, -b z^m)
/// Returned as an exact polynomial, i.e. a series whose order is its degree bound.
TruncatedSeries kernel_poly(long n, int m, const Scalar& a, const Scalar& b, KernelVariant variant,
                            const Scalar& t = 0);

struct VanishingResult {
    bool holds = true;
    std::optional<long> offending_k;
};

/// Checks [z^{nm+k}] kernel * series = 0 for k = 1..mn+m-1, pairing fib with f,
/// fib_t with F and lucas with G.
VanishingResult verify_vanishing(long n, int m, const Scalar& a, const Scalar& b, KernelVariant variant,
                                 const Scalar& t = 0);

}  // namespace hk
