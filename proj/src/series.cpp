#include "hk/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "hk/errors.hpp"

namespace hk {

TruncatedSeries::TruncatedSeries(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.emplace_back();
}

TruncatedSeries TruncatedSeries::constant(const Scalar& c, std::size_t order) {
    TruncatedSeries s(order);
    s.c_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Scalar& c, std::size_t k, std::size_t order) {
    TruncatedSeries s(order);
    if (k <= order) s.c_[k] = c;
    return s;
}

std::optional<std::size_t> TruncatedSeries::degree() const {
    for (std::size_t i = c_.size(); i-- > 0;)
        if (!c_[i].is_zero()) return i;
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return TruncatedSeries(std::vector<Scalar>(c_.begin(), c_.begin() + static_cast<long>(order) + 1));
}

TruncatedSeries TruncatedSeries::evaluate(const Assignment& point) const {
    TruncatedSeries s(*this);
    for (auto& x : s.c_) x = x.evaluate(point);
    return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s(*this);
    for (auto& x : s.c_) x = -x;
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& u, const TruncatedSeries& v) {
    TruncatedSeries s(std::min(u.order(), v.order()));
    for (std::size_t i = 0; i <= s.order(); ++i) s.c_[i] = u.c_[i] + v.c_[i];
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& u, const TruncatedSeries& v) { return u + (-v); }

TruncatedSeries operator*(const TruncatedSeries& u, const TruncatedSeries& v) {
    TruncatedSeries s(std::min(u.order(), v.order()));
    const std::size_t n = s.order();
    for (std::size_t i = 0; i <= n; ++i) {
        if (u.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            if (!v.c_[j].is_zero()) s.c_[i + j] += u.c_[i] * v.c_[j];
    }
    return s;
}

TruncatedSeries TruncatedSeries::scaled(const Scalar& c) const {
    TruncatedSeries s(*this);
    for (auto& x : s.c_) x *= c;
    return s;
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
    TruncatedSeries s(order());
    for (std::size_t i = 0; i + k <= order(); ++i) s.c_[i + k] = c_[i];
    return s;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
    TruncatedSeries result = constant(1, order());
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    if (c_[0].is_zero()) throw ZeroConstantTerm();
    TruncatedSeries r(order());
    r.c_[0] = Scalar(1) / c_[0];
    for (std::size_t n = 1; n <= order(); ++n) {
        Scalar acc;
        for (std::size_t i = 1; i <= n; ++i)
            if (!c_[i].is_zero() && !r.c_[n - i].is_zero()) acc += c_[i] * r.c_[n - i];
        r.c_[n] = -acc / c_[0];
    }
    return r;
}

TruncatedSeries TruncatedSeries::sqrt() const {
    if (!c_[0].is_one()) throw NonUnitConstantTerm();
    // s^2 = u with s_0 = 1 gives 2 s_n = u_n - sum_{0<i<n} s_i s_{n-i}.
    TruncatedSeries s(order());
    s.c_[0] = 1;
    const Scalar half = Scalar::rational(1, 2);
    for (std::size_t n = 1; n <= order(); ++n) {
        Scalar acc = c_[n];
        for (std::size_t i = 1; i < n; ++i)
            if (!s.c_[i].is_zero() && !s.c_[n - i].is_zero()) acc -= s.c_[i] * s.c_[n - i];
        s.c_[n] = acc * half;
    }
    return s;
}

bool operator==(const TruncatedSeries& u, const TruncatedSeries& v) {
    const std::size_t n = std::min(u.order(), v.order());
    for (std::size_t i = 0; i <= n; ++i)
        if (!(u.c_[i] == v.c_[i])) return false;
    return true;
}

namespace {

// 1 - c z
TruncatedSeries one_minus(const Scalar& c, std::size_t order) {
    return TruncatedSeries::constant(1, order) - TruncatedSeries::monomial(c, 1, order);
}

}  // namespace

TruncatedSeries discriminant_series(int m, const Scalar& a, const Scalar& b, std::size_t order) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    TruncatedSeries l = one_minus(a, order);
    return l * l - TruncatedSeries::monomial(Scalar(4) * b, static_cast<std::size_t>(m), order);
}

TruncatedSeries alpha_series(int m, const Scalar& a, const Scalar& b, std::size_t order) {
    return (one_minus(a, order) + discriminant_series(m, a, b, order).sqrt()).scaled(Scalar::rational(1, 2));
}

TruncatedSeries beta_series(int m, const Scalar& a, const Scalar& b, std::size_t order) {
    return (one_minus(a, order) - discriminant_series(m, a, b, order).sqrt()).scaled(Scalar::rational(1, 2));
}

TruncatedSeries gen_series(const SequenceSpec& spec, std::size_t order) {
    TruncatedSeries root = discriminant_series(spec.m, spec.a, spec.b, order).sqrt();
    switch (spec.family) {
        case Family::restricted: return (one_minus(spec.a, order) + root).reciprocal().scaled(2);
        case Family::shifted:
            return (one_minus(spec.a + Scalar(2) * spec.t, order) + root).reciprocal().scaled(2);
        case Family::unrestricted: break;
    }
    return root.reciprocal();
}

TruncatedSeries shifted_from_restricted(const TruncatedSeries& f, const Scalar& t) {
    TruncatedSeries denom = TruncatedSeries::constant(1, f.order()) - f.shifted(1).scaled(t);
    return f * denom.reciprocal();
}

TruncatedSeries kernel_poly(long n, int m, const Scalar& a, const Scalar& b, KernelVariant variant,
                            const Scalar& t) {
    if (n < 0) throw std::invalid_argument("kernel index must be non-negative");
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    const long index = variant == KernelVariant::lucas ? 2 * n + 1 : 2 * n + 2;
    // Each recurrence step raises the degree by at most max(1, m/2) on average;
    // index * m is a safe bound for every step.
    const std::size_t order = static_cast<std::size_t>(index * std::max(m, 1) + 1);
    const TruncatedSeries x = one_minus(a, order);
    const TruncatedSeries s = TruncatedSeries::monomial(-b, static_cast<std::size_t>(m), order);

    TruncatedSeries prev = variant == KernelVariant::lucas ? TruncatedSeries::constant(2, order)
                                                           : TruncatedSeries(order);
    TruncatedSeries cur = variant == KernelVariant::lucas ? x : TruncatedSeries::constant(1, order);
    for (long i = 2; i <= index; ++i) {
        TruncatedSeries next = x * cur + s * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    if (variant == KernelVariant::fib_t) cur = cur - prev.shifted(1).scaled(t);
    auto deg = cur.degree();
    return cur.truncated(deg ? *deg : 0);
}

VanishingResult verify_vanishing(long n, int m, const Scalar& a, const Scalar& b, KernelVariant variant,
                                 const Scalar& t) {
    if (m < 2) throw std::invalid_argument("vanishing check needs m >= 2");
    const std::size_t order = static_cast<std::size_t>(2 * n * m + m);
    SequenceSpec spec;
    switch (variant) {
        case KernelVariant::fib: spec = SequenceSpec::restricted(m, a, b); break;
        case KernelVariant::fib_t: spec = SequenceSpec::shifted(m, a, b, t); break;
        case KernelVariant::lucas: spec = SequenceSpec::unrestricted(m, a, b); break;
    }
    const TruncatedSeries gf = gen_series(spec, order);
    const TruncatedSeries kernel = kernel_poly(n, m, a, b, variant, t);
    // Only the needed coefficients of the product.
    for (long k = 1; k <= m * n + m - 1; ++k) {
        const std::size_t target = static_cast<std::size_t>(n * m + k);
        Scalar c;
        for (std::size_t i = 0; i <= std::min(target, kernel.order()); ++i)
            if (!kernel[i].is_zero() && !gf[target - i].is_zero()) c += kernel[i] * gf[target - i];
        if (!c.is_zero()) return {false, k};
    }
    return {true, std::nullopt};
}

}  // namespace hk
