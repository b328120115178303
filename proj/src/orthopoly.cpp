#include "hk/orthopoly.hpp"

#include <stdexcept>

#include "hk/errors.hpp"
#include "hk/matrix.hpp"

namespace hk {

namespace {

using ZPoly = std::vector<Scalar>;  // coefficients of z^0, z^1, ...

Scalar functional(const ZPoly& p, const std::vector<Scalar>& moments) {
    Scalar s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        if (i >= moments.size()) throw std::invalid_argument("not enough moments");
        s += p[i] * moments[i];
    }
    return s;
}

ZPoly multiply(const ZPoly& l, const ZPoly& r) {
    ZPoly out(l.size() + r.size() - 1);
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) out[i + j] += l[i] * r[j];
    return out;
}

Scalar to_scalar(const ZPoly& p) {
    Scalar z = Scalar::variable(Var::z), out, power = 1;
    for (const auto& c : p) {
        out += c * power;
        power *= z;
    }
    return out;
}

const Scalar& at(const std::vector<Scalar>& v, std::size_t i, const char* what) {
    if (i >= v.size()) throw std::invalid_argument(std::string("not enough Jacobi coefficients: ") + what);
    return v[i];
}

}  // namespace

std::vector<Scalar> moments_from_jacobi(const JacobiCoeffs& jc, std::size_t count) {
    std::vector<Scalar> out;
    if (count == 0) return out;
    std::vector<Scalar> row{Scalar(1)};  // v(n, 0..)
    out.push_back(1);
    for (std::size_t n = 1; n < count; ++n) {
        const std::size_t top = std::min(n, count - 1 - n);
        std::vector<Scalar> next(top + 1);
        for (std::size_t j = 0; j <= top; ++j) {
            Scalar v;
            if (j >= 1 && j - 1 < row.size()) v += row[j - 1];
            if (j < row.size() && !row[j].is_zero()) v += at(jc.s, j, "s") * row[j];
            if (j + 1 < row.size() && !row[j + 1].is_zero()) v += at(jc.t, j, "t") * row[j + 1];
            next[j] = std::move(v);
        }
        row = std::move(next);
        out.push_back(row[0]);
    }
    return out;
}

JacobiCoeffs jacobi_from_moments(const std::vector<Scalar>& moments, std::size_t count) {
    JacobiCoeffs jc;
    if (count == 0) return jc;
    if (moments.size() < 2 * count) throw std::invalid_argument("jacobi_from_moments needs 2*count moments");
    const ZPoly zed{Scalar(0), Scalar(1)};
    ZPoly previous, current{Scalar(1)};
    Scalar previous_norm;
    for (std::size_t n = 0; n < count; ++n) {
        const ZPoly square = multiply(current, current);
        const Scalar norm = functional(square, moments);
        if (norm.is_zero()) throw SingularHankel(static_cast<int>(n + 1));
        jc.s.push_back(functional(multiply(zed, square), moments) / norm);
        if (n > 0) jc.t.push_back(norm / previous_norm);
        if (n + 1 == count) break;
        ZPoly next(current.size() + 1);
        for (std::size_t i = 0; i < current.size(); ++i) {
            next[i + 1] += current[i];
            next[i] -= jc.s.back() * current[i];
        }
        if (n > 0)
            for (std::size_t i = 0; i < previous.size(); ++i) next[i] -= jc.t.back() * previous[i];
        previous = std::move(current);
        current = std::move(next);
        previous_norm = norm;
    }
    return jc;
}

OrthPoly orth_poly(const JacobiCoeffs& jc, std::size_t n) {
    ZPoly previous, current{Scalar(1)};
    for (std::size_t k = 0; k < n; ++k) {
        ZPoly next(current.size() + 1);
        for (std::size_t i = 0; i < current.size(); ++i) {
            next[i + 1] += current[i];
            next[i] -= at(jc.s, k, "s") * current[i];
        }
        if (k > 0)
            for (std::size_t i = 0; i < previous.size(); ++i) next[i] -= at(jc.t, k - 1, "t") * previous[i];
        previous = std::move(current);
        current = std::move(next);
    }
    return {to_scalar(current), n % 2 == 0 ? current[0] : -current[0]};
}

Scalar char_poly_tilde(const std::vector<Scalar>& terms, std::size_t n) {
    if (n == 0) return 1;
    if (terms.size() < 2 * n) throw std::invalid_argument("char_poly_tilde needs 2n terms");
    // Expansion along the z column.
    Scalar out, power = 1;
    const Scalar z = Scalar::variable(Var::z);
    for (std::size_t i = 0; i <= n; ++i) {
        RingMatrix minor(n);
        for (std::size_t r = 0, rr = 0; r <= n; ++r) {
            if (r == i) continue;
            for (std::size_t c = 0; c < n; ++c) minor(rr, c) = terms[r + c];
            ++rr;
        }
        Scalar d = det_exact(minor);
        out += ((i + n) % 2 == 0 ? d : -d) * power;
        power *= z;
    }
    return out;
}

Scalar char_poly_tilde(const SequenceSpec& spec, std::size_t n) {
    return char_poly_tilde(seq_terms(spec, 2 * n).terms, n);
}

NormalizedCharPoly char_poly_normalized(const SequenceSpec& spec, std::size_t n) {
    Scalar p = char_poly_tilde(spec, n);
    const std::size_t e = n == 0 ? 0 : n * (n - 1);
    if (e % static_cast<std::size_t>(spec.m) != 0) return {p, false};
    Scalar divisor = spec.b.pow(static_cast<unsigned>(e / static_cast<std::size_t>(spec.m)));
    if (divisor.is_zero()) return {p, false};
    try {
        return {p / divisor, true};
    } catch (const NotDivisible&) {
        return {p, false};
    }
}

JacobiCoeffs jacobi_shifted_m3(const Scalar& a, const Scalar& b, const Scalar& t, std::size_t count) {
    JacobiCoeffs jc;
    for (std::size_t i = 0; i < count; ++i) {
        const long n = static_cast<long>(i / 3);
        const Scalar lead = Scalar(n + 1) * a + t;
        switch (i % 3) {
            case 0: jc.s.push_back(lead); break;
            case 1: jc.s.push_back(a); break;
            default: jc.s.push_back(-lead); break;
        }
        if (i + 1 == count) break;
        switch (i % 3) {
            case 0: jc.t.push_back(b / lead); break;
            case 1: jc.t.push_back(-(b / lead)); break;
            default: jc.t.push_back(-(lead * (Scalar(n + 2) * a + t))); break;
        }
    }
    return jc;
}

std::vector<Scalar> shifted_m3_moments(const Scalar& a, const Scalar& b, const Scalar& t, std::size_t count) {
    auto w = seq_terms(SequenceSpec::shifted(3, a, b, t), count + 1).terms;
    std::vector<Scalar> out;
    for (std::size_t n = 0; n < count; ++n) out.push_back(w[n + 1] / a);
    return out;
}

}  // namespace hk
