#include "hk/sequences.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace hk {

namespace {

struct NamedEntry {
    NamedSequence id;
    std::string_view name;
    Family family;
    int m;
    long a, b, t;
};

// catalan is C(n,2,2,1,-1): level steps weigh 2 off the axis and 1 on it.
constexpr std::array<NamedEntry, 8> kNamed{{
    {NamedSequence::catalan, "catalan", Family::shifted, 2, 2, 1, -1},
    {NamedSequence::aerated_catalan, "aerated-catalan", Family::restricted, 2, 0, 1, 0},
    {NamedSequence::motzkin, "motzkin", Family::restricted, 2, 1, 1, 0},
    {NamedSequence::schroeder, "schroeder", Family::restricted, 1, 1, 1, 0},
    {NamedSequence::central_binomial, "central-binomial", Family::unrestricted, 2, 2, 1, 0},
    {NamedSequence::aerated_central_binomial, "aerated-central-binomial", Family::unrestricted, 2, 0, 1, 0},
    {NamedSequence::central_trinomial, "central-trinomial", Family::unrestricted, 2, 1, 1, 0},
    {NamedSequence::delannoy, "delannoy", Family::unrestricted, 1, 1, 1, 0},
}};

const NamedEntry& entry(NamedSequence n) {
    for (const auto& e : kNamed)
        if (e.id == n) return e;
    throw std::logic_error("unknown named sequence");
}

void check_m(int m) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
}

// Sum_{i+j=r} u(i) v(j), skipping zero factors.
Scalar convolve(const std::vector<Scalar>& u, const std::vector<Scalar>& v, long r) {
    Scalar s;
    for (long i = 0; i <= r; ++i) {
        const Scalar& x = u[static_cast<std::size_t>(i)];
        const Scalar& y = v[static_cast<std::size_t>(r - i)];
        if (!x.is_zero() && !y.is_zero()) s += x * y;
    }
    return s;
}

std::vector<Scalar> restricted_terms(std::size_t count, int m, const Scalar& a, const Scalar& b) {
    std::vector<Scalar> c(count);
    if (count == 0) return c;
    c[0] = 1;
    for (std::size_t n = 1; n < count; ++n) {
        Scalar v = a * c[n - 1];
        long r = static_cast<long>(n) - m;
        if (r >= 0) v += b * convolve(c, c, r);
        c[n] = std::move(v);
    }
    return c;
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::restricted: return "restricted";
        case Family::shifted: return "shifted";
        case Family::unrestricted: return "unrestricted";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view s) {
    for (Family f : {Family::restricted, Family::shifted, Family::unrestricted})
        if (family_name(f) == s) return f;
    return std::nullopt;
}

std::string_view sequence_name(NamedSequence n) { return entry(n).name; }

std::optional<NamedSequence> parse_sequence_name(std::string_view s) {
    for (const auto& e : kNamed)
        if (e.name == s) return e.id;
    return std::nullopt;
}

const std::vector<NamedSequence>& all_named_sequences() {
    static const std::vector<NamedSequence> all = [] {
        std::vector<NamedSequence> v;
        for (const auto& e : kNamed) v.push_back(e.id);
        return v;
    }();
    return all;
}

SequenceSpec SequenceSpec::restricted(int m, Scalar a, Scalar b) {
    check_m(m);
    return {Family::restricted, m, std::move(a), std::move(b), 0, std::nullopt};
}

SequenceSpec SequenceSpec::shifted(int m, Scalar a, Scalar b, Scalar t) {
    check_m(m);
    return {Family::shifted, m, std::move(a), std::move(b), std::move(t), std::nullopt};
}

SequenceSpec SequenceSpec::unrestricted(int m, Scalar a, Scalar b) {
    check_m(m);
    return {Family::unrestricted, m, std::move(a), std::move(b), 0, std::nullopt};
}

SequenceSpec SequenceSpec::named(NamedSequence n) {
    const auto& e = entry(n);
    return {e.family, e.m, e.a, e.b, e.t, n};
}

SequenceSpec SequenceSpec::symbolic(Family f, int m) {
    check_m(m);
    return {f, m, sym_a(), sym_b(), f == Family::shifted ? sym_t() : Scalar(0), std::nullopt};
}

SequenceSpec SequenceSpec::evaluate(const Assignment& point) const {
    SequenceSpec s = *this;
    s.a = a.evaluate(point);
    s.b = b.evaluate(point);
    s.t = t.evaluate(point);
    return s;
}

bool SequenceSpec::is_symbolic() const {
    return !a.is_numeric() || !b.is_numeric() || (family == Family::shifted && !t.is_numeric());
}

std::string SequenceSpec::describe() const {
    std::string s(family_name(family));
    s += "(m=" + std::to_string(m) + ", a=" + a.to_string() + ", b=" + b.to_string();
    if (family == Family::shifted) s += ", t=" + t.to_string();
    s += ")";
    if (name) s = std::string(sequence_name(*name)) + " = " + s;
    return s;
}

SequenceWindow seq_terms(const SequenceSpec& spec, std::size_t count) {
    check_m(spec.m);
    SequenceWindow w{spec, 0, {}, GenerationPath::recurrence};
    std::vector<Scalar> c = restricted_terms(count, spec.m, spec.a, spec.b);
    if (spec.family == Family::restricted || count == 0) {
        w.terms = std::move(c);
        return w;
    }
    std::vector<Scalar> out(count);
    out[0] = 1;
    const Scalar level = spec.family == Family::shifted ? spec.a + spec.t : spec.a;
    const Scalar down = spec.family == Family::shifted ? spec.b : Scalar(2) * spec.b;
    for (std::size_t n = 1; n < count; ++n) {
        Scalar v = level * out[n - 1];
        long r = static_cast<long>(n) - spec.m;
        if (r >= 0) v += down * convolve(out, c, r);
        out[n] = std::move(v);
    }
    w.terms = std::move(out);
    return w;
}

Scalar c_closed_form(long n, int m, const Scalar& a, const Scalar& b) {
    check_m(m);
    Scalar s;
    for (long k = 0; k * m <= n; ++k) {
        Scalar term = catalan_number(k) * binomial(n + (2 - m) * k, 2 * k);
        if (term.is_zero()) continue;
        s += term * a.pow(static_cast<unsigned>(n - m * k)) * b.pow(static_cast<unsigned>(k));
    }
    return s;
}

Scalar g_closed_form(long n, int m, const Scalar& a, const Scalar& b) {
    check_m(m);
    Scalar s;
    for (long k = 0; k * m <= n; ++k) {
        Scalar term = binomial(2 * k, k) * binomial(n + 2 * k - m * k, 2 * k);
        if (term.is_zero()) continue;
        s += term * a.pow(static_cast<unsigned>(n - m * k)) * b.pow(static_cast<unsigned>(k));
    }
    return s;
}

std::vector<Scalar> shifted_from_closed_form(std::size_t count, int m, const Scalar& a, const Scalar& b,
                                             const Scalar& t) {
    std::vector<Scalar> c(count), out(count);
    for (std::size_t n = 0; n < count; ++n) c[n] = c_closed_form(static_cast<long>(n), m, a, b);
    for (std::size_t n = 0; n < count; ++n) {
        Scalar v = c[n];
        if (n > 0 && !t.is_zero()) v += t * convolve(c, out, static_cast<long>(n) - 1);
        out[n] = std::move(v);
    }
    return out;
}

SequenceWindow closed_form_terms(const SequenceSpec& spec, std::size_t count) {
    SequenceWindow w{spec, 0, {}, GenerationPath::closed_form};
    switch (spec.family) {
        case Family::restricted:
            for (std::size_t n = 0; n < count; ++n)
                w.terms.push_back(c_closed_form(static_cast<long>(n), spec.m, spec.a, spec.b));
            break;
        case Family::shifted:
            w.terms = shifted_from_closed_form(count, spec.m, spec.a, spec.b, spec.t);
            break;
        case Family::unrestricted:
            for (std::size_t n = 0; n < count; ++n)
                w.terms.push_back(g_closed_form(static_cast<long>(n), spec.m, spec.a, spec.b));
            break;
    }
    return w;
}

std::vector<Scalar> poly_family_range(PolyKind kind, long count, const Scalar& x, const Scalar& s) {
    std::vector<Scalar> v;
    if (count <= 0) return v;
    v.reserve(static_cast<std::size_t>(count));
    switch (kind) {
        case PolyKind::fib: v.push_back(0); break;
        case PolyKind::lucas: v.push_back(2); break;
        case PolyKind::normalized_lucas: v.push_back(1); break;
    }
    if (count > 1) v.push_back(kind == PolyKind::fib ? Scalar(1) : x);
    for (long n = 2; n < count; ++n) {
        const Scalar& p1 = v[static_cast<std::size_t>(n - 1)];
        const Scalar& p2 = v[static_cast<std::size_t>(n - 2)];
        Scalar weight = (kind == PolyKind::normalized_lucas && n == 2) ? Scalar(2) * s : s;
        v.push_back(x * p1 + weight * p2);
    }
    return v;
}

Scalar poly_family(PolyKind kind, long n, const Scalar& x, const Scalar& s) {
    if (n < 0) throw std::invalid_argument("poly_family index must be non-negative");
    return poly_family_range(kind, n + 1, x, s).back();
}

std::vector<Scalar> basis_expansion(long n, PolyKind kind) {
    if (n < 0) throw std::invalid_argument("basis_expansion index must be non-negative");
    std::vector<Scalar> out;
    for (long k = 0; 2 * k <= n; ++k) {
        if (kind == PolyKind::fib)
            out.push_back(binomial(n, k) - binomial(n, k - 1));
        else
            out.push_back(binomial(n, k));
    }
    return out;
}

Scalar basis_reconstruction(long n, PolyKind kind) {
    const auto coeffs = basis_expansion(n, kind);
    const Scalar z = sym_z();
    const PolyKind basis = kind == PolyKind::fib ? PolyKind::fib : PolyKind::normalized_lucas;
    const auto polys = poly_family_range(basis, n + 2, z, Scalar(-1));
    Scalar s;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        long index = kind == PolyKind::fib ? n + 1 - 2 * static_cast<long>(k) : n - 2 * static_cast<long>(k);
        s += coeffs[k] * polys[static_cast<std::size_t>(index)];
    }
    return s;
}

M1Reduction m1_reduce(const Scalar& a, const Scalar& b) {
    Scalar ua = a + Scalar(2) * b;
    Scalar ub = b * (a + b);
    return {ua, ub, -b, ua, ub};
}

}  // namespace hk
