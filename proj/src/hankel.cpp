#include "hk/hankel.hpp"

#include <array>
#include <optional>
#include <stdexcept>

namespace hk {

namespace {

using Weights = std::array<long, kVarCount>;

constexpr std::array<Var, kVarCount> kAllVars{Var::a, Var::b, Var::t, Var::x, Var::y, Var::z};

long weight_of(Monomial mono, const Weights& w) {
    long s = 0;
    for (Var v : kAllVars) s += w[static_cast<unsigned>(v)] * mono.exponent(v);
    return s;
}

bool homogeneous(const Scalar& s, long weight, const Weights& w) {
    if (s.is_zero()) return true;
    if (s.is_numeric()) return weight == 0;
    const Poly p = s.to_poly();
    for (const auto& term : p.numerator_terms())
        if (weight_of(term.mono, w) != weight) return false;
    return true;
}

// Weights with a, t, x, y of weight 1 and b of weight m under which term j has
// weight j, if there are any.
std::optional<Weights> detect_weights(const std::vector<Scalar>& terms, std::size_t count) {
    for (long m = 1; m <= 16; ++m) {
        Weights w{1, m, 1, 1, 1, 0};
        bool ok = true;
        for (std::size_t j = 0; j < count && ok; ++j) ok = homogeneous(terms[j], static_cast<long>(j), w);
        if (ok) return w;
    }
    return std::nullopt;
}

// Every Hankel entry term(i+j+k) is homogeneous of weight i+j+k, so the
// determinant is homogeneous of weight n(n-1) + nk. Setting one weight-1
// variable to 1 removes a variable from the expensive division-free
// elimination; the powers are restored afterwards.
std::optional<Scalar> dehomogenized_det(const std::vector<Scalar>& terms, std::size_t n, std::size_t k) {
    const std::size_t count = 2 * n - 1 + k;
    std::array<bool, kVarCount> present{};
    for (std::size_t j = 0; j < count; ++j) {
        if (terms[j].is_numeric()) continue;
        const Poly p = terms[j].to_poly();
        for (const auto& term : p.numerator_terms())
            for (Var v : kAllVars)
                if (term.mono.exponent(v) > 0) present[static_cast<unsigned>(v)] = true;
    }
    int used = 0;
    for (bool p : present) used += p;
    if (used < 2 || present[static_cast<unsigned>(Var::z)]) return std::nullopt;
    auto w = detect_weights(terms, count);
    if (!w) return std::nullopt;
    std::optional<Var> pivot;
    for (Var v : {Var::a, Var::x, Var::t, Var::y})
        if (present[static_cast<unsigned>(v)]) {
            pivot = v;
            break;
        }
    if (!pivot) return std::nullopt;

    std::vector<Scalar> reduced(count);
    for (std::size_t j = 0; j < count; ++j) reduced[j] = terms[j].substitute(*pivot, 1);
    RingMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = reduced[i + j + k];
    Scalar d = det_exact(m, DetMethod::automatic);
    if (d.is_zero()) return d;

    const long total = static_cast<long>(n * (n - 1) + n * k);
    const Poly p = d.to_poly();
    std::vector<std::pair<Monomial, mpq_class>> out;
    out.reserve(p.term_count());
    for (const auto& term : p.numerator_terms()) {
        const long missing = total - weight_of(term.mono, *w);
        if (missing < 0) throw std::logic_error("determinant exceeds its homogeneous weight");
        out.emplace_back(term.mono * Monomial::of(*pivot, static_cast<unsigned>(missing)),
                         mpq_class(term.coeff, p.denominator()));
    }
    for (auto& [mono, c] : out) c.canonicalize();
    return Scalar(Poly::from_rational_terms(std::move(out)));
}

}  // namespace

RingMatrix hankel_matrix(const std::vector<Scalar>& terms, std::size_t n, std::size_t k) {
    if (terms.size() < hankel_terms_needed(n, k))
        throw std::invalid_argument("not enough sequence terms for the Hankel matrix");
    RingMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = terms[i + j + k];
    return m;
}

Scalar hankel_det(const std::vector<Scalar>& terms, std::size_t n, std::size_t k, DetMethod method) {
    if (terms.size() < hankel_terms_needed(n, k))
        throw std::invalid_argument("not enough sequence terms for the Hankel matrix");
    if (method == DetMethod::automatic && n >= 3)
        if (auto d = dehomogenized_det(terms, n, k)) return *d;
    return det_exact(hankel_matrix(terms, n, k), method);
}

Scalar hankel_det(const HankelQuery& q, DetMethod method) {
    const auto w = seq_terms(q.spec, hankel_terms_needed(q.n, q.k));
    return hankel_det(w.terms, q.n, q.k, method);
}

std::vector<Scalar> hankel_det_range(const std::vector<Scalar>& terms, std::size_t k, std::size_t max_n,
                                     DetMethod method) {
    std::vector<Scalar> out;
    out.reserve(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) out.push_back(hankel_det(terms, n, k, method));
    return out;
}

std::vector<Scalar> hankel_det_range(const SequenceSpec& spec, std::size_t k, std::size_t max_n,
                                     DetMethod method) {
    const auto w = seq_terms(spec, hankel_terms_needed(max_n, k));
    return hankel_det_range(w.terms, k, max_n, method);
}

bool condensation_check(const SequenceSpec& spec, std::size_t n) {
    if (n == 0) throw std::invalid_argument("condensation check needs n >= 1");
    const auto w = seq_terms(spec, hankel_terms_needed(n + 1, 2));
    const auto& a = w.terms;
    Scalar d2n = hankel_det(a, n, 2), d0n = hankel_det(a, n, 0), d0n1 = hankel_det(a, n + 1, 0);
    Scalar d2m = hankel_det(a, n - 1, 2), d1n = hankel_det(a, n, 1);
    return d2n * d0n == d0n1 * d2m + d1n * d1n;
}

}  // namespace hk
