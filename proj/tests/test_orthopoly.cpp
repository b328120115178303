#include "doctest.h"

#include <random>

#include "hk/errors.hpp"
#include "hk/hankel.hpp"
#include "hk/orthopoly.hpp"
#include "oracles.hpp"

using namespace hk;

namespace {

std::vector<Scalar> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

JacobiCoeffs constant(Scalar s, Scalar t, std::size_t n) {
    return {std::vector<Scalar>(n, s), std::vector<Scalar>(n > 0 ? n - 1 : 0, t)};
}

Scalar z() { return Scalar::variable(Var::z); }

}  // namespace

TEST_CASE("moments from recurrence data") {
    CHECK(moments_from_jacobi(constant(0, 1, 5), 9) == ints({1, 0, 1, 0, 2, 0, 5, 0, 14}));
    auto j = constant(0, 1, 4);
    j.t[0] = 2;
    CHECK(moments_from_jacobi(j, 7) == ints({1, 0, 2, 0, 6, 0, 20}));
    // s(0) = x+y+t, s(n) = x+y, t(n) = xy at (1,1,-1) gives the Catalan numbers
    auto cat = constant(2, 1, 6);
    cat.s[0] = 1;
    CHECK(moments_from_jacobi(cat, 8) == seq_terms(SequenceSpec::named(NamedSequence::catalan), 8).terms);
    CHECK_THROWS_AS(moments_from_jacobi(constant(0, 1, 1), 6), std::invalid_argument);
}

TEST_CASE("recurrence data from moments") {
    auto jc = jacobi_from_moments(ints({1, 0, 1, 0, 2, 0, 5, 0, 14, 0}), 5);
    CHECK(jc == constant(0, 1, 5));
    CHECK_THROWS_AS(jacobi_from_moments(ints({1, 1, 1, 1, 1, 1}), 3), SingularHankel);
    try {
        jacobi_from_moments(ints({1, 1, 1, 1, 1, 1}), 3);
    } catch (const SingularHankel& e) {
        CHECK(e.order() == 2);
    }
    // scaling the moments leaves the recurrence unchanged
    CHECK(jacobi_from_moments(ints({3, 0, 3, 0, 6, 0, 15, 0}), 4) == constant(0, 1, 4));
}

TEST_CASE("round trip on random data") {
    std::mt19937_64 rng(12);
    for (std::size_t n = 1; n <= 12; ++n) {
        JacobiCoeffs jc;
        for (std::size_t i = 0; i < n; ++i) jc.s.emplace_back(oracle::random_rational(rng));
        for (std::size_t i = 0; i + 1 < n; ++i) jc.t.emplace_back(oracle::random_rational(rng));
        auto moments = moments_from_jacobi(jc, 2 * n);
        CHECK(jacobi_from_moments(moments, n) == jc);
    }
}

TEST_CASE("orthogonal polynomials") {
    CHECK(orth_poly(constant(0, 1, 5), 4).p == z().pow(4) - Scalar(3) * z().pow(2) + Scalar(1));
    auto binom = jacobi_from_moments(seq_terms(SequenceSpec::named(NamedSequence::central_binomial), 8).terms, 4);
    CHECK(orth_poly(binom, 3).p == poly_family(PolyKind::normalized_lucas, 3, z() - Scalar(2), -1));
    JacobiCoeffs j{{Scalar::rational(3, 2)}, {}};
    CHECK(orth_poly(j, 1).p == z() - Scalar::rational(3, 2));
    CHECK(orth_poly(j, 1).signed_at_zero == Scalar::rational(3, 2));
    Scalar a = sym_a(), b = sym_b();
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(orth_poly(constant(a, b, 7), n).p == poly_family(PolyKind::fib, static_cast<long>(n) + 1, z() - a, -b));
}

TEST_CASE("m = 2 families and their recurrence data") {
    Scalar a = sym_a(), b = sym_b();
    auto restricted = jacobi_from_moments(seq_terms(SequenceSpec::restricted(2, a, b), 12).terms, 6);
    CHECK(restricted == constant(a, b, 6));
    auto unrestricted = jacobi_from_moments(seq_terms(SequenceSpec::unrestricted(2, a, b), 12).terms, 6);
    for (std::size_t n = 0; n <= 5; ++n)
        CHECK(orth_poly(unrestricted, n).p == poly_family(PolyKind::normalized_lucas, static_cast<long>(n), z() - a, -b));
}

TEST_CASE("d1 equals signed p_n(0) times d0") {
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 3; ++rep) {
        JacobiCoeffs jc;
        for (int i = 0; i < 11; ++i) jc.s.emplace_back(oracle::random_rational(rng));
        for (int i = 0; i < 10; ++i) jc.t.emplace_back(oracle::random_rational(rng));
        auto moments = moments_from_jacobi(jc, 22);
        Scalar d0 = 1;
        for (std::size_t n = 0; n <= 10; ++n) {
            if (n >= 2)
                for (std::size_t j = 0; j + 1 < n; ++j) d0 *= jc.t[j];
            CHECK(hankel_det(moments, n, 0) == d0);
            CHECK(hankel_det(moments, n, 1) == orth_poly(jc, n).signed_at_zero * d0);
        }
    }
}

TEST_CASE("shifted m = 3 recurrence data") {
    std::vector<Scalar> s{1, 1, -1, 2, 1, -2};
    std::vector<Scalar> t{1, -1, -2, Scalar::rational(1, 2), Scalar::rational(-1, 2)};
    CHECK(jacobi_from_moments(shifted_m3_moments(1, 1, 0, 12), 6) == JacobiCoeffs{s, t});
    CHECK(jacobi_shifted_m3(1, 1, 0, 6) == JacobiCoeffs{s, t});
    std::mt19937_64 rng(66);
    int tested = 0;
    while (tested < 5) {
        Scalar a(oracle::random_rational(rng)), b(oracle::random_rational(rng)), tt(oracle::random_rational(rng));
        bool ok = !a.is_zero();
        for (long n = 1; n <= 6; ++n) ok = ok && !(Scalar(n) * a + tt).is_zero();
        if (!ok) continue;
        CHECK(jacobi_from_moments(shifted_m3_moments(a, b, tt, 24), 12) == jacobi_shifted_m3(a, b, tt, 12));
        ++tested;
    }
}

TEST_CASE("bordered determinants") {
    Scalar a = sym_a(), b = sym_b();
    for (std::size_t n = 0; n <= 6; ++n) {
        Scalar expected = b.pow(static_cast<unsigned>(n * (n - (n ? 1 : 0)) / 2)) *
                          poly_family(PolyKind::fib, static_cast<long>(n) + 1, z() - a, -b);
        CHECK(char_poly_tilde(SequenceSpec::restricted(2, a, b), n) == expected);
        auto normalized = char_poly_normalized(SequenceSpec::restricted(2, a, b), n);
        CHECK(normalized.normalized);
        CHECK(normalized.value == poly_family(PolyKind::fib, static_cast<long>(n) + 1, z() - a, -b));
    }
    CHECK(char_poly_tilde(SequenceSpec::restricted(2, a, b), 3) ==
          b.pow(3) * poly_family(PolyKind::fib, 4, z() - a, -b));
    CHECK(char_poly_tilde(SequenceSpec::restricted(4, a, b), 2).is_zero());
    CHECK(char_poly_tilde(SequenceSpec::restricted(3, 1, 1), 0) == Scalar(1));
    CHECK_FALSE(char_poly_normalized(SequenceSpec::restricted(3, a, b), 2).normalized);
    // the bordered determinant is d0(n) p_n(z) when the recurrence exists
    auto terms = shifted_m3_moments(2, 3, 1, 10);
    auto jc = jacobi_from_moments(terms, 4);
    for (std::size_t n = 0; n <= 4; ++n)
        CHECK(char_poly_tilde(terms, n) == hankel_det(terms, n, 0) * orth_poly(jc, n).p);
}
