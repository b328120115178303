#include "doctest.h"

#include <random>

#include "hk/errors.hpp"
#include "hk/series.hpp"
#include "oracles.hpp"

using namespace hk;

namespace {

TruncatedSeries ints(std::initializer_list<long> v) { return TruncatedSeries(std::vector<Scalar>(v.begin(), v.end())); }

}  // namespace

TEST_CASE("series basics") {
    // sqrt(1 - 4 z^2)
    auto root = ints({1, 0, -4, 0, 0}).sqrt();
    CHECK(root == ints({1, 0, -2, 0, -2}));
    CHECK(root.order() == 4);
    CHECK(ints({1, -1, 0, 0}).reciprocal() == ints({1, 1, 1, 1}));
    CHECK(ints({1, -4, 0, 0}).sqrt().reciprocal() == ints({1, 2, 6, 20}));
    CHECK_THROWS_AS(ints({0, 1}).reciprocal(), ZeroConstantTerm);
    CHECK_THROWS_AS(ints({2, 1}).sqrt(), NonUnitConstantTerm);
    CHECK((ints({1, 2, 3}) * ints({1, 1})).order() == 1);
    CHECK(ints({1, 2, 3}).degree() == 2u);
    CHECK_FALSE(TruncatedSeries(3).degree());
}

TEST_CASE("square root and reciprocal are inverse operations") {
    std::mt19937_64 rng(3);
    std::vector<Scalar> c{1};
    for (int i = 0; i < 12; ++i) c.emplace_back(oracle::random_rational(rng));
    TruncatedSeries u(c);
    CHECK(u.sqrt() * u.sqrt() == u);
    CHECK(u * u.reciprocal() == TruncatedSeries::constant(1, 12));
    TruncatedSeries p({Scalar(1), sym_a(), sym_b() * sym_t(), Scalar(-3), sym_a().pow(2)});
    CHECK(p.sqrt().pow(2) == p);
    CHECK(p * p.reciprocal() == TruncatedSeries::constant(1, 4));
}

TEST_CASE("generating series prefixes") {
    CHECK(gen_series(SequenceSpec::restricted(2, 1, 1), 6) == ints({1, 1, 2, 4, 9, 21, 51}));
    CHECK(gen_series(SequenceSpec::unrestricted(3, 1, 1), 7) == ints({1, 1, 1, 3, 7, 13, 27, 61}));
    CHECK(gen_series(SequenceSpec::shifted(2, 0, 1, 0), 6) == ints({1, 0, 1, 0, 2, 0, 5}));
}

TEST_CASE("radical forms agree with the recurrences") {
    std::mt19937_64 rng(99);
    for (int m = 1; m <= 5; ++m) {
        for (int rep = 0; rep < 5; ++rep) {
            Scalar a(oracle::random_rational(rng)), b(oracle::random_rational(rng)), t(oracle::random_rational(rng));
            for (auto spec : {SequenceSpec::restricted(m, a, b), SequenceSpec::shifted(m, a, b, t),
                              SequenceSpec::unrestricted(m, a, b)}) {
                CHECK(gen_series(spec, 25).coeffs() == seq_terms(spec, 26).terms);
            }
        }
    }
}

TEST_CASE("F = f / (1 - t z f)") {
    std::mt19937_64 rng(8);
    for (int m = 1; m <= 4; ++m) {
        Scalar a(oracle::random_rational(rng)), b(oracle::random_rational(rng)), t(oracle::random_rational(rng));
        auto f = gen_series(SequenceSpec::restricted(m, a, b), 25);
        CHECK(shifted_from_restricted(f, t) == gen_series(SequenceSpec::shifted(m, a, b, t), 25));
    }
    auto f = gen_series(SequenceSpec::restricted(3, sym_a(), sym_b()), 10);
    CHECK(shifted_from_restricted(f, sym_t()) == gen_series(SequenceSpec::shifted(3, sym_a(), sym_b(), sym_t()), 10));
}

TEST_CASE("alpha and beta") {
    for (int m = 1; m <= 5; ++m) {
        auto al = alpha_series(m, sym_a(), sym_b(), 14);
        auto be = beta_series(m, sym_a(), sym_b(), 14);
        CHECK(al * be == TruncatedSeries::monomial(sym_b(), static_cast<std::size_t>(m), 14));
        TruncatedSeries line(14);
        line[0] = 1;
        line[1] = -sym_a();
        CHECK(al + be == line);
        auto f = gen_series(SequenceSpec::restricted(m, sym_a(), sym_b()), 14);
        CHECK(al * f == TruncatedSeries::constant(1, 14));
    }
}

TEST_CASE("kernel polynomials") {
    Scalar a = sym_a(), b = sym_b();
    auto k0 = kernel_poly(0, 3, a, b, KernelVariant::fib);
    CHECK(k0 == TruncatedSeries({Scalar(1), -a}));
    CHECK(k0.order() == 1);
    auto k1 = kernel_poly(1, 3, 1, 1, KernelVariant::fib);
    // (1-z)^3 - 2 z^3 (1-z)
    CHECK(k1 == ints({1, -3, 3, -3, 2}));
    CHECK(k1.order() == 4);
    CHECK(kernel_poly(0, 4, a, b, KernelVariant::lucas) == TruncatedSeries({Scalar(1), -a}));
    for (int m = 2; m <= 5; ++m)
        for (long n = 0; n <= 3; ++n) CHECK(kernel_poly(n, m, a, b, KernelVariant::fib).degree() == std::size_t(n * m + 1));
    // fib_t at t = 0 is fib
    CHECK(kernel_poly(2, 3, a, b, KernelVariant::fib_t, 0) == kernel_poly(2, 3, a, b, KernelVariant::fib));
}

TEST_CASE("vanishing of kernel times generating function") {
    CHECK(verify_vanishing(0, 3, 1, 1, KernelVariant::fib).holds);
    CHECK(verify_vanishing(1, 3, sym_a(), sym_b(), KernelVariant::fib).holds);
    CHECK(verify_vanishing(1, 4, 1, 1, KernelVariant::lucas).holds);
    CHECK(verify_vanishing(2, 3, sym_a(), sym_b(), KernelVariant::fib_t, sym_t()).holds);
}

TEST_CASE("mismatched pairings do not vanish") {
    // The fib kernel multiplied by G instead of f.
    const long n = 1;
    const int m = 3;
    auto kernel = kernel_poly(n, m, 1, 1, KernelVariant::fib);
    auto g = gen_series(SequenceSpec::unrestricted(m, 1, 1), 2 * n * m + m);
    TruncatedSeries padded(g.order());
    for (std::size_t i = 0; i <= kernel.order(); ++i) padded[i] = kernel[i];
    auto p = padded * g;
    bool all_zero = true;
    for (long k = 1; k <= m * n + m - 1; ++k)
        if (!p[static_cast<std::size_t>(n * m + k)].is_zero()) all_zero = false;
    CHECK_FALSE(all_zero);

    // The fib_t kernel needs F at the same t; at t = 0 it is paired with f and holds,
    // so a nonzero t must be carried consistently.
    auto wrong = kernel_poly(n, m, 1, 1, KernelVariant::fib_t, 2);
    auto f = gen_series(SequenceSpec::restricted(m, 1, 1), 2 * n * m + m);
    TruncatedSeries w(f.order());
    for (std::size_t i = 0; i <= wrong.order(); ++i) w[i] = wrong[i];
    auto q = w * f;
    bool wrong_zero = true;
    for (long k = 1; k <= m * n + m - 1; ++k)
        if (!q[static_cast<std::size_t>(n * m + k)].is_zero()) wrong_zero = false;
    CHECK_FALSE(wrong_zero);
}

TEST_CASE("vanishing holds symbolically for m in 2..5, n in 0..3, all kernels") {
    for (int m = 2; m <= 5; ++m)
        for (long n = 0; n <= 3; ++n) {
            CHECK(verify_vanishing(n, m, sym_a(), sym_b(), KernelVariant::fib).holds);
            CHECK(verify_vanishing(n, m, sym_a(), sym_b(), KernelVariant::fib_t, sym_t()).holds);
            CHECK(verify_vanishing(n, m, sym_a(), sym_b(), KernelVariant::lucas).holds);
        }
}
