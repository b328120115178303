#include "doctest.h"

#include <random>

#include "hk/hankel.hpp"
#include "oracles.hpp"

using namespace hk;

namespace {

std::vector<Scalar> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("documented determinants") {
    auto catalan = SequenceSpec::named(NamedSequence::catalan);
    CHECK(hankel_det({catalan, 2, 4}) == Scalar(5));
    CHECK(hankel_det_range(SequenceSpec::named(NamedSequence::motzkin), 1, 11) ==
          ints({1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0}));
    CHECK(hankel_det({SequenceSpec::symbolic(Family::restricted, 3), 0, 5}).is_zero());
    CHECK(hankel_det({SequenceSpec::named(NamedSequence::central_binomial), 2, 3}) == Scalar(56));
    CHECK(hankel_det(ints({1, 1, 2, 5, 14}), 3, 0) == Scalar(1));
}

TEST_CASE("size zero and terms needed") {
    CHECK(hankel_terms_needed(0, 5) == 0u);
    CHECK(hankel_terms_needed(3, 2) == 7u);
    CHECK(hankel_det(std::vector<Scalar>{}, 0, 3) == Scalar(1));
    CHECK_THROWS(hankel_matrix(ints({1, 2}), 2, 1));
}

TEST_CASE("hankel determinants agree with cofactor expansion") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 6; ++rep) {
        Scalar a(oracle::random_rational(rng)), b(oracle::random_rational(rng)), t(oracle::random_rational(rng));
        for (int m = 1; m <= 4; ++m)
            for (auto spec : {SequenceSpec::restricted(m, a, b), SequenceSpec::shifted(m, a, b, t),
                              SequenceSpec::unrestricted(m, a, b)}) {
                auto terms = seq_terms(spec, 12).terms;
                for (std::size_t k = 0; k <= 2; ++k)
                    for (std::size_t n = 0; n <= 5; ++n)
                        CHECK(hankel_det(terms, n, k) == oracle::cofactor_det(oracle::hankel_matrix(terms, n, k)));
            }
    }
}

TEST_CASE("symbolic determinants specialize to numeric ones") {
    std::mt19937_64 rng(5);
    auto spec = SequenceSpec::symbolic(Family::shifted, 3);
    auto sym = hankel_det_range(spec, 1, 5);
    for (int rep = 0; rep < 3; ++rep) {
        Assignment pt{{Var::a, oracle::random_rational(rng)}, {Var::b, oracle::random_rational(rng)},
                      {Var::t, oracle::random_rational(rng)}};
        auto num = hankel_det_range(spec.evaluate(pt), 1, 5);
        for (std::size_t n = 0; n <= 5; ++n) CHECK(sym[n].evaluate(pt) == num[n]);
    }
}

TEST_CASE("condensation identity") {
    CHECK(condensation_check(SequenceSpec::named(NamedSequence::catalan), 3));
    CHECK(condensation_check(SequenceSpec::restricted(3, 1, 1), 5));
    CHECK_THROWS(condensation_check(SequenceSpec::restricted(3, 1, 1), 0));
    for (auto name : all_named_sequences())
        for (std::size_t n = 1; n <= 7; ++n) CHECK(condensation_check(SequenceSpec::named(name), n));
    std::mt19937_64 rng(23);
    for (int m = 1; m <= 5; ++m) {
        Scalar a(oracle::random_rational(rng)), b(oracle::random_rational(rng)), t(oracle::random_rational(rng));
        for (std::size_t n = 1; n <= 6; ++n) {
            CHECK(condensation_check(SequenceSpec::restricted(m, a, b), n));
            CHECK(condensation_check(SequenceSpec::shifted(m, a, b, t), n));
            CHECK(condensation_check(SequenceSpec::unrestricted(m, a, b), n));
        }
    }
    for (std::size_t n = 1; n <= 4; ++n) CHECK(condensation_check(SequenceSpec::symbolic(Family::shifted, 2), n));
}

TEST_CASE("symbolic shortcut agrees with plain division-free elimination") {
    for (auto fam : {Family::restricted, Family::shifted, Family::unrestricted})
        for (int m = 1; m <= 4; ++m) {
            auto terms = seq_terms(SequenceSpec::symbolic(fam, m), 14).terms;
            for (std::size_t k = 0; k <= 2; ++k)
                for (std::size_t n = 0; n <= 6; ++n)
                    CHECK(hankel_det(terms, n, k) == hankel_det(terms, n, k, DetMethod::berkowitz));
        }
    // a = x + y, b = x y in the shifted family
    Scalar x = Scalar::variable(Var::x), y = Scalar::variable(Var::y);
    auto terms = seq_terms(SequenceSpec::shifted(2, x + y, x * y, sym_t()), 12).terms;
    for (std::size_t k = 0; k <= 2; ++k)
        for (std::size_t n = 0; n <= 5; ++n)
            CHECK(hankel_det(terms, n, k) == hankel_det(terms, n, k, DetMethod::berkowitz));
    // terms that are not homogeneous fall back to the plain path
    std::vector<Scalar> mixed{1, sym_a() + 1, sym_b() * sym_a(), sym_t(), Scalar(3), sym_a() * sym_t()};
    CHECK(hankel_det(mixed, 3, 1) == oracle::cofactor_det(oracle::hankel_matrix(mixed, 3, 1)));
}
