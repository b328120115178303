#include "doctest.h"

#include <random>

#include "hk/errors.hpp"
#include "hk/hankel.hpp"
#include "hk/paths.hpp"
#include "oracles.hpp"

using namespace hk;

TEST_CASE("documented path weights") {
    CHECK(path_weight_dp(PathModel::constant(2, 0, 1), 4) == Scalar(2));
    CHECK(path_weight_dp(PathModel::constant(3, 1, 1), 5) == Scalar(7));
    CHECK(path_weight_dp(PathModel::constant(3, 1, 1, false), 4) == Scalar(7));
    CHECK(path_weight_dp(PathModel::constant(1, 1, 1), 4) == Scalar(90));
    CHECK(path_weight_dp(PathModel::constant(1, 1, 1, false), 3) == Scalar(63));
    CHECK(path_weight_dp(PathModel::constant(2, 1, 1), 0) == Scalar(1));
}

TEST_CASE("path weights equal the sequence terms") {
    std::mt19937_64 rng(31);
    for (int m = 1; m <= 5; ++m)
        for (int rep = 0; rep < 2; ++rep) {
            Scalar a(oracle::random_rational(rng)), b(oracle::random_rational(rng)), t(oracle::random_rational(rng));
            for (auto spec : {SequenceSpec::restricted(m, a, b), SequenceSpec::shifted(m, a, b, t),
                              SequenceSpec::unrestricted(m, a, b)}) {
                auto terms = seq_terms(spec, 21).terms;
                auto model = PathModel::for_spec(spec);
                for (long n = 0; n <= 20; ++n) CHECK(path_weight_dp(model, n) == terms[static_cast<std::size_t>(n)]);
            }
        }
    auto spec = SequenceSpec::symbolic(Family::shifted, 3);
    auto terms = seq_terms(spec, 13).terms;
    for (long n = 0; n <= 12; ++n) CHECK(path_weight_dp(PathModel::for_spec(spec), n) == terms[static_cast<std::size_t>(n)]);
}

TEST_CASE("first-return decomposition for m = 2") {
    std::mt19937_64 rng(4);
    std::vector<Scalar> s, t;
    for (int i = 0; i < 20; ++i) {
        s.emplace_back(oracle::random_rational(rng));
        t.emplace_back(oracle::random_rational(rng));
    }
    PathModel model{2, [&](long h) { return s[static_cast<std::size_t>(h)]; },
                    [&](long h) { return t[static_cast<std::size_t>(h)]; }, true};
    for (long p = 0; p <= 8; ++p)
        for (long q = 0; p + q <= 16; ++q) {
            Scalar sum, tprod = 1;
            for (long i = 0; i <= std::min(p, q); ++i) {
                if (i > 0) tprod *= t[static_cast<std::size_t>(i - 1)];
                sum += path_weight_to(model, p, i) * path_weight_to(model, q, i) * tprod;
            }
            CHECK(path_weight_dp(model, p + q) == sum);
        }
}

TEST_CASE("documented path systems") {
    Scalar a = sym_a(), b = sym_b();
    CHECK(lgv_det_oracle({PathModel::constant(3, 1, 1), 0, 2}).is_zero());
    CHECK(lgv_det_oracle({PathModel::constant(3, a, b), 0, 3}) == -b.pow(2));
    CHECK(lgv_det_oracle({PathModel::constant(4, a, b), 0, 4}) == -b.pow(3));
    CHECK_THROWS_AS(lgv_det_oracle({PathModel::constant(2, a, b), 0, 7}), CapExceeded);
    PathSystemQuery big{PathModel::constant(2, 1, 1), 0, 7, 7};
    CHECK(lgv_det_oracle(big) == Scalar(1));
}

TEST_CASE("non-intersecting systems reproduce the determinants") {
    Scalar a = sym_a(), b = sym_b();
    for (int m = 2; m <= 4; ++m) {
        auto spec = SequenceSpec::restricted(m, a, b);
        for (std::size_t k = 0; k <= 2; ++k) {
            auto dets = hankel_det_range(spec, k, 4);
            for (std::size_t n = 1; n <= 4; ++n) {
                INFO("m=", m, " k=", k, " n=", n);
                CHECK(lgv_det_oracle({PathModel::for_spec(spec), k, n}) == dets[n]);
            }
        }
    }
    auto shifted = SequenceSpec::shifted(3, a, b, sym_t());
    for (std::size_t n = 1; n <= 3; ++n)
        CHECK(lgv_det_oracle({PathModel::for_spec(shifted), 1, n}) == hankel_det({shifted, 1, n}));
}

TEST_CASE("horizontal steps in m-sets") {
    Scalar a = sym_a(), b = sym_b();
    auto c4 = horizontal_step_census({PathModel::constant(4, a, b), 2, 4});
    CHECK(c4.systems > 0);
    CHECK(c4.with_horizontal == 0);
    auto c3 = horizontal_step_census({PathModel::constant(3, a, b), 2, 3});
    CHECK(c3.with_horizontal > 0);
    CHECK_THROWS_AS(horizontal_step_census({PathModel::constant(3, a, b), 1, 3}), std::invalid_argument);
}
