#include "doctest.h"

#include <random>

#include "hk/conjectures.hpp"
#include "hk/hankel.hpp"
#include "oracles.hpp"

using namespace hk;

namespace {

// g(n,m,a,b) = sum_k binom(2k,k) binom(n - (m-2)k, 2k) a^{n-mk} b^k.
Scalar g_oracle(long n, int m, const Scalar& a, const Scalar& b) {
    Scalar s;
    for (long k = 0; m * k <= n; ++k)
        s += binomial(2 * k, k) * binomial(n - (m - 2) * k, 2 * k) * a.pow(static_cast<unsigned>(n - m * k)) *
             b.pow(static_cast<unsigned>(k));
    return s;
}

const ConjectureCell* find(const ConjectureReport& r, const std::string& quantity, const std::string& params) {
    for (const auto& c : r.cells)
        if (c.quantity == quantity && c.params == params) return &c;
    return nullptr;
}

std::string fingerprint(const ConjectureReport& r) {
    std::string s;
    for (const auto& c : r.cells)
        s += c.quantity + "|" + c.params + "|" + c.predicted.to_string() + "|" + c.computed.to_string() + "|" +
             std::string(verdict_name(c.verdict)) + "\n";
    for (const auto& n : r.notes) s += n + "\n";
    return s;
}

}  // namespace

TEST_CASE("partial sums: documented coefficients") {
    // k = 1: Catalan numbers at even indices.
    const auto h1 = partial_sum_terms(2, 1, 0, 1, 16);
    for (long n = 0; n < 8; ++n) {
        CHECK(h1[static_cast<std::size_t>(2 * n)] == catalan_number(n));
        CHECK(h1[static_cast<std::size_t>(2 * n + 1)] == Scalar(0));
    }
    const auto h3 = partial_sum_terms(2, 3, 0, 1, 12);
    const long expected[] = {1, 2, 6, 19, 62, 207};
    for (long n = 0; n < 6; ++n) {
        CHECK(h3[static_cast<std::size_t>(2 * n)] == Scalar(expected[n]));
        CHECK(h3[static_cast<std::size_t>(2 * n)] == binomial(2 * n, n) - binomial(2 * n, n - 3));
    }
    for (int m = 1; m <= 4; ++m)
        for (long k = 1; k <= 4; ++k) CHECK(partial_sum_terms(m, k, Scalar::rational(3, 2), 5, 1)[0] == Scalar(1));
    CHECK_THROWS_AS(partial_sum_terms(2, 0, 0, 1, 4), std::invalid_argument);
}

TEST_CASE("partial sums agree with g below index mk") {
    std::mt19937_64 rng(7);
    for (int m = 1; m <= 4; ++m)
        for (long k = 1; k <= 3; ++k) {
            const Scalar a = oracle::random_rational(rng), b = oracle::random_rational(rng);
            const auto h = partial_sum_terms(m, k, a, b, static_cast<std::size_t>(m * k + 3));
            for (long n = 0; n < m * k; ++n) CHECK(h[static_cast<std::size_t>(n)] == g_oracle(n, m, a, b));
            CHECK(h[static_cast<std::size_t>(m * k)] != g_oracle(m * k, m, a, b));
        }
}

TEST_CASE("partial sums: small Hankel determinants equal dd0") {
    // D(n) only reads coefficients below 2n - 1, so it equals dd0(n) while 2n - 1 <= mk.
    for (int m = 2; m <= 3; ++m)
        for (long k = 2; k <= 6; ++k) {
            const auto h = partial_sum_terms(m, k, 0, 1, 40);
            std::vector<Scalar> g;
            for (long n = 0; n < 40; ++n) g.push_back(g_oracle(n, m, 0, 1));
            for (long n = 1; 2 * n - 1 <= m * k; ++n)
                CHECK(oracle::cofactor_det(oracle::hankel_matrix(h, static_cast<std::size_t>(n), 0)) ==
                      hankel_det(g, static_cast<std::size_t>(n), 0));
        }
}

TEST_CASE("ids parse and print") {
    CHECK(all_conjecture_ids().size() == 10);
    for (ConjectureId id : all_conjecture_ids()) CHECK(parse_conjecture_id(conjecture_name(id)) == id);
    CHECK(parse_conjecture_id("C7.10-st-pattern") == ConjectureId::C7_10_st_pattern);
    CHECK_FALSE(parse_conjecture_id("C9.9"));
}

TEST_CASE("documented cells") {
    const auto c68 = check_conjecture(ConjectureId::C6_8_dd);
    const auto* cell = find(c68, "dd0(3)", "m=3, a=1, b=1");
    REQUIRE(cell);
    CHECK(cell->predicted == Scalar(-4));
    CHECK(cell->computed == Scalar(-4));
    CHECK(cell->verdict == Verdict::match);

    const auto c75 = check_conjecture(ConjectureId::C7_5_d2);
    const auto* sym = find(c75, "d2(4)", "m=4, symbolic");
    REQUIRE(sym);
    CHECK(sym->predicted == Scalar(-2) * sym_b().pow(5));
    CHECK(sym->computed == sym->predicted);
}

TEST_CASE("displayed partial-sum determinants are reproduced") {
    const auto r = check_conjecture(ConjectureId::C7_10_partial_sums);
    std::size_t displayed = 0;
    for (const auto& c : r.cells)
        if (c.params.rfind("displayed", 0) == 0) {
            ++displayed;
            CHECK(c.verdict == Verdict::match);
        }
    CHECK(displayed == 12 + 15 + 17);
    const auto* d = find(r, "D(2,3)(11)", "displayed, a=0, b=1");
    REQUIRE(d);
    CHECK(d->computed == Scalar(20));
    bool exponent_note = false;
    for (const auto& n : r.notes)
        if (n.find("n(n-1)/m fits") != std::string::npos) exponent_note = true;
    CHECK(exponent_note);
}

TEST_CASE("u sequence: the recurrence reproduces the stated values") {
    const auto r = check_conjecture(ConjectureId::R6_10_u_sequence);
    std::size_t recurrence_cells = 0;
    for (const auto& c : r.cells)
        if (c.params.find("conjectured s, t") != std::string::npos) {
            ++recurrence_cells;
            CHECK(c.verdict == Verdict::match);
        }
    CHECK(recurrence_cells > 0);
    // u(4) = 3ab at a = b = 1.
    const auto* u4 = find(r, "u(4)", "a=1, b=1, from the conjectured s, t");
    REQUIRE(u4);
    CHECK(u4->computed == Scalar(3));
}

TEST_CASE("every harness runs and theorem-backed cells match") {
    for (ConjectureId id : all_conjecture_ids()) {
        CAPTURE(conjecture_name(id));
        ConjectureGrid g;
        g.max_size = 8;
        g.max_symbolic_size = 5;
        const auto r = check_conjecture(id, g);
        CHECK(r.summary.cells == r.cells.size());
        CHECK(r.summary.cells == r.summary.matches + r.summary.mismatches + r.summary.inapplicable);
        CHECK(r.summary.backed_failures == 0);
        for (const auto& c : r.cells)
            if (c.theorem_backed()) {
                CHECK(c.verdict == Verdict::match);
                CHECK(c.backing_value == c.computed);
            }
    }
}

TEST_CASE("theorem-backed cells exist where special cases are proven") {
    const auto r = check_conjecture(ConjectureId::C7_7_dd);
    bool m2 = false, m1 = false;
    for (const auto& c : r.cells) {
        if (!c.theorem_backed()) continue;
        if (c.params.rfind("m=2,", 0) == 0) m2 = true;
        if (c.params.rfind("m=1,", 0) == 0) m1 = true;
    }
    CHECK(m2);
    CHECK(m1);
    CHECK(r.summary.backed_failures == 0);
}

TEST_CASE("reports are reproducible and seed dependent") {
    ConjectureGrid g;
    g.max_size = 7;
    g.max_symbolic_size = 4;
    const auto a = check_conjecture(ConjectureId::C7_6_D2, g);
    const auto b = check_conjecture(ConjectureId::C7_6_D2, g);
    CHECK(fingerprint(a) == fingerprint(b));
    g.seed = 99;
    CHECK(fingerprint(check_conjecture(ConjectureId::C7_6_D2, g)) != fingerprint(a));
}

TEST_CASE("cell cap truncates without failing") {
    ConjectureGrid g;
    g.cell_cap = 5;
    const auto r = check_conjecture(ConjectureId::C7_7_dd, g);
    CHECK(r.cells.size() == 5);
    CHECK(r.summary.truncated);
}

TEST_CASE("mismatches are recorded with the reading that fits") {
    // The printed dd2 sign omits n; the reading with n fits every cell.
    ConjectureGrid g;
    g.m_min = 4;
    g.m_max = 4;
    g.max_size = 10;
    g.symbolic = false;
    const auto r = check_conjecture(ConjectureId::C7_7_dd, g);
    std::size_t dd2 = 0;
    for (const auto& c : r.cells) {
        if (c.quantity.rfind("dd2", 0) != 0 || c.readings.size() != 2) continue;
        ++dd2;
        CHECK(c.readings[1].matches);
    }
    CHECK(dd2 > 0);
    CHECK(r.summary.mismatches > 0);
}
