#include "hk/conjectures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "hk/errors.hpp"
#include "hk/hankel.hpp"
#include "hk/orthopoly.hpp"
#include "hk/paths.hpp"
#include "hk/series.hpp"

namespace hk {

namespace {

using C = ConjectureId;

const std::vector<ConjectureInfo>& table() {
    static const std::vector<ConjectureInfo> t = {
        {C::C6_7_jacobi, "C6.7-jacobi", "recurrence data of g(n+1,3,a,b)/a", 3, 3, 18, 0},
        {C::C6_8_dd, "C6.8-dd", "unrestricted m=3: dd0, dd1, dd2", 3, 3, 15, 10},
        {C::R6_10_u_sequence, "R6.10-u-sequence", "u(n) from the conjectured m=3 recurrence data", 3, 3, 18, 0},
        {C::C7_5_d2, "C7.5-d2", "restricted m>=4: d2 at sizes mn and mn-1, horizontal-step census", 4, 6, 14, 9},
        {C::C7_6_D2, "C7.6-D2", "shifted m>=4: D2", 4, 6, 14, 9},
        {C::C7_7_dd, "C7.7-dd", "unrestricted: dd0 (m>=1), dd1 (m>=3), dd2 (m>=4)", 1, 6, 14, 10},
        {C::R7_3_ptilde, "R7.3-ptilde", "bordered determinants of c(n,m,a,b) via Fibonacci polynomials", 2, 5, 12,
         7},
        {C::R7_8_ptilde_lucas, "R7.8-ptilde-lucas", "bordered determinants of g(n,m,a,b) via Lucas polynomials", 2,
         5, 12, 7},
        {C::C7_10_partial_sums, "C7.10-partial-sums", "Hankel determinants of the partial sums H_m(k)", 2, 4, 18, 0},
        {C::C7_10_st_pattern, "C7.10-st-pattern", "recurrence data of H_2(k,z,0,1)", 2, 2, 18, 0},
    };
    return t;
}

long c2(long n) { return n * (n - 1) / 2; }

Scalar pw(const Scalar& x, long e) { return e >= 0 ? x.pow(static_cast<unsigned>(e)) : Scalar(1) / x.pow(-e); }

Scalar two_pow(long e) { return pw(Scalar(2), e); }

Scalar q(long p, long r) { return Scalar::rational(p, r); }

mpq_class small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 8), den(1, 5);
    long p = num(rng);
    if (p >= 0) ++p;
    mpq_class v(p, den(rng));
    v.canonicalize();
    return v;
}

struct Point {
    std::string label;
    Scalar a, b, t;
    bool symbolic = false;
};

std::string render(const Point& p, bool with_t) {
    if (p.symbolic) return "symbolic";
    std::string s = "a=" + p.a.to_string() + ", b=" + p.b.to_string();
    if (with_t) s += ", t=" + p.t.to_string();
    return s;
}

ConjectureCell make_cell(std::string quantity, std::string params) {
    ConjectureCell c;
    c.quantity = std::move(quantity);
    c.params = std::move(params);
    return c;
}

struct Limits {
    int m_min, m_max;
    long max_size, max_symbolic_size;
};

Limits limits(const ConjectureInfo& info, const ConjectureGrid& g) {
    Limits l{info.m_min, info.m_max, info.max_size, info.max_symbolic_size};
    if (g.m_min > 0) l.m_min = std::max(g.m_min, info.m_min);
    if (g.m_max > 0) l.m_max = g.m_max;
    if (g.max_size > 0) l.max_size = g.max_size;
    if (g.max_symbolic_size > 0 && info.max_symbolic_size > 0) l.max_symbolic_size = g.max_symbolic_size;
    if (!g.symbolic) l.max_symbolic_size = 0;
    return l;
}

std::mt19937_64 block_rng(const ConjectureGrid& g, ConjectureId id, int m) {
    std::seed_seq seq{static_cast<std::uint32_t>(g.seed), static_cast<std::uint32_t>(g.seed >> 32),
                      static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(m)};
    return std::mt19937_64(seq);
}

// ones, a=0 (b=2), random points, then the symbolic point.
std::vector<Point> points(const ConjectureGrid& g, std::mt19937_64& rng, bool shifted, bool with_zero_a,
                          bool symbolic) {
    std::vector<Point> pts;
    pts.push_back({"ones", 1, 1, shifted ? 1 : 0});
    if (with_zero_a) pts.push_back({"a=0", 0, 2, shifted ? 1 : 0});
    for (int i = 1; i <= g.random_points; ++i) {
        Point p{"random-" + std::to_string(i), small_rational(rng), small_rational(rng), 0};
        if (shifted) p.t = small_rational(rng);
        pts.push_back(std::move(p));
    }
    if (symbolic) pts.push_back({"symbolic", sym_a(), sym_b(), shifted ? sym_t() : Scalar(0), true});
    return pts;
}

class Builder {
public:
    Builder(ConjectureId id, const ConjectureGrid& g) : cap_(g.cell_cap) { report_.id = id; }

    bool full() {
        if (cap_ > 0 && report_.cells.size() >= cap_) {
            report_.summary.truncated = true;
            return true;
        }
        return false;
    }

    // Readings empty: nothing predicted, the cell is inapplicable.
    void add(ConjectureCell cell, const std::vector<Reading>& readings) {
        if (full()) return;
        for (const auto& r : readings) cell.readings.push_back({r.label, r.value, r.value == cell.computed});
        if (readings.empty() || !cell.note.empty()) {
            cell.verdict = Verdict::inapplicable;
        } else {
            cell.predicted = readings.front().value;
            cell.verdict = cell.predicted == cell.computed ? Verdict::match : Verdict::mismatch;
        }
        auto& s = report_.summary;
        ++s.cells;
        switch (cell.verdict) {
            case Verdict::match: ++s.matches; break;
            case Verdict::mismatch: ++s.mismatches; break;
            case Verdict::inapplicable: ++s.inapplicable; break;
        }
        if (cell.theorem_backed()) {
            ++s.backed;
            if (cell.verdict != Verdict::match || cell.backing_value != cell.computed) ++s.backed_failures;
        }
        report_.cells.push_back(std::move(cell));
    }

    void inapplicable(std::string quantity, std::string params, std::string note) {
        ConjectureCell c = make_cell(std::move(quantity), std::move(params));
        c.note = std::move(note);
        add(std::move(c), {});
    }

    void note(std::string text) { report_.notes.push_back(std::move(text)); }
    ConjectureReport& report() { return report_; }

private:
    std::size_t cap_;
    ConjectureReport report_;
};

// A proven closed form covering the cell, if any. At t = 0 the shifted
// family is the restricted one.
std::optional<std::pair<std::string, Scalar>> proven(Family family, int m, long k, long size, const Point& p) {
    auto search = [&](Family f) -> std::optional<std::pair<std::string, Scalar>> {
        for (ClosedFormId id : all_closed_form_ids()) {
            const auto& info = closed_form_info(id);
            if (info.style != ParamStyle::abt && info.style != ParamStyle::zero_a) continue;
            ClosedFormQuery cq;
            cq.family = f;
            cq.m = m;
            cq.k = k;
            cq.size = size;
            cq.a = p.a;
            cq.b = p.b;
            cq.t = p.t;
            if (in_domain(id, cq)) return std::make_pair(std::string(info.name), closed_form_det(id, cq));
        }
        return std::nullopt;
    };
    if (auto r = search(family)) return r;
    if (family == Family::shifted && p.t.is_zero()) return search(Family::restricted);
    return std::nullopt;
}

std::string det_name(std::string_view prefix, long k, long size) {
    return std::string(prefix) + std::to_string(k) + "(" + std::to_string(size) + ")";
}

// Generic determinant harness: for each point and m, compare the readings of
// `predict` with hankel_det of the family's sequence.
using Predictor = std::function<std::vector<Reading>(int m, long k, long size, const Point& p)>;

void determinant_cells(Builder& out, ConjectureId id, const ConjectureGrid& g, Family family,
                       const std::vector<long>& shifts, std::string_view prefix, const Predictor& predict,
                       const std::function<bool(int m, long k, long size)>& wanted,
                       const std::function<bool(int m, const Point&)>& point_filter = {}) {
    const auto lim = limits(conjecture_info(id), g);
    const bool shifted = family == Family::shifted;
    for (int m = lim.m_min; m <= lim.m_max; ++m) {
        auto rng = block_rng(g, id, m);
        for (const Point& p : points(g, rng, shifted, true, lim.max_symbolic_size > 0)) {
            if (point_filter && !point_filter(m, p)) continue;
            const long max_size = p.symbolic ? lim.max_symbolic_size : lim.max_size;
            SequenceSpec spec{family, m, p.a, p.b, shifted ? p.t : Scalar(0), std::nullopt};
            const auto terms = seq_terms(spec, hankel_terms_needed(static_cast<std::size_t>(max_size), 2)).terms;
            for (long k : shifts) {
                for (long n = 1; n <= max_size; ++n) {
                    if (!wanted(m, k, n)) continue;
                    if (out.full()) return;
                    ConjectureCell cell;
                    cell.quantity = det_name(prefix, k, n);
                    cell.params = "m=" + std::to_string(m) + ", " + render(p, shifted);
                    cell.computed = hankel_det(terms, static_cast<std::size_t>(n), static_cast<std::size_t>(k));
                    if (auto pr = proven(family, m, k, n, p)) {
                        cell.backing = pr->first;
                        cell.backing_value = pr->second;
                    }
                    out.add(std::move(cell), predict(m, k, n, p));
                }
            }
        }
    }
}

// Position of `size` relative to multiples of m: size = m n + r.
struct Split {
    long n, r;
};
Split split(long size, int m) { return {size / m, size % m}; }

std::vector<Reading> one(Scalar v) { return {{"formula", std::move(v)}}; }

// --- m = 3 recurrence data -------------------------------------------------

JacobiCoeffs conjectured_m3(const Scalar& a, const Scalar& b, std::size_t count) {
    JacobiCoeffs j;
    for (std::size_t i = 0; i < count; ++i) {
        const long n = static_cast<long>(i) / 3;
        switch (i % 3) {
            case 0: j.s.push_back(i == 0 ? a : q(2 * n + 1, 2) * a); break;
            case 1: j.s.push_back(a); break;
            default: j.s.push_back(-q(2 * n + 1, 2) * a); break;
        }
    }
    for (std::size_t i = 0; i + 1 < count; ++i) {
        const long n = static_cast<long>(i) / 3;
        switch (i % 3) {
            case 0: j.t.push_back(Scalar(2) * b / (Scalar(2 * n + 1) * a)); break;
            case 1: j.t.push_back(-Scalar(2) * b / (Scalar(2 * n + 1) * a)); break;
            default: j.t.push_back(-a * a / Scalar(4) * Scalar((2 * n + 1) * (2 * n + 3))); break;
        }
    }
    return j;
}

std::vector<Scalar> shifted_g_moments(const Scalar& a, const Scalar& b, std::size_t count) {
    const auto g = seq_terms(SequenceSpec::unrestricted(3, a, b), count + 1).terms;
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(g[i + 1] / a);
    return out;
}

// Computes the recurrence data, shrinking the count at a vanishing d0.
std::pair<JacobiCoeffs, std::string> recurrence_data(const std::vector<Scalar>& moments, std::size_t count) {
    try {
        return {jacobi_from_moments(moments, count), ""};
    } catch (const SingularHankel& e) {
        const auto usable = static_cast<std::size_t>(std::max(e.order() - 1, 0));
        JacobiCoeffs j = usable > 0 ? jacobi_from_moments(moments, usable) : JacobiCoeffs{};
        return {std::move(j), e.what()};
    }
}

ConjectureReport run_c67(const ConjectureGrid& g) {
    Builder out(C::C6_7_jacobi, g);
    const auto lim = limits(conjecture_info(C::C6_7_jacobi), g);
    const auto count = static_cast<std::size_t>(lim.max_size);
    auto rng = block_rng(g, C::C6_7_jacobi, 3);
    for (const Point& p : points(g, rng, false, false, false)) {
        const auto [jc, failure] = recurrence_data(shifted_g_moments(p.a, p.b, 2 * count), count);
        const auto pred = conjectured_m3(p.a, p.b, count);
        const std::string params = render(p, false);
        for (std::size_t i = 0; i < count; ++i) {
            if (i < jc.s.size()) {
                ConjectureCell c = make_cell("s(" + std::to_string(i) + ")", params);
                c.computed = jc.s[i];
                out.add(std::move(c), one(pred.s[i]));
            } else {
                out.inapplicable("s(" + std::to_string(i) + ")", params, failure);
            }
        }
        for (std::size_t i = 0; i + 1 < count; ++i) {
            if (i < jc.t.size()) {
                ConjectureCell c = make_cell("t(" + std::to_string(i) + ")", params);
                c.computed = jc.t[i];
                out.add(std::move(c), one(pred.t[i]));
            } else {
                out.inapplicable("t(" + std::to_string(i) + ")", params, failure);
            }
        }
    }
    return std::move(out.report());
}

// --- dd_k for m = 3 ---------------------------------------------------------

std::vector<Reading> predict_c68(int, long k, long size, const Point& p) {
    const Scalar &a = p.a, &b = p.b;
    const auto [n, r] = split(size, 3);
    if (k == 0) {
        if (r == 0) return one(sign_pow(n) * two_pow(3 * n - 1) * pw(b, n * (3 * n - 1)));
        if (r == 1) return one(sign_pow(n) * two_pow(3 * n) * pw(b, n * (3 * n + 1)));
        return one(0);
    }
    if (k == 1) {
        if (r == 0) return one(sign_pow(n) * two_pow(3 * n) * pw(b, 3 * n * n));
        if (r == 1) return one(sign_pow(n) * Scalar(2 * n + 1) * two_pow(3 * n) * a * pw(b, 3 * n * n + 2 * n));
        const long u = n + 1;  // size = 3u - 1
        return one(sign_pow(u - 1) * Scalar(2 * u - 1) * two_pow(3 * u - 2) * a * pw(b, 3 * u * u - 2 * u));
    }
    if (r == 1)
        return one(sign_pow(n) * Scalar((2 * n + 1) * (2 * n + 1)) * two_pow(3 * n) * a * a *
                   pw(b, 3 * n * (n + 1)));
    if (r == 0) {
        Scalar v = Scalar(2 * n + 1) * two_pow(3 * n) * pw(b, n * (3 * n + 1));
        const Scalar c = binomial(2 * n + 1, 3);
        if (!c.is_zero()) v -= c * two_pow(3 * n - 1) * a.pow(3) * pw(b, 3 * n * n + n - 1);
        return {{"argument list read as (3n, a, b)", sign_pow(n) * v}};
    }
    const long u = n + 1;
    Scalar v = Scalar(2 * u - 1) * two_pow(3 * u - 1) * pw(b, u * (3 * u - 1));
    const Scalar c = binomial(2 * u + 1, 3);
    if (!c.is_zero()) v -= c * two_pow(3 * u - 2) * a.pow(3) * pw(b, 3 * u * u - u - 1);
    return {{"argument list read as (3n-1, a, b)", sign_pow(u) * v},
            {"argument list read as (3n-1, a, b), sign (-1)^(n-1)", sign_pow(u - 1) * v}};
}

// --- general m --------------------------------------------------------------

std::vector<Reading> predict_c77(int m, long k, long size, const Point& p) {
    const Scalar &a = p.a, &b = p.b;
    const auto [n, r] = split(size, m);
    const long cm1 = c2(m - 1), cm = c2(m);
    if (k == 0) {
        if (r == 0) return one(sign_pow(n * cm1) * two_pow(m * n - 1) * pw(b, n * (m * n - 1)));
        if (r == 1) return one(sign_pow(n * cm1) * two_pow(m * n) * pw(b, n * (m * n + 1)));
        return one(0);
    }
    if (k == 1) {
        if (r == 0) return one(sign_pow(n * cm) * two_pow(m * n) * pw(b, m * n * n));
        if (r == 1) return one(sign_pow(n * cm) * Scalar(2 * n + 1) * two_pow(m * n) * a * pw(b, m * n * n + 2 * n));
        if (r == m - 1) {
            const long u = n + 1;
            return one(-sign_pow(u * cm) * Scalar(2 * u - 1) * two_pow(m * u - 2) * a * pw(b, m * u * u - 2 * u));
        }
        return one(0);
    }
    // Two readings of the sign: without and with n in the exponent.
    auto both = [&](long u, const Scalar& v) -> std::vector<Reading> {
        return {{"sign (-1)^C(m-1,2)", sign_pow(cm1) * v}, {"sign (-1)^(n C(m-1,2))", sign_pow(u * cm1) * v}};
    };
    if (r == 0) return both(n, Scalar(2 * n + 1) * two_pow(m * n) * pw(b, n * (m * n + 1)));
    if (r == 1) return both(n, Scalar((2 * n + 1) * (2 * n + 1)) * two_pow(m * n) * a * a * pw(b, n * (m * n + 3)));
    if (r == m - 2) {
        const long u = n + 1;
        return both(u, -Scalar((2 * u - 1) * (2 * u - 1)) * two_pow(m * u - 3) * a * a * pw(b, u * (m * u - 3)));
    }
    if (r == m - 1) {
        const long u = n + 1;
        return both(u, Scalar(2 * u - 1) * two_pow(m * u - 1) * pw(b, u * (m * u - 1)));
    }
    return one(0);
}

ConjectureReport run_c77(const ConjectureGrid& g) {
    Builder out(C::C7_7_dd, g);
    determinant_cells(
        out, C::C7_7_dd, g, Family::unrestricted, {0, 1, 2}, "dd", predict_c77,
        [](int m, long k, long) { return k == 0 || (k == 1 && m >= 3) || (k == 2 && m >= 4); },
        [](int m, const Point& p) { return m >= 2 || (!p.symbolic && p.a.is_zero()); });
    out.note("m = 1 is sampled at a = 0 only: for m = 1 the determinants depend on a, the formula does not");
    return std::move(out.report());
}

// --- d2 / D2 for m >= 4 -----------------------------------------------------

std::vector<Reading> predict_c75(int m, long, long size, const Point& p) {
    const Scalar& b = p.b;
    const auto [n, r] = split(size, m);
    const long cm1 = c2(m - 1);
    if (r == 0) return one(sign_pow(n * cm1) * Scalar(n + 1) * pw(b, m * n * n + n));
    if (r == m - 1) {
        const long u = n + 1;
        return one(sign_pow(u * cm1) * Scalar(u) * pw(b, m * u * u - u));
    }
    return {};
}

std::vector<Reading> predict_c76(int m, long, long size, const Point& p) {
    const Scalar &a = p.a, &b = p.b, &t = p.t;
    const auto [n, r] = split(size, m);
    const long cm1 = c2(m - 1);
    if (r == 0) return one(sign_pow(n * cm1) * Scalar(n + 1) * pw(b, m * n * n + n));
    if (r == 1) {
        const Scalar f = t + Scalar(n + 1) * a;
        return one(sign_pow(n * cm1) * f * f * pw(b, m * n * n + 3 * n));
    }
    if (r == m - 2) {
        const long u = n + 1;
        const Scalar f = t + Scalar(u) * a;
        return one(-sign_pow(u * cm1) * f * f * pw(b, m * u * u - 3 * u));
    }
    if (r == m - 1) {
        const long u = n + 1;
        return one(sign_pow(u * cm1) * Scalar(u) * pw(b, m * u * u - u));
    }
    return one(0);
}

ConjectureReport run_c75(const ConjectureGrid& g) {
    Builder out(C::C7_5_d2, g);
    determinant_cells(out, C::C7_5_d2, g, Family::restricted, {2}, "d", predict_c75,
                      [](int m, long, long size) { return size % m == 0 || size % m == m - 1; });

    // Recursions from size mn - 1 (proven) and from size mn - m (conjectured).
    const auto lim = limits(conjecture_info(C::C7_5_d2), g);
    for (int m = lim.m_min; m <= lim.m_max; ++m) {
        auto rng = block_rng(g, C::C7_5_d2, 100 + m);
        for (const Point& p : points(g, rng, false, true, lim.max_symbolic_size > 0)) {
            const long max_size = p.symbolic ? lim.max_symbolic_size : lim.max_size;
            const auto terms =
                seq_terms(SequenceSpec::restricted(m, p.a, p.b), hankel_terms_needed(static_cast<std::size_t>(max_size), 2))
                    .terms;
            auto d2 = [&](long size) { return hankel_det(terms, static_cast<std::size_t>(size), 2); };
            const long cm1 = c2(m - 1);
            for (long n = 1; m * n <= max_size; ++n) {
                if (out.full()) break;
                const Scalar sign = sign_pow(n * cm1);
                const Scalar top = d2(m * n);
                const Scalar tail = sign * pw(p.b, m * n * n + n);
                const std::string params = "m=" + std::to_string(m) + ", " + render(p, false);
                ConjectureCell proven_cell = make_cell("d2(" + std::to_string(m * n) + ") from d2(" + std::to_string(m * n - 1) + ")",
                                           params);
                proven_cell.computed = top;
                const Scalar rhs = d2(m * n - 1) * pw(p.b, 2 * n) + tail;
                proven_cell.backing = "thm7.4";
                proven_cell.backing_value = rhs;
                out.add(std::move(proven_cell), one(rhs));
                ConjectureCell conj = make_cell("d2(" + std::to_string(m * n) + ") from d2(" + std::to_string(m * n - m) + ")",
                                    params);
                conj.computed = top;
                const Scalar lower = pw(p.b, 2 * n * m - m + 1) * d2(m * n - m);
                out.add(std::move(conj), {{"as printed", sign * lower + tail},
                                          {"sign (-1)^C(m-1,2) on the d2(mn-m) term", sign_pow(cm1) * lower + tail}});
            }
        }
    }

    // No system of size mn with shift 2 uses a horizontal step.
    for (int m = lim.m_min; m <= lim.m_max; ++m) {
        for (long n = 1; m * n <= static_cast<long>(kDefaultEnumerationCap); ++n) {
            if (out.full()) break;
            PathSystemQuery pq{PathModel::constant(m, 1, 1), 2, static_cast<std::size_t>(m * n)};
            const auto census = horizontal_step_census(pq);
            ConjectureCell c = make_cell("census(" + std::to_string(m * n) + ")",
                             "m=" + std::to_string(m) + ", systems=" + std::to_string(census.systems));
            c.computed = Scalar(static_cast<long>(census.with_horizontal));
            out.add(std::move(c), {{"no system with a horizontal step", 0}});
        }
    }
    return std::move(out.report());
}

ConjectureReport run_c76(const ConjectureGrid& g) {
    Builder out(C::C7_6_D2, g);
    determinant_cells(out, C::C7_6_D2, g, Family::shifted, {2}, "D", predict_c76,
                      [](int, long, long) { return true; });
    // The restricted case t = 0 at two random points.
    const auto lim = limits(conjecture_info(C::C7_6_D2), g);
    for (int m = lim.m_min; m <= lim.m_max; ++m) {
        auto rng = block_rng(g, C::C7_6_D2, 100 + m);
        for (int i = 1; i <= 2; ++i) {
            Point p{"t=0-" + std::to_string(i), small_rational(rng), small_rational(rng), 0};
            const auto terms =
                seq_terms(SequenceSpec::shifted(m, p.a, p.b, 0), hankel_terms_needed(static_cast<std::size_t>(lim.max_size), 2))
                    .terms;
            for (long n = 1; n <= lim.max_size; ++n) {
                if (out.full()) break;
                ConjectureCell cell = make_cell(det_name("D", 2, n), "m=" + std::to_string(m) + ", " + render(p, true));
                cell.computed = hankel_det(terms, static_cast<std::size_t>(n), 2);
                if (auto pr = proven(Family::shifted, m, 2, n, p)) {
                    cell.backing = pr->first;
                    cell.backing_value = pr->second;
                }
                out.add(std::move(cell), predict_c76(m, 2, n, p));
            }
        }
    }
    return std::move(out.report());
}

// --- u sequence -------------------------------------------------------------

Scalar predicted_u(long size, const Scalar& a, const Scalar& b) {
    const long r = size % 3;
    if (r == 1) {
        const long n = size / 3;
        return Scalar(2 * n + 1) * a * pw(b, n);
    }
    if (r == 0) {
        const long n = size / 3;
        Scalar v = Scalar(2 * n + 1) * pw(b, n);
        const Scalar c = binomial(2 * n + 1, 3);
        if (!c.is_zero()) v -= a.pow(3) / Scalar(2) * pw(b, n - 1) * c;
        return v;
    }
    const long n = size / 3 + 1;
    return -Scalar(2) / a * pw(b, n) + a * a * pw(b, n - 1) * binomial(2 * n + 1, 2) / Scalar(3);
}

ConjectureReport run_r610(const ConjectureGrid& g) {
    Builder out(C::R6_10_u_sequence, g);
    const auto lim = limits(conjecture_info(C::R6_10_u_sequence), g);
    const auto count = static_cast<std::size_t>(lim.max_size);
    auto rng = block_rng(g, C::R6_10_u_sequence, 3);
    for (const Point& p : points(g, rng, false, false, false)) {
        const auto conj = conjectured_m3(p.a, p.b, count);
        std::vector<Scalar> u{1, conj.s[0]};
        for (std::size_t n = 2; n <= count; ++n) u.push_back(conj.s[n - 1] * u[n - 1] - conj.t[n - 2] * u[n - 2]);
        const auto [jc, failure] = recurrence_data(shifted_g_moments(p.a, p.b, 2 * count), count);
        const std::string params = render(p, false);
        for (std::size_t n = 0; n <= count; ++n) {
            const auto pred = one(predicted_u(static_cast<long>(n), p.a, p.b));
            const std::string qn = "u(" + std::to_string(n) + ")";
            ConjectureCell rec = make_cell(qn, params + ", from the conjectured s, t");
            rec.computed = u[n];
            out.add(std::move(rec), pred);
            if (n <= jc.s.size()) {
                ConjectureCell mom = make_cell(qn, params + ", from the moments");
                mom.computed = orth_poly(jc, n).signed_at_zero;
                out.add(std::move(mom), pred);
            } else {
                out.inapplicable(qn, params + ", from the moments", failure);
            }
        }
    }
    return std::move(out.report());
}

// --- bordered determinants ----------------------------------------------------

// Fib_n(X, s) = X^[n even] Q_n(X^2) and L_n(X, s) = X^[n odd] R_n(X^2).
Scalar fib_even_part(long n, const Scalar& y, const Scalar& s) {
    Scalar prev = 0, cur = 1;
    if (n == 0) return prev;
    for (long i = 2; i <= n; ++i) {
        Scalar next = (i % 2 == 0 ? cur : y * cur) + s * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Scalar lucas_even_part(long n, const Scalar& y, const Scalar& s) {
    Scalar prev = 2, cur = 1;
    if (n == 0) return prev;
    for (long i = 2; i <= n; ++i) {
        Scalar next = (i % 2 == 0 ? y * cur : cur) + s * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Divides by z^e when the quotient is a polynomial.
std::optional<Scalar> divide_by_z_power(const Scalar& v, long e) {
    try {
        return exact_div(v, sym_z().pow(static_cast<unsigned>(e)));
    } catch (const NotDivisible&) {
        return std::nullopt;
    }
}

std::vector<Reading> predict_ptilde_fib(int m, long size, const Point& p) {
    const Scalar z = sym_z();
    const Scalar y = z.pow(static_cast<unsigned>(m - 2)) * (z - p.a) * (z - p.a);
    const Scalar s = -p.b;
    const long cm1 = c2(m - 1);
    auto line_mn1 = [&](long n) {
        return sign_pow(n * cm1) * pw(p.b, n * (m * n + 1)) * (z - p.a) * fib_even_part(2 * n + 2, y, s);
    };
    const auto [n, r] = split(size, m);
    if (r == 0) return one(sign_pow(n * cm1) * pw(p.b, n * (m * n - 1)) * fib_even_part(2 * n + 1, y, s));
    if (r == 1) return one(line_mn1(n));
    if (m >= 3 && r == m - 1) return one(sign_pow(cm1) * pw(p.b, (m - 2) * (2 * n + 1)) * line_mn1(n));
    return one(0);
}

std::vector<Reading> predict_ptilde_lucas(int m, long size, const Point& p) {
    const Scalar z = sym_z();
    const Scalar y = z.pow(static_cast<unsigned>(m - 2)) * (z - p.a) * (z - p.a);
    const Scalar s = -p.b;
    const long cm1 = c2(m - 1);
    auto sign = [&](long n, bool with_n) { return sign_pow(with_n ? n * cm1 : cm1); };
    auto line_mn1 = [&](long n, bool with_n) {
        return sign(n, with_n) * two_pow(m * n) * pw(p.b, n * (m * n + 1)) * (z - p.a) *
               lucas_even_part(2 * n + 1, y, s);
    };
    const auto [n, r] = split(size, m);
    if (r == 0) {
        const Scalar v = two_pow(m * n - 1) * pw(p.b, n * (m * n - 1)) * lucas_even_part(2 * n, y, s);
        return {{"sign (-1)^C(m-1,2)", sign(n, false) * v}, {"sign (-1)^(n C(m-1,2))", sign(n, true) * v}};
    }
    if (r == 1)
        return {{"sign (-1)^C(m-1,2)", line_mn1(n, false)}, {"sign (-1)^(n C(m-1,2))", line_mn1(n, true)}};
    if (m >= 3 && r == m - 1) {
        std::vector<Reading> out;
        for (bool with_n : {false, true}) {
            const std::string sl = with_n ? "sign (-1)^(n C(m-1,2))" : "sign (-1)^C(m-1,2)";
            const Scalar base = sign_pow(cm1) * pw(p.b, (m - 2) * (2 * n + 1)) * line_mn1(n, with_n);
            if (m % 2 == 0)
                if (auto v = divide_by_z_power(two_pow(m - 2) * base, m / 2 - 1))
                    out.push_back({sl + ", as printed", *v});
            out.push_back({sl + ", without z^(1-m/2)", two_pow(m - 2) * base});
            out.push_back({sl + ", without z^(1-m/2) and 2^(m-2)", base});
        }
        return out;
    }
    return one(0);
}

ConjectureReport run_ptilde(ConjectureId id, const ConjectureGrid& g) {
    Builder out(id, g);
    const bool lucas = id == C::R7_8_ptilde_lucas;
    const Family family = lucas ? Family::unrestricted : Family::restricted;
    const auto lim = limits(conjecture_info(id), g);
    for (int m = lim.m_min; m <= lim.m_max; ++m) {
        auto rng = block_rng(g, id, m);
        for (const Point& p : points(g, rng, false, true, lim.max_symbolic_size > 0)) {
            const long max_size = p.symbolic ? lim.max_symbolic_size : lim.max_size;
            const SequenceSpec spec{family, m, p.a, p.b, 0, std::nullopt};
            const auto terms = seq_terms(spec, static_cast<std::size_t>(2 * max_size + 1)).terms;
            for (long n = 1; n <= max_size; ++n) {
                if (out.full()) break;
                ConjectureCell cell = make_cell("ptilde(" + std::to_string(n) + ")", "m=" + std::to_string(m) + ", " + render(p, false));
                cell.computed = char_poly_tilde(terms, static_cast<std::size_t>(n));
                // For m = 2 the recurrence data are constant (with t(0) = 2b
                // for g), so p~_n = d0(n) p_n is a proven identity.
                if (m == 2 && !p.b.is_zero()) {
                    const auto count = static_cast<std::size_t>(n);
                    JacobiCoeffs jc{std::vector<Scalar>(count, p.a), std::vector<Scalar>(count - 1, p.b)};
                    if (lucas && count > 1) jc.t[0] = Scalar(2) * p.b;
                    ClosedFormQuery cq;
                    cq.family = family;
                    cq.m = 2;
                    cq.size = n;
                    cq.a = p.a;
                    cq.b = p.b;
                    const ClosedFormId cf = lucas ? ClosedFormId::Bstar : ClosedFormId::thm7_1;
                    cell.backing = std::string(closed_form_name(cf)) + " with constant recurrence data";
                    cell.backing_value = closed_form_det(cf, cq) * orth_poly(jc, count).p;
                }
                out.add(std::move(cell), lucas ? predict_ptilde_lucas(m, n, p) : predict_ptilde_fib(m, n, p));
            }
        }
    }
    return std::move(out.report());
}

// --- partial sums -----------------------------------------------------------

// D^{(m,K)}(n) magnitude from the case split of the conjecture; nullopt for
// sizes predicted to vanish.
std::optional<Scalar> partial_sum_magnitude(int m, long K, long n) {
    auto ip = [](long base, long e) { return Scalar(base).pow(static_cast<unsigned>(e)); };
    if (n % m != 0 && n % m != 1) return std::nullopt;
    if (K % 2 == 0) {
        const long k = K / 2, P = m * k;
        if (n % m == 0) {
            const long l = (n - 1) / P, j = (n - P * l) / m;
            return ip(l + 2, j * m - 1) * ip(l + 1, m * (k - j));
        }
        const long l = n / P, j = (n - 1 - P * l) / m;
        return ip(l + 2, j * m) * ip(l + 1, m * (k - j) - 1);
    }
    const long k = (K - 1) / 2, P = m * K;
    if (n % m == 0) {
        const long l = (n - 1) / P, j = (n - P * l) / m;
        if (j <= k) return ip(2 * l + 2, j * m - 1) * ip(2 * l + 1, m * (k - j) + 1);
        return ip(2 * l + 3, (j - 1 - k) * m) * ip(2 * l + 2, (2 * k + 1 - j) * m);
    }
    const long l = n / P, j = (n - 1 - P * l) / m;
    if (j <= k) return ip(2 * l + 2, j * m) * ip(2 * l + 1, m * (k - j));
    return ip(2 * l + 3, (j - k - 1) * m + 1) * ip(2 * l + 2, m * (2 * k + 1 - j) - 1);
}

long printed_b_exponent(int m, long n) { return n % m == 0 ? n * (n * m - 1) : n * (n * m + 1); }

std::vector<Reading> predict_partial_sums(int m, long K, long n, const Scalar& b) {
    const auto mag = partial_sum_magnitude(m, K, n);
    if (!mag) return one(0);
    const Scalar printed_sign = sign_pow(c2(n)), alt_sign = sign_pow(c2(m - 1) * (n / m));
    const Scalar printed_b = pw(b, printed_b_exponent(m, n)), weight_b = pw(b, n * (n - 1) / m);
    return {{"as printed", printed_sign * *mag * printed_b},
            {"sign (-1)^C(n,2), b^(n(n-1)/m)", printed_sign * *mag * weight_b},
            {"sign (-1)^(C(m-1,2) floor(n/m)), printed b exponent", alt_sign * *mag * printed_b},
            {"sign (-1)^(C(m-1,2) floor(n/m)), b^(n(n-1)/m)", alt_sign * *mag * weight_b}};
}

struct Displayed {
    long K;
    std::vector<long> values;
};

const std::vector<Displayed>& displayed_sequences() {
    static const std::vector<Displayed> d = {
        {3, {1, 1, 2, 4, 4, 6, 9, 9, 12, 16, 16, 20}},
        {5, {1, 1, 2, 4, 8, 16, 16, 24, 36, 54, 81, 81, 108, 144, 192}},
        {7, {1, 1, 2, 4, 8, 16, 32, 64, 64, 96, 144, 216, 324, 486, 729, 729, 972}},
    };
    return d;
}

ConjectureReport run_c710(const ConjectureGrid& g) {
    Builder out(C::C7_10_partial_sums, g);
    for (const auto& d : displayed_sequences()) {
        const auto terms = partial_sum_terms(2, d.K, 0, 1, hankel_terms_needed(d.values.size(), 0));
        for (std::size_t n = 0; n < d.values.size(); ++n) {
            if (out.full()) break;
            ConjectureCell c = make_cell("D(2," + std::to_string(d.K) + ")(" + std::to_string(n) + ")", "displayed, a=0, b=1");
            c.computed = hankel_det(terms, n, 0);
            out.add(std::move(c), {{"displayed", Scalar(d.values[n])}});
        }
    }

    const auto lim = limits(conjecture_info(C::C7_10_partial_sums), g);
    // Exponent e with D(b=2) = 2^e D(b=1), tallied by candidate.
    std::map<std::string, std::size_t> exponent_hits;
    std::size_t exponent_cells = 0;
    for (int m = lim.m_min; m <= lim.m_max; ++m) {
        auto rng = block_rng(g, C::C7_10_partial_sums, m);
        std::vector<Point> pts{{"b=1", 0, 1, 0}, {"b=2", 0, 2, 0}};
        for (int i = 1; i <= g.random_points; ++i)
            pts.push_back({"random-" + std::to_string(i), small_rational(rng), small_rational(rng), 0});
        for (long K = 2; K <= 7; ++K) {
            std::vector<Scalar> at_one;
            for (const Point& p : pts) {
                const auto terms = partial_sum_terms(m, K, p.a, p.b,
                                                     hankel_terms_needed(static_cast<std::size_t>(lim.max_size), 0));
                for (long n = 1; n <= lim.max_size; ++n) {
                    if (out.full()) break;
                    ConjectureCell c = make_cell("D(" + std::to_string(m) + "," + std::to_string(K) + ")(" + std::to_string(n) + ")",
                                     render(p, false));
                    c.computed = hankel_det(terms, static_cast<std::size_t>(n), 0);
                    if (p.label == "b=1") at_one.push_back(c.computed);
                    if (p.label == "b=2" && !at_one[static_cast<std::size_t>(n - 1)].is_zero()) {
                        const Scalar ratio = c.computed / at_one[static_cast<std::size_t>(n - 1)];
                        ++exponent_cells;
                        const std::pair<std::string, long> candidates[] = {
                            {"n(nm-1) / n(nm+1)", printed_b_exponent(m, n)},
                            {"n(n-1)/m", n * (n - 1) / m},
                        };
                        for (const auto& [label, e] : candidates)
                            if (ratio == two_pow(e) || ratio == -two_pow(e)) ++exponent_hits[label];
                    }
                    out.add(std::move(c), predict_partial_sums(m, K, n, p.b));
                }
            }
        }
    }
    std::string exp_note = "b exponent measured at b=2 over " + std::to_string(exponent_cells) + " nonzero cells:";
    for (const char* label : {"n(nm-1) / n(nm+1)", "n(n-1)/m"})
        exp_note += std::string(" ") + label + " fits " + std::to_string(exponent_hits[label]) + ";";
    exp_note.pop_back();
    out.note(exp_note);
    out.note("the printed range k > 1 excludes K = 2 and K = 3; both are sampled since the displayed example uses K = 3");
    return std::move(out.report());
}

ConjectureReport run_st(const ConjectureGrid& g) {
    Builder out(C::C7_10_st_pattern, g);
    const auto lim = limits(conjecture_info(C::C7_10_st_pattern), g);
    const auto count = static_cast<std::size_t>(lim.max_size);
    for (long K = 2; K <= 7; ++K) {
        const auto terms = partial_sum_terms(2, K, 0, 1, 2 * count);
        const auto [jc, failure] = recurrence_data(terms, count);
        const std::string params = "m=2, k=" + std::to_string(K) + ", a=0, b=1";
        for (std::size_t i = 0; i < count; ++i) {
            const std::string qs = "s(" + std::to_string(i) + ")";
            if (i < jc.s.size()) {
                ConjectureCell c = make_cell(qs, params);
                c.computed = jc.s[i];
                out.add(std::move(c), one(0));
            } else {
                out.inapplicable(qs, params, failure);
            }
        }
        for (std::size_t i = 0; i + 1 < count; ++i) {
            const long ii = static_cast<long>(i);
            Scalar pred = 1;
            if (ii % K == 0)
                pred = q(ii / K + 2, ii / K + 1);
            else if ((ii + 1) % K == 0)
                pred = q((ii + 1) / K, (ii + 1) / K + 1);
            const std::string qt = "t(" + std::to_string(i) + ")";
            if (i < jc.t.size()) {
                ConjectureCell c = make_cell(qt, params);
                c.computed = jc.t[i];
                out.add(std::move(c), one(pred));
            } else {
                out.inapplicable(qt, params, failure);
            }
        }
    }
    return std::move(out.report());
}

ConjectureReport run_c68(const ConjectureGrid& g) {
    Builder out(C::C6_8_dd, g);
    determinant_cells(out, C::C6_8_dd, g, Family::unrestricted, {0, 1, 2}, "dd", predict_c68,
                      [](int, long, long) { return true; });
    out.note("the argument lists (3n, 2, a, b) and (3n-1, 2, a, b) of dd2 are read as (3n, a, b) and (3n-1, a, b)");
    return std::move(out.report());
}

}  // namespace

const std::vector<ConjectureId>& all_conjecture_ids() {
    static const std::vector<ConjectureId> ids = [] {
        std::vector<ConjectureId> v;
        for (const auto& i : table()) v.push_back(i.id);
        return v;
    }();
    return ids;
}

const ConjectureInfo& conjecture_info(ConjectureId id) {
    for (const auto& i : table())
        if (i.id == id) return i;
    throw std::invalid_argument("unknown conjecture id");
}

std::string_view conjecture_name(ConjectureId id) { return conjecture_info(id).name; }

std::optional<ConjectureId> parse_conjecture_id(std::string_view name) {
    for (const auto& i : table())
        if (i.name == name) return i.id;
    return std::nullopt;
}

std::vector<Scalar> partial_sum_terms(int m, long k, const Scalar& a, const Scalar& b, std::size_t count) {
    if (m < 1 || k < 1) throw std::invalid_argument("partial sums need m >= 1 and k >= 1");
    if (count == 0) return {};
    const std::size_t order = count - 1;
    const auto f = gen_series(SequenceSpec::restricted(m, a, b), order);
    const auto g = gen_series(SequenceSpec::unrestricted(m, a, b), order);
    const auto step = (f * f).scaled(b).shifted(static_cast<std::size_t>(m));
    return (g - g * step.pow(static_cast<unsigned>(k))).coeffs();
}

namespace {

// Per-label tallies, for ids with more than one reading.
void add_reading_notes(ConjectureReport& r) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
    for (const auto& c : r.cells)
        for (const auto& rd : c.readings) {
            auto& t = tally[rd.label];
            ++t.second;
            if (rd.matches) ++t.first;
        }
    if (tally.size() < 2) return;
    for (const auto& [label, t] : tally)
        r.notes.push_back("reading '" + label + "' matches " + std::to_string(t.first) + " of " +
                          std::to_string(t.second) + " cells");
}

ConjectureReport dispatch(ConjectureId id, const ConjectureGrid& grid) {
    switch (id) {
        case C::C6_7_jacobi: return run_c67(grid);
        case C::C6_8_dd: return run_c68(grid);
        case C::R6_10_u_sequence: return run_r610(grid);
        case C::C7_5_d2: return run_c75(grid);
        case C::C7_6_D2: return run_c76(grid);
        case C::C7_7_dd: return run_c77(grid);
        case C::R7_3_ptilde:
        case C::R7_8_ptilde_lucas: return run_ptilde(id, grid);
        case C::C7_10_partial_sums: return run_c710(grid);
        case C::C7_10_st_pattern: return run_st(grid);
    }
    throw std::invalid_argument("unknown conjecture id");
}

}  // namespace

ConjectureReport check_conjecture(ConjectureId id, const ConjectureGrid& grid) {
    ConjectureReport r = dispatch(id, grid);
    add_reading_notes(r);
    return r;
}

}  // namespace hk
