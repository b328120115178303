#include "hk/sweep.hpp"

#include <algorithm>
#include <random>

#include "hk/hankel.hpp"

namespace hk {

namespace {

struct Point {
    std::string label;
    ClosedFormQuery values;  // family, m, k filled per block
    bool symbolic = false;
};

mpq_class small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 8), den(1, 5);
    long p = num(rng);
    if (p >= 0) ++p;  // skip zero
    mpq_class q(p, den(rng));
    q.canonicalize();
    return q;
}

mpq_class wide_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-1000000, 999999), den(1, 97);
    long p = num(rng);
    if (p >= 0) ++p;
    mpq_class q(p, den(rng));
    q.canonicalize();
    return q;
}

std::string render_params(const ClosedFormInfo& info, const ClosedFormQuery& q) {
    switch (info.style) {
        case ParamStyle::fixed: return info.fixed_spec.describe();
        case ParamStyle::xyt: {
            std::string s = "x=" + q.x.to_string() + ", y=" + q.y.to_string();
            if (q.family == Family::shifted) s += ", t=" + q.t.to_string();
            return s;
        }
        case ParamStyle::abt:
        case ParamStyle::zero_a: break;
    }
    std::string s = "a=" + q.a.to_string() + ", b=" + q.b.to_string();
    if (q.family == Family::shifted) s += ", t=" + q.t.to_string();
    return s;
}

std::vector<Point> block_points(const ClosedFormInfo& info, Family family, std::mt19937_64& rng,
                                const SweepOptions& opt) {
    std::vector<Point> pts;
    const bool shifted = family == Family::shifted;
    const bool zero_a = info.style == ParamStyle::zero_a;
    if (info.style == ParamStyle::fixed) {
        if (opt.mode != SweepMode::symbolic) pts.push_back({"fixed", {}, false});
        return pts;
    }
    if (opt.mode != SweepMode::symbolic) {
        Point ones{"ones", {}, false};
        ones.values.a = zero_a ? 0 : 1;
        ones.values.b = 1;
        ones.values.t = shifted ? 1 : 0;
        ones.values.x = 1;
        ones.values.y = 1;
        pts.push_back(ones);
        for (int i = 1; i <= opt.random_points; ++i) {
            Point p{"random-" + std::to_string(i), {}, false};
            p.values.a = zero_a ? Scalar(0) : Scalar(small_rational(rng));
            p.values.b = small_rational(rng);
            p.values.t = shifted ? Scalar(small_rational(rng)) : Scalar(0);
            p.values.x = small_rational(rng);
            p.values.y = small_rational(rng);
            pts.push_back(std::move(p));
        }
    }
    if (opt.mode != SweepMode::numeric) {
        Point p{"symbolic", {}, true};
        p.values.a = zero_a ? Scalar(0) : sym_a();
        p.values.b = sym_b();
        p.values.t = shifted ? sym_t() : Scalar(0);
        p.values.x = Scalar::variable(Var::x);
        p.values.y = Scalar::variable(Var::y);
        pts.push_back(std::move(p));
    }
    return pts;
}

// Substitutes a random point for every variable and compares both sides.
// Returns the first disagreeing pair, or the last compared pair.
struct EvalOutcome {
    bool all_match = true;
    Scalar predicted, computed;
    std::vector<bool> reading_match;
    std::size_t points = 0;
};

EvalOutcome evaluate_cell(ClosedFormId id, const ClosedFormQuery& symbolic_query, const std::vector<Reading>& readings,
                          std::mt19937_64& rng) {
    long degree = hankel_degree_bound(symbolic_query.size, symbolic_query.k);
    for (const auto& r : readings) degree = std::max<long>(degree, r.value.total_degree());
    const SequenceSpec spec = query_sequence(id, symbolic_query);
    EvalOutcome out;
    out.reading_match.assign(readings.size(), true);
    out.points = static_cast<std::size_t>(degree + 1);
    for (std::size_t i = 0; i < out.points; ++i) {
        Assignment pt;
        for (Var v : {Var::a, Var::b, Var::t, Var::x, Var::y}) pt[v] = wide_rational(rng);
        const SequenceSpec numeric = spec.evaluate(pt);
        const Scalar d = hankel_det({numeric, static_cast<std::size_t>(symbolic_query.k),
                                     static_cast<std::size_t>(symbolic_query.size)});
        const Scalar p = readings.front().value.evaluate(pt);
        for (std::size_t r = 0; r < readings.size(); ++r)
            if (readings[r].value.evaluate(pt) != d) out.reading_match[r] = false;
        if (out.all_match) {
            out.predicted = p;
            out.computed = d;
        }
        if (p != d) out.all_match = false;
    }
    return out;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::match: return "match";
        case Verdict::mismatch: return "mismatch";
        case Verdict::inapplicable: return "inapplicable";
    }
    return "?";
}

long hankel_degree_bound(long n, long k) { return n * (n - 1) + n * k; }

SweepResult sweep(const std::vector<ClosedFormId>& ids, const SweepOptions& opt) {
    SweepResult result;
    auto full = [&] { return opt.cell_cap > 0 && result.cells.size() >= opt.cell_cap; };
    for (ClosedFormId id : ids) {
        const auto& info = closed_form_info(id);
        for (Family family : info.families) {
            int lo = std::max(info.m_min, opt.m_min);
            int hi = info.m_max > 0 ? std::min(info.m_max, opt.m_max) : opt.m_max;
            if (info.style == ParamStyle::fixed) lo = hi = info.fixed_spec.m;
            for (int m = lo; m <= hi; ++m) {
                std::vector<long> shifts = info.shifts;
                if (shifts.empty())
                    for (long k = 0; k <= opt.max_shift; ++k) shifts.push_back(k);
                for (long k : shifts) {
                    std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                                      static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(family),
                                      static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(k)};
                    std::mt19937_64 rng(seq);
                    for (Point& pt : block_points(info, family, rng, opt)) {
                        ClosedFormQuery q = pt.values;
                        q.family = family;
                        q.m = m;
                        q.k = k;
                        const long max_size = pt.symbolic ? opt.max_symbolic_size : opt.max_numeric_size;
                        std::vector<Scalar> terms;
                        for (long n = 0; n <= max_size; ++n) {
                            q.size = n;
                            if (!in_domain(id, q)) continue;
                            if (full()) {
                                result.summary.truncated = true;
                                break;
                            }
                            SweepCell cell;
                            cell.id = id;
                            cell.family = family;
                            cell.m = m;
                            cell.k = k;
                            cell.size = n;
                            cell.point = pt.label;
                            cell.params = pt.symbolic ? "symbolic" : render_params(info, q);
                            const auto readings = closed_form_readings(id, q);
                            const bool evaluate = pt.symbolic && (opt.check == SymbolicCheck::evaluation ||
                                                                  n > opt.full_polynomial_limit);
                            if (evaluate) {
                                auto e = evaluate_cell(id, q, readings, rng);
                                cell.method = "evaluation(" + std::to_string(e.points) + ")";
                                cell.predicted = e.predicted;
                                cell.computed = e.computed;
                                cell.verdict = e.all_match ? Verdict::match : Verdict::mismatch;
                                for (std::size_t r = 0; r < readings.size(); ++r)
                                    cell.readings.push_back({readings[r].label, readings[r].value, e.reading_match[r]});
                            } else {
                                if (terms.empty())
                                    terms = seq_terms(query_sequence(id, q),
                                                      hankel_terms_needed(static_cast<std::size_t>(max_size),
                                                                          static_cast<std::size_t>(k)))
                                                .terms;
                                cell.method = pt.symbolic ? "polynomial" : "numeric";
                                cell.computed = hankel_det(terms, static_cast<std::size_t>(n), static_cast<std::size_t>(k));
                                cell.predicted = readings.front().value;
                                cell.verdict = cell.predicted == cell.computed ? Verdict::match : Verdict::mismatch;
                                for (const auto& r : readings)
                                    cell.readings.push_back({r.label, r.value, r.value == cell.computed});
                            }
                            ++result.summary.cells;
                            if (cell.verdict == Verdict::match)
                                ++result.summary.matches;
                            else
                                ++result.summary.mismatches;
                            result.cells.push_back(std::move(cell));
                        }
                    }
                }
            }
        }
    }
    return result;
}

}  // namespace hk
