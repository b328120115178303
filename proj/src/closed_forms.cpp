#include "hk/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>

#include "hk/errors.hpp"

namespace hk {

namespace {

using F = Family;

const std::vector<ClosedFormInfo>& table() {
    static const std::vector<ClosedFormInfo> t = [] {
        std::vector<ClosedFormInfo> v;
        auto add = [&](ClosedFormId id, std::string_view name, std::string_view summary, std::vector<Family> fams,
                       int m_min, int m_max, std::vector<long> shifts, long min_size, ParamStyle style,
                       SequenceSpec fixed = {}) {
            v.push_back({id, name, summary, std::move(fams), m_min, m_max, std::move(shifts), min_size, style,
                         std::move(fixed)});
        };
        add(ClosedFormId::A_d0, "A-d0", "shifted m=2 in (x,y,t): d0 = (xy)^C(n,2)", {F::shifted}, 2, 2, {0}, 0,
            ParamStyle::xyt);
        add(ClosedFormId::A_d1, "A-d1", "shifted m=2 in (x,y,t): d1 via (x^n-y^n)/(x-y) quotients", {F::shifted}, 2,
            2, {1}, 0, ParamStyle::xyt);
        add(ClosedFormId::A_d2, "A-d2", "shifted m=2 in (x,y,t): d2 as a weighted sum of squared d1 factors",
            {F::shifted}, 2, 2, {2}, 0, ParamStyle::xyt);
        add(ClosedFormId::Astar, "Astar", "shifted m=2 in (a,b,t): d0, d1, d2 via Fibonacci polynomials",
            {F::shifted}, 2, 2, {0, 1, 2}, 0, ParamStyle::abt);
        add(ClosedFormId::catalan_all_k, "catalan-all-k", "Catalan numbers, every shift: double product",
            {F::shifted}, 2, 2, {}, 0, ParamStyle::fixed, SequenceSpec::named(NamedSequence::catalan));
        add(ClosedFormId::B, "B", "unrestricted m=2 in (x,y): d0, d1, d2 via x^n + y^n", {F::unrestricted}, 2, 2,
            {0, 1, 2}, 1, ParamStyle::xyt);
        add(ClosedFormId::Bstar, "Bstar", "unrestricted m=2 in (a,b): d0, d1, d2 via normalized Lucas polynomials",
            {F::unrestricted}, 2, 2, {0, 1, 2}, 1, ParamStyle::abt);
        add(ClosedFormId::binom_all_k, "binom-all-k", "central binomial coefficients, every shift: double product",
            {F::unrestricted}, 2, 2, {}, 1, ParamStyle::fixed, SequenceSpec::named(NamedSequence::central_binomial));
        add(ClosedFormId::thm4_1, "thm4.1", "restricted m=1: powers of b and a+b", {F::restricted}, 1, 1, {0, 1, 2},
            0, ParamStyle::abt);
        add(ClosedFormId::cor4_3, "cor4.3", "shifted m=1: powers of b and a+b with t corrections", {F::shifted}, 1, 1,
            {0, 1, 2}, 0, ParamStyle::abt);
        add(ClosedFormId::thm4_4, "thm4.4", "unrestricted m=1: powers of b and a+b, d2 in two forms",
            {F::unrestricted}, 1, 1, {0, 1, 2}, 1, ParamStyle::abt);
        add(ClosedFormId::rem4_6, "rem4.6", "unrestricted m=1 at a=0", {F::unrestricted}, 1, 1, {0, 1, 2}, 1,
            ParamStyle::zero_a);
        add(ClosedFormId::thm5_4, "thm5.4", "restricted, a=0, d0: nonzero only for sizes mn and mn+1",
            {F::restricted}, 1, 0, {0}, 0, ParamStyle::zero_a);
        add(ClosedFormId::thm5_5, "thm5.5", "unrestricted, a=0, d0: nonzero only for sizes mn and mn+1",
            {F::unrestricted}, 1, 0, {0}, 1, ParamStyle::zero_a);
        add(ClosedFormId::thm5_6, "thm5.6", "restricted, a=0, d1: nonzero only for sizes mn", {F::restricted}, 1, 0,
            {1}, 0, ParamStyle::zero_a);
        add(ClosedFormId::thm6_1, "thm6.1", "m=3, d0 (independent of t)", {F::restricted, F::shifted}, 3, 3, {0}, 0,
            ParamStyle::abt);
        add(ClosedFormId::thm6_2, "thm6.2", "restricted m=3, d1", {F::restricted}, 3, 3, {1}, 0, ParamStyle::abt);
        add(ClosedFormId::thm6_3, "thm6.3", "shifted m=3, d1", {F::shifted}, 3, 3, {1}, 0, ParamStyle::abt);
        add(ClosedFormId::thm6_4, "thm6.4", "restricted m=3, d2", {F::restricted}, 3, 3, {2}, 1, ParamStyle::abt);
        add(ClosedFormId::thm6_5, "thm6.5", "shifted m=3, d2", {F::shifted}, 3, 3, {2}, 1, ParamStyle::abt);
        add(ClosedFormId::thm7_1, "thm7.1", "restricted m>=2, d0: nonzero only for sizes mn and mn+1",
            {F::restricted}, 2, 0, {0}, 0, ParamStyle::abt);
        add(ClosedFormId::thm7_2, "thm7.2", "restricted m>=3, d1: nonzero only for sizes mn, mn+1, mn-1",
            {F::restricted}, 3, 0, {1}, 0, ParamStyle::abt);
        add(ClosedFormId::thm7_3, "thm7.3", "shifted m>=3, d1: nonzero only for sizes mn, mn+1, mn-1",
            {F::shifted}, 3, 0, {1}, 0, ParamStyle::abt);
        add(ClosedFormId::thm7_4, "thm7.4", "restricted m>=4, d2 at sizes mn+1 and mn-2", {F::restricted}, 4, 0,
            {2}, 1, ParamStyle::abt);
        add(ClosedFormId::zero_pattern_5_1, "zero-pattern-5.1",
            "restricted or unrestricted: d_k(mn+j) = 0 for 2 <= j <= m-1-k", {F::restricted, F::unrestricted}, 3, 0,
            {0, 1, 2}, 0, ParamStyle::abt);
        return v;
    }();
    return t;
}

Scalar pw(const Scalar& s, long e) {
    if (e < 0) throw std::logic_error("negative exponent in closed form");
    return s.pow(static_cast<unsigned>(e));
}

long c2(long n) { return n * (n - 1) / 2; }

// (-1)^e
Scalar sgn(long e) { return sign_pow(e < 0 ? -e : e); }

Scalar two_pow(long e) { return pw(Scalar(2), e); }

// sum_{i=0}^{n-1} u^i w^{n-1-i}
Scalar geometric_quotient(long n, const Scalar& u, const Scalar& w) {
    Scalar s;
    for (long i = 0; i < n; ++i) s += pw(u, i) * pw(w, n - 1 - i);
    return s;
}

std::vector<Reading> one(std::string label, Scalar v) { return {{std::move(label), std::move(v)}}; }

std::vector<Reading> eval_A(ClosedFormId id, const ClosedFormQuery& q) {
    const long n = q.size;
    const Scalar& x = q.x;
    const Scalar& y = q.y;
    const Scalar xy = x * y;
    const Scalar base = pw(xy, c2(n));
    auto factor = [&](long j) { return quotient_xy(j + 1, x, y) + q.t * quotient_xy(j, x, y); };
    switch (id) {
        case ClosedFormId::A_d0: return one("formula", base);
        case ClosedFormId::A_d1: return one("formula", base * factor(n));
        default: break;
    }
    Scalar s;
    for (long j = 0; j <= n; ++j) {
        Scalar f = factor(j);
        s += pw(xy, n - j) * f * f;
    }
    return one("formula", base * s);
}

std::vector<Reading> eval_Astar(const ClosedFormQuery& q) {
    const long n = q.size;
    const Scalar base = pw(q.b, c2(n));
    const auto fib = poly_family_range(PolyKind::fib, n + 2, q.a, -q.b);
    auto factor = [&](long j) { return fib[static_cast<std::size_t>(j + 1)] + q.t * fib[static_cast<std::size_t>(j)]; };
    if (q.k == 0) return one("formula", base);
    if (q.k == 1) return one("formula", base * factor(n));
    Scalar s;
    for (long j = 0; j <= n; ++j) {
        Scalar f = factor(j);
        s += pw(q.b, n - j) * f * f;
    }
    return one("formula", base * s);
}

// prod_{j=j0}^{k-1} prod_{i=1}^{j} (2n + j + i + c) / (j + i)
Scalar double_product(long n, long k, long j0, long c) {
    Scalar p = 1;
    for (long j = j0; j <= k - 1; ++j)
        for (long i = 1; i <= j; ++i) p *= Scalar::rational(2 * n + j + i + c, j + i);
    return p;
}

std::vector<Reading> eval_catalan_all_k(const ClosedFormQuery& q) {
    return one("formula", double_product(q.size, q.k, 1, 0));
}

std::vector<Reading> eval_binom_all_k(const ClosedFormQuery& q) {
    return one("formula", two_pow(q.size - 1 + q.k) * double_product(q.size, q.k, 0, -1));
}

std::vector<Reading> eval_B(const ClosedFormQuery& q) {
    const long n = q.size;
    const Scalar xy = q.x * q.y;
    const Scalar base = two_pow(n - 1) * pw(xy, c2(n));
    if (q.k == 0) return one("formula", base);
    if (q.k == 1) return one("formula", base * (pw(q.x, n) + pw(q.y, n)));
    Scalar s = Scalar(2) * pw(xy, n);
    for (long j = 1; j <= n; ++j) {
        Scalar l = pw(q.x, j) + pw(q.y, j);
        s += pw(xy, n - j) * l * l;
    }
    return one("formula", base * s);
}

std::vector<Reading> eval_Bstar(const ClosedFormQuery& q) {
    const long n = q.size;
    const auto luc = poly_family_range(PolyKind::normalized_lucas, n + 1, q.a, -q.b);
    const Scalar base = two_pow(n - 1) * pw(q.b, c2(n));
    if (q.k == 0) return one("formula", base);
    if (q.k == 1) return one("formula", base * luc[static_cast<std::size_t>(n)]);
    const long e = c2(n + 1);
    Scalar s = Scalar(2) * pw(q.b, e);
    for (long j = 1; j <= n; ++j) {
        const Scalar& l = luc[static_cast<std::size_t>(j)];
        s += pw(q.b, e - j) * l * l;
    }
    return one("formula", two_pow(n - 1) * s);
}

// When a divides exactly (a nonzero number or a polynomial quotient), also
// evaluate the displayed quotient form ((a+b)^e - b^e)/a.
std::optional<Scalar> quotient_form(const Scalar& a, const Scalar& b, long e) {
    if (a.is_zero()) return std::nullopt;
    Scalar ab = a + b;
    return (pw(ab, e) - pw(b, e)) / a;
}

std::vector<Reading> eval_thm4_1(const ClosedFormQuery& q) {
    const long n = q.size;
    const Scalar ab = q.a + q.b;
    if (q.k == 0) return one("formula", pw(q.b, c2(n)) * pw(ab, c2(n)));
    const Scalar base = pw(q.b, c2(n)) * pw(ab, c2(n + 1));
    if (q.k == 1) return one("formula", base);
    std::vector<Reading> r = one("sum form", base * geometric_quotient(n + 1, ab, q.b));
    if (auto v = quotient_form(q.a, q.b, n + 1)) r.push_back({"quotient form", base * *v});
    return r;
}

std::vector<Reading> eval_cor4_3(const ClosedFormQuery& q) {
    const long n = q.size;
    const Scalar ab = q.a + q.b;
    const Scalar base = pw(q.b, c2(n)) * pw(ab, c2(n));
    auto factor = [&](long j) { return pw(ab, j) + q.t * geometric_quotient(j, ab, q.b); };
    if (q.k == 0) return one("formula", base);
    if (q.k == 1) return one("formula", base * factor(n));
    Scalar s;
    for (long j = 0; j <= n; ++j) {
        Scalar f = factor(j);
        s += pw(ab * q.b, n - j) * f * f;
    }
    return one("formula", base * s);
}

std::vector<Reading> eval_thm4_4(const ClosedFormQuery& q) {
    const long n = q.size;
    const Scalar ab = q.a + q.b;
    const Scalar base = two_pow(n - 1) * pw(q.b, c2(n)) * pw(ab, c2(n));
    if (q.k == 0) return one("formula", base);
    if (q.k == 1) return one("formula", base * (pw(ab, n) + pw(q.b, n)));
    Scalar first = Scalar(2) * pw(q.b * ab, n);
    for (long j = 1; j <= n; ++j) {
        Scalar l = pw(ab, j) + pw(q.b, j);
        first += l * l * pw(q.b * ab, n - j);
    }
    const Scalar mid = Scalar(2 * n + 1) * pw(q.b * ab, n);
    std::vector<Reading> r{{"sum of squares form", base * first},
                           {"sum form", base * (geometric_quotient(2 * n + 1, ab, q.b) + mid)}};
    if (auto v = quotient_form(q.a, q.b, 2 * n + 1)) r.push_back({"quotient form", base * (*v + mid)});
    return r;
}

std::vector<Reading> eval_rem4_6(const ClosedFormQuery& q) {
    const long n = q.size;
    switch (q.k) {
        case 0: return one("formula", two_pow(n - 1) * pw(q.b, n * (n - 1)));
        case 1: return one("formula", two_pow(n) * pw(q.b, n * n));
        default: break;
    }
    return one("formula", two_pow(n) * Scalar(2 * n + 1) * pw(q.b, n * n + n));
}

// Sizes mn and mn+1 carry the value; everything else vanishes.
Scalar d0_pattern(long size, int m, const Scalar& b, bool doubled) {
    const long mm = m;
    if (size % mm == 0) {
        const long n = size / mm;
        Scalar v = sgn(c2(mm - 1) * n) * pw(b, n * (mm * n - 1));
        return doubled ? two_pow(mm * n - 1) * v : v;
    }
    if (size % mm == 1) {
        const long n = size / mm;
        Scalar v = sgn(c2(mm - 1) * n) * pw(b, n * (mm * n + 1));
        return doubled ? two_pow(mm * n) * v : v;
    }
    return 0;
}

std::vector<Reading> eval_thm5_6(const ClosedFormQuery& q) {
    const long mm = q.m;
    if (q.size % mm != 0) return one("formula", 0);
    const long n = q.size / mm;
    return one("formula", sgn(c2(mm) * n) * pw(q.b, mm * n * n));
}

std::vector<Reading> eval_thm6_1(const ClosedFormQuery& q) {
    const long n = q.size / 3;
    switch (q.size % 3) {
        case 0: return one("formula", sgn(n) * pw(q.b, n * (3 * n - 1)));
        case 1: return one("formula", sgn(n) * pw(q.b, n * (3 * n + 1)));
        default: break;
    }
    return one("formula", 0);
}

std::vector<Reading> eval_thm6_2(const ClosedFormQuery& q) {
    const long n = q.size / 3;
    const Scalar& a = q.a;
    const Scalar& b = q.b;
    switch (q.size % 3) {
        case 0: return one("formula", sgn(n) * pw(b, 3 * n * n));
        case 1: return one("formula", sgn(n) * Scalar(n + 1) * a * pw(b, 3 * n * n + 2 * n));
        default: break;
    }
    // size 3n+2 = 3(n+1)-1
    const long p = n + 1;
    return {{"3n+2 form", sgn(n) * Scalar(n + 1) * a * pw(b, 3 * n * n + 4 * n + 1)},
            {"3n-1 form", sgn(p - 1) * Scalar(p) * a * pw(b, 3 * p * p - 2 * p)}};
}

std::vector<Reading> eval_thm6_3(const ClosedFormQuery& q) {
    const long n = q.size / 3;
    const Scalar& a = q.a;
    const Scalar& b = q.b;
    switch (q.size % 3) {
        case 0: return one("formula", sgn(n) * pw(b, 3 * n * n));
        case 1: return one("formula", sgn(n) * (Scalar(n + 1) * a + q.t) * pw(b, 3 * n * n + 2 * n));
        default: break;
    }
    const long p = n + 1;
    return one("formula", sgn(p - 1) * (Scalar(p) * a + q.t) * pw(b, 3 * p * p - 2 * p));
}

std::vector<Reading> eval_thm6_4(const ClosedFormQuery& q) {
    const long n = q.size / 3;
    const Scalar& a = q.a;
    const Scalar& b = q.b;
    const Scalar a3 = pw(a, 3);
    switch (q.size % 3) {
        case 0:
            return one("formula", sgn(n + 1) * pw(b, 3 * n * n + n - 1) * (a3 * sum_of_squares(n) - Scalar(n + 1) * b));
        case 1: return one("formula", sgn(n) * Scalar((n + 1) * (n + 1)) * a * a * pw(b, 3 * n * n + 3 * n));
        default: break;
    }
    return one("formula", sgn(n) * pw(b, 3 * n * n + 5 * n + 1) * (a3 * sum_of_squares(n + 1) - Scalar(n + 1) * b));
}

std::vector<Reading> eval_thm6_5(const ClosedFormQuery& q) {
    const long n = q.size / 3;
    const Scalar& a = q.a;
    const Scalar& b = q.b;
    const Scalar& t = q.t;
    const Scalar a3 = pw(a, 3);
    switch (q.size % 3) {
        case 0: {
            Scalar inner = a3 * sum_of_squares(n) - Scalar(n + 1) * b + Scalar(n) * a * t * (t + Scalar(n + 1) * a);
            Scalar mag = pw(b, 3 * n * n + n - 1) * inner;
            return {{"sign (-1)^(n+1)", sgn(n + 1) * mag}, {"sign (-1)^n", sgn(n) * mag}};
        }
        case 1: {
            Scalar f = t + Scalar(n + 1) * a;
            return one("formula", sgn(n) * f * f * pw(b, 3 * n * n + 3 * n));
        }
        default: break;
    }
    const long p = n + 1;
    Scalar inner = a3 * sum_of_squares(p) - Scalar(p) * b + Scalar(p) * a * t * (t + Scalar(p + 1) * a);
    return one("formula", sgn(p - 1) * pw(b, 3 * p * p - p - 1) * inner);
}

std::vector<Reading> eval_d1_general(const ClosedFormQuery& q, bool shifted) {
    const long mm = q.m;
    const long r = q.size % mm;
    const Scalar& a = q.a;
    const Scalar& b = q.b;
    if (r == 0) {
        const long n = q.size / mm;
        return one("formula", sgn(c2(mm) * n) * pw(b, mm * n * n));
    }
    if (r == 1) {
        const long n = q.size / mm;
        Scalar lead = shifted ? q.t + Scalar(n + 1) * a : Scalar(n + 1) * a;
        return one("formula", sgn(c2(mm) * n) * lead * pw(b, mm * n * n + 2 * n));
    }
    if (r == mm - 1) {
        const long n = (q.size + 1) / mm;
        const Scalar s = sgn(c2(mm) * n);
        const Scalar pb = pw(b, mm * n * n - 2 * n);
        if (shifted) return one("formula", -s * (q.t + Scalar(n) * a) * pb);
        return {{"statement", -s * Scalar(n) * a * pb}, {"induction step", s * Scalar(n + 1) * a * pb}};
    }
    return one("formula", 0);
}

std::vector<Reading> eval_thm7_4(const ClosedFormQuery& q) {
    const long mm = q.m;
    const Scalar& a = q.a;
    const Scalar& b = q.b;
    if (q.size % mm == 1) {
        const long n = q.size / mm;
        return one("formula", sgn(n * c2(mm - 1)) * Scalar((n + 1) * (n + 1)) * a * a * pw(b, mm * n * n + 3 * n));
    }
    const long n = (q.size + 2) / mm;
    return one("formula", -sgn(n * c2(mm - 1)) * Scalar(n * n) * a * a * pw(b, mm * n * n - 3 * n));
}

}  // namespace

Scalar quotient_xy(long n, const Scalar& x, const Scalar& y) { return geometric_quotient(n, x, y); }

Scalar sum_of_squares(long n) { return Scalar(n) * Scalar(n + 1) * Scalar(2 * n + 1) / Scalar(6); }

const std::vector<ClosedFormId>& all_closed_form_ids() {
    static const std::vector<ClosedFormId> ids = [] {
        std::vector<ClosedFormId> v;
        for (const auto& e : table()) v.push_back(e.id);
        return v;
    }();
    return ids;
}

const ClosedFormInfo& closed_form_info(ClosedFormId id) {
    for (const auto& e : table())
        if (e.id == id) return e;
    throw std::logic_error("unknown closed-form id");
}

std::string_view closed_form_name(ClosedFormId id) { return closed_form_info(id).name; }

std::optional<ClosedFormId> parse_closed_form_id(std::string_view name) {
    for (const auto& e : table())
        if (e.name == name) return e.id;
    return std::nullopt;
}

std::string domain_violation(ClosedFormId id, const ClosedFormQuery& q) {
    const auto& info = closed_form_info(id);
    const std::string name(info.name);
    if (info.style != ParamStyle::fixed &&
        std::find(info.families.begin(), info.families.end(), q.family) == info.families.end())
        return name + " does not cover the " + std::string(family_name(q.family)) + " family";
    if (info.style == ParamStyle::fixed) {
        if (q.family != info.fixed_spec.family || q.m != info.fixed_spec.m)
            return name + " only covers " + info.fixed_spec.describe();
    } else if (q.m < info.m_min || (info.m_max > 0 && q.m > info.m_max)) {
        return name + " does not cover m=" + std::to_string(q.m);
    }
    if (q.k < 0) return "negative shift";
    if (!info.shifts.empty() && std::find(info.shifts.begin(), info.shifts.end(), q.k) == info.shifts.end())
        return name + " does not cover shift k=" + std::to_string(q.k);
    if (q.size < info.min_size)
        return name + " needs size >= " + std::to_string(info.min_size);
    if (info.style == ParamStyle::zero_a && !q.a.is_zero()) return name + " needs a = 0";
    if (id == ClosedFormId::thm7_4) {
        const long r = q.size % q.m;
        if (r != 1 && r != q.m - 2) return name + " covers only sizes mn+1 and mn-2";
    }
    if (id == ClosedFormId::zero_pattern_5_1) {
        const long j = q.size % q.m;
        if (j < 2 || j > q.m - 1 - q.k)
            return name + " covers sizes mn+j with 2 <= j <= " + std::to_string(q.m - 1 - q.k);
    }
    return {};
}

bool in_domain(ClosedFormId id, const ClosedFormQuery& q) { return domain_violation(id, q).empty(); }

std::vector<Reading> closed_form_readings(ClosedFormId id, const ClosedFormQuery& q) {
    if (auto why = domain_violation(id, q); !why.empty()) throw OutOfDomain(why);
    switch (id) {
        case ClosedFormId::A_d0:
        case ClosedFormId::A_d1:
        case ClosedFormId::A_d2: return eval_A(id, q);
        case ClosedFormId::Astar: return eval_Astar(q);
        case ClosedFormId::catalan_all_k: return eval_catalan_all_k(q);
        case ClosedFormId::B: return eval_B(q);
        case ClosedFormId::Bstar: return eval_Bstar(q);
        case ClosedFormId::binom_all_k: return eval_binom_all_k(q);
        case ClosedFormId::thm4_1: return eval_thm4_1(q);
        case ClosedFormId::cor4_3: return eval_cor4_3(q);
        case ClosedFormId::thm4_4: return eval_thm4_4(q);
        case ClosedFormId::rem4_6: return eval_rem4_6(q);
        case ClosedFormId::thm5_4:
        case ClosedFormId::thm7_1: return one("formula", d0_pattern(q.size, q.m, q.b, false));
        case ClosedFormId::thm5_5: return one("formula", d0_pattern(q.size, q.m, q.b, true));
        case ClosedFormId::thm5_6: return eval_thm5_6(q);
        case ClosedFormId::thm6_1: return eval_thm6_1(q);
        case ClosedFormId::thm6_2: return eval_thm6_2(q);
        case ClosedFormId::thm6_3: return eval_thm6_3(q);
        case ClosedFormId::thm6_4: return eval_thm6_4(q);
        case ClosedFormId::thm6_5: return eval_thm6_5(q);
        case ClosedFormId::thm7_2: return eval_d1_general(q, false);
        case ClosedFormId::thm7_3: return eval_d1_general(q, true);
        case ClosedFormId::thm7_4: return eval_thm7_4(q);
        case ClosedFormId::zero_pattern_5_1: return one("formula", 0);
    }
    throw std::logic_error("unhandled closed-form id");
}

Scalar closed_form_det(ClosedFormId id, const ClosedFormQuery& q) { return closed_form_readings(id, q).front().value; }

SequenceSpec query_sequence(ClosedFormId id, const ClosedFormQuery& q) {
    const auto& info = closed_form_info(id);
    switch (info.style) {
        case ParamStyle::fixed: return info.fixed_spec;
        case ParamStyle::xyt: {
            Scalar a = q.x + q.y, b = q.x * q.y;
            return q.family == Family::shifted ? SequenceSpec::shifted(q.m, a, b, q.t)
                                               : SequenceSpec::unrestricted(q.m, a, b);
        }
        case ParamStyle::abt:
        case ParamStyle::zero_a: break;
    }
    switch (q.family) {
        case Family::restricted: return SequenceSpec::restricted(q.m, q.a, q.b);
        case Family::shifted: return SequenceSpec::shifted(q.m, q.a, q.b, q.t);
        case Family::unrestricted: break;
    }
    return SequenceSpec::unrestricted(q.m, q.a, q.b);
}

}  // namespace hk
