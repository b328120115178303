#include "hk/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

#include "hk/errors.hpp"

namespace hk {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames{"a", "b", "t", "x", "y", "z"};

mpq_class rational_of(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<unsigned>(v)]; }

bool parse_var(char c, Var& out) {
    for (unsigned i = 0; i < kVarNames.size(); ++i) {
        if (kVarNames[i][0] == c) {
            out = static_cast<Var>(i);
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Var v, unsigned exponent) {
    if (exponent > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    return Monomial(static_cast<std::uint64_t>(exponent) << shift(v));
}

unsigned Monomial::total_degree() const noexcept {
    unsigned d = 0;
    for (int i = 0; i < kVarCount; ++i) d += exponent(static_cast<Var>(i));
    return d;
}

bool Monomial::divides(Monomial other) const noexcept {
    for (int i = 0; i < kVarCount; ++i) {
        auto v = static_cast<Var>(i);
        if (exponent(v) > other.exponent(v)) return false;
    }
    return true;
}

Monomial Monomial::operator*(Monomial other) const {
    for (int i = 0; i < kVarCount; ++i) {
        auto v = static_cast<Var>(i);
        if (exponent(v) + other.exponent(v) > kMaxExponent)
            throw std::overflow_error("monomial exponent overflow");
    }
    return Monomial(key_ + other.key_);
}

std::string Monomial::to_string() const {
    std::string out;
    for (int i = 0; i < kVarCount; ++i) {
        auto v = static_cast<Var>(i);
        unsigned e = exponent(v);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += var_name(v);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Poly construction and canonical form

Poly::Poly(long v) : Poly(mpz_class(v)) {}

Poly::Poly(const mpz_class& v) {
    if (v != 0) terms_.push_back({Monomial{}, v});
}

Poly::Poly(const mpq_class& v) : Poly(Monomial{}, v) {}

Poly::Poly(Monomial mono, const mpq_class& coeff) {
    if (coeff == 0) return;
    terms_.push_back({mono, coeff.get_num()});
    den_ = coeff.get_den();
}

void Poly::normalize() {
    std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
    if (terms_.empty()) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        for (auto& t : terms_) t.coeff = -t.coeff;
    }
    if (den_ == 1) return;
    mpz_class g = den_;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) return;
    }
    den_ /= g;
    for (auto& t : terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
}

Poly Poly::from_rational_terms(std::vector<std::pair<Monomial, mpq_class>> terms) {
    Poly p;
    std::erase_if(terms, [](const auto& t) { return t.second == 0; });
    if (terms.empty()) return p;
    std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    mpz_class lcm = 1;
    for (const auto& [m, c] : terms) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    p.den_ = lcm;
    for (const auto& [m, c] : terms) {
        mpz_class num = c.get_num() * (lcm / c.get_den());
        if (!p.terms_.empty() && p.terms_.back().mono == m)
            p.terms_.back().coeff += num;
        else
            p.terms_.push_back({m, num});
    }
    p.normalize();
    return p;
}

bool Poly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

mpq_class Poly::constant_term() const { return coefficient(Monomial{}); }

mpq_class Poly::coefficient(Monomial mono) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                               [](const Term& t, Monomial m) { return t.mono < m; });
    if (it == terms_.end() || it->mono != mono) return 0;
    return rational_of(it->coeff, den_);
}

unsigned Poly::total_degree() const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

unsigned Poly::degree(Var v) const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
    return d;
}

Monomial Poly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading monomial");
    return terms_.back().mono;
}

// ---------------------------------------------------------------------------
// Arithmetic

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

// Merges two sorted numerator term lists scaled by sl and sr.
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& l, const mpz_class& sl,
                                    const std::vector<Poly::Term>& r, const mpz_class& sr, bool subtract) {
    std::vector<Poly::Term> out;
    out.reserve(l.size() + r.size());
    std::size_t i = 0, j = 0;
    auto scaled_r = [&](const mpz_class& c) { return subtract ? mpz_class(-c * sr) : mpz_class(c * sr); };
    while (i < l.size() || j < r.size()) {
        if (j == r.size() || (i < l.size() && l[i].mono < r[j].mono)) {
            out.push_back({l[i].mono, l[i].coeff * sl});
            ++i;
        } else if (i == l.size() || r[j].mono < l[i].mono) {
            out.push_back({r[j].mono, scaled_r(r[j].coeff)});
            ++j;
        } else {
            mpz_class c = l[i].coeff * sl + scaled_r(r[j].coeff);
            if (c != 0) out.push_back({l[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        terms_ = merge_terms(terms_, 1, o.terms_, 1, false);
    } else {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
        mpz_class sl = o.den_ / g, sr = den_ / g;
        terms_ = merge_terms(terms_, sl, o.terms_, sr, false);
        den_ *= sl;
    }
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        terms_ = merge_terms(terms_, 1, o.terms_, 1, true);
    } else {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
        mpz_class sl = o.den_ / g, sr = den_ / g;
        terms_ = merge_terms(terms_, sl, o.terms_, sr, true);
        den_ *= sl;
    }
    normalize();
    return *this;
}

Poly operator*(const Poly& l, const Poly& r) {
    Poly out;
    if (l.is_zero() || r.is_zero()) return out;
    out.den_ = l.den_ * r.den_;
    if (l.terms_.size() == 1 || r.terms_.size() == 1) {
        const Poly& single = l.terms_.size() == 1 ? l : r;
        const Poly& other = l.terms_.size() == 1 ? r : l;
        const auto& s = single.terms_.front();
        out.terms_.reserve(other.terms_.size());
        for (const auto& t : other.terms_) out.terms_.push_back({t.mono * s.mono, t.coeff * s.coeff});
        out.normalize();
        return out;
    }
    std::unordered_map<std::uint64_t, mpz_class> acc;
    acc.reserve(l.terms_.size() * r.terms_.size());
    for (const auto& tl : l.terms_) {
        for (const auto& tr : r.terms_) {
            auto& slot = acc[(tl.mono * tr.mono).key()];
            mpz_addmul(slot.get_mpz_t(), tl.coeff.get_mpz_t(), tr.coeff.get_mpz_t());
        }
    }
    std::vector<std::pair<std::uint64_t, mpz_class*>> keys;
    keys.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (c != 0) keys.emplace_back(k, &c);
    std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    out.terms_.reserve(keys.size());
    for (auto& [k, c] : keys) out.terms_.push_back({Monomial::from_key(k), std::move(*c)});
    out.normalize();
    return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const mpq_class& c) const {
    if (c == 0) return {};
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff *= c.get_num();
    r.den_ *= c.get_den();
    r.normalize();
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly result(1L), base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

Poly Poly::exact_divide(const Poly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero();
    if (divisor.is_constant()) return scaled(1 / divisor.constant_term());
    // Lex-leading-term division; any non-divisible leading term proves a
    // nonzero remainder.
    Poly rem = *this;
    std::vector<std::pair<Monomial, mpq_class>> quotient;
    const Monomial lead = divisor.leading_monomial();
    const mpq_class lead_coeff = rational_of(divisor.terms_.back().coeff, divisor.den_);
    while (!rem.is_zero()) {
        Monomial rl = rem.leading_monomial();
        if (!lead.divides(rl)) throw NotDivisible("polynomial division leaves a remainder");
        mpq_class c = rational_of(rem.terms_.back().coeff, rem.den_) / lead_coeff;
        Monomial q = rl / lead;
        quotient.emplace_back(q, c);
        rem -= divisor * Poly(q, c);
    }
    return from_rational_terms(std::move(quotient));
}

Poly Poly::substitute(const Assignment& values) const {
    if (values.empty() || is_zero()) return *this;
    // Powers of the substituted values, cached per variable.
    std::array<std::vector<mpq_class>, kVarCount> powers;
    std::array<bool, kVarCount> assigned{};
    for (const auto& [v, q] : values) {
        assigned[static_cast<unsigned>(v)] = true;
        powers[static_cast<unsigned>(v)] = {mpq_class(1)};
    }
    auto power_of = [&](unsigned vi, unsigned e) -> const mpq_class& {
        auto& pw = powers[vi];
        const mpq_class& base = values.at(static_cast<Var>(vi));
        while (pw.size() <= e) pw.push_back(pw.back() * base);
        return pw[e];
    };
    std::vector<std::pair<Monomial, mpq_class>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        mpq_class c(t.coeff);
        Monomial rest;
        for (unsigned vi = 0; vi < kVarCount; ++vi) {
            unsigned e = t.mono.exponent(static_cast<Var>(vi));
            if (e == 0) continue;
            if (assigned[vi])
                c *= power_of(vi, e);
            else
                rest = rest * Monomial::of(static_cast<Var>(vi), e);
        }
        out.emplace_back(rest, c / den_);
    }
    return from_rational_terms(std::move(out));
}

Poly Poly::substitute(Var v, const Poly& value) const {
    std::vector<Poly> powers{Poly(1L)};
    Poly result;
    for (const auto& t : terms_) {
        unsigned e = t.mono.exponent(v);
        while (powers.size() <= e) powers.push_back(powers.back() * value);
        Monomial rest = t.mono / Monomial::of(v, e);
        result += powers[e] * Poly(rest, rational_of(t.coeff, den_));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Text form

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        mpq_class c = rational_of(it->coeff, den_);
        bool negative = c < 0;
        if (negative) c = -c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string mono = it->mono.to_string();
        if (mono.empty()) {
            out += c.get_str();
        } else {
            if (c != 1) out += c.get_str() + "*";
            out += mono;
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    Poly parse() {
        Poly result = parse_sum();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected '" + std::string(1, peek()) + "'");
        return result;
    }

private:
    // sum := [+|-] product {(+|-) product}
    Poly parse_sum() {
        skip_ws();
        if (pos_ >= s_.size()) fail("empty polynomial");
        Poly result;
        bool first = true;
        for (;;) {
            skip_ws();
            bool negative = false;
            if (pos_ < s_.size() && (peek() == '+' || peek() == '-')) {
                negative = peek() == '-';
                ++pos_;
            } else if (!first) {
                break;
            }
            Poly term = parse_product();
            result += negative ? -term : term;
            first = false;
        }
        return result;
    }

    // product := power {* power}
    Poly parse_product() {
        Poly result = parse_power();
        for (;;) {
            skip_ws();
            if (pos_ < s_.size() && peek() == '*') {
                ++pos_;
                result = result * parse_power();
            } else {
                return result;
            }
        }
    }

    // power := primary [^ digits]
    Poly parse_power() {
        Poly base = parse_primary();
        skip_ws();
        if (pos_ < s_.size() && peek() == '^') {
            ++pos_;
            skip_ws();
            mpz_class e = parse_uint();
            if (!e.fits_uint_p() || e > Monomial::kMaxExponent) fail("exponent too large");
            return base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    // primary := rational | variable | ( sum )
    Poly parse_primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("expected coefficient or variable");
        if (std::isdigit(static_cast<unsigned char>(peek()))) return Poly(parse_rational());
        if (peek() == '(') {
            ++pos_;
            Poly inner = parse_sum();
            skip_ws();
            if (pos_ >= s_.size() || peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        Var v;
        if (!parse_var(peek(), v)) fail("expected coefficient or variable");
        ++pos_;
        return Poly::variable(v);
    }

    mpq_class parse_rational() {
        mpz_class num = parse_uint();
        skip_ws();
        if (pos_ < s_.size() && peek() == '/') {
            ++pos_;
            skip_ws();
            mpz_class den = parse_uint();
            if (den == 0) fail("zero denominator");
            return rational_of(num, den);
        }
        return mpq_class(num);
    }

    mpz_class parse_uint() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse polynomial '" + std::string(s_) + "': " + what);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace hk
