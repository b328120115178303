#include "hk/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "hk/errors.hpp"

namespace hk {

Scalar::Scalar(mpq_class v) : v_(std::move(v)) { demote(); }

Scalar::Scalar(Poly v) : v_(std::move(v)) { demote(); }

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

void Scalar::demote() {
    if (auto* p = std::get_if<Poly>(&v_)) {
        if (!p->is_constant()) return;
        mpq_class q = p->constant_term();
        v_ = std::move(q);
    }
    if (auto* q = std::get_if<mpq_class>(&v_)) {
        if (q->get_den() == 1) {
            mpz_class z = q->get_num();
            v_ = std::move(z);
        }
    }
}

bool Scalar::is_zero() const noexcept {
    if (auto* z = std::get_if<mpz_class>(&v_)) return *z == 0;
    return false;  // demotion guarantees zero is stored as an integer
}

bool Scalar::is_one() const noexcept {
    if (auto* z = std::get_if<mpz_class>(&v_)) return *z == 1;
    return false;
}

const mpz_class& Scalar::to_integer() const {
    if (auto* z = std::get_if<mpz_class>(&v_)) return *z;
    throw KindMismatch("value " + to_string() + " is not an integer");
}

mpq_class Scalar::to_rational() const {
    switch (kind()) {
        case Kind::integer: return mpq_class(std::get<mpz_class>(v_));
        case Kind::rational: return std::get<mpq_class>(v_);
        case Kind::polynomial: break;
    }
    throw KindMismatch("value " + to_string() + " is not numeric");
}

Poly Scalar::to_poly() const {
    switch (kind()) {
        case Kind::integer: return Poly(std::get<mpz_class>(v_));
        case Kind::rational: return Poly(std::get<mpq_class>(v_));
        case Kind::polynomial: break;
    }
    return std::get<Poly>(v_);
}

long Scalar::to_long() const {
    const mpz_class& z = to_integer();
    if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
    return z.get_si();
}

int Scalar::sign() const {
    switch (kind()) {
        case Kind::integer: return sgn(std::get<mpz_class>(v_));
        case Kind::rational: return sgn(std::get<mpq_class>(v_));
        case Kind::polynomial: break;
    }
    throw KindMismatch("sign of polynomial " + to_string() + " is undefined");
}

unsigned Scalar::total_degree() const {
    if (auto* p = std::get_if<Poly>(&v_)) return p->total_degree();
    return 0;
}

Scalar Scalar::operator-() const {
    switch (kind()) {
        case Kind::integer: return mpz_class(-std::get<mpz_class>(v_));
        case Kind::rational: return Scalar(mpq_class(-std::get<mpq_class>(v_)));
        case Kind::polynomial: break;
    }
    return Scalar(-std::get<Poly>(v_));
}

namespace {

// Binary operations dispatch on the larger of the two kinds.
template <class IntOp, class RatOp, class PolyOp>
Scalar combine(const Scalar& l, const Scalar& r, IntOp int_op, RatOp rat_op, PolyOp poly_op) {
    auto kind = std::max(l.kind(), r.kind());
    switch (kind) {
        case Scalar::Kind::integer: return int_op(l.to_integer(), r.to_integer());
        case Scalar::Kind::rational: return rat_op(l.to_rational(), r.to_rational());
        case Scalar::Kind::polynomial: break;
    }
    return poly_op(l.to_poly(), r.to_poly());
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
    if (is_integer() && o.is_integer()) {
        std::get<mpz_class>(v_) += std::get<mpz_class>(o.v_);
        return *this;
    }
    return *this = combine(
               *this, o, [](const mpz_class& x, const mpz_class& y) { return Scalar(mpz_class(x + y)); },
               [](const mpq_class& x, const mpq_class& y) { return Scalar(mpq_class(x + y)); },
               [](const Poly& x, const Poly& y) { return Scalar(x + y); });
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (is_integer() && o.is_integer()) {
        std::get<mpz_class>(v_) -= std::get<mpz_class>(o.v_);
        return *this;
    }
    return *this = combine(
               *this, o, [](const mpz_class& x, const mpz_class& y) { return Scalar(mpz_class(x - y)); },
               [](const mpq_class& x, const mpq_class& y) { return Scalar(mpq_class(x - y)); },
               [](const Poly& x, const Poly& y) { return Scalar(x - y); });
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_integer() && o.is_integer()) {
        std::get<mpz_class>(v_) *= std::get<mpz_class>(o.v_);
        return *this;
    }
    if (is_zero() || o.is_zero()) return *this = Scalar(0);
    return *this = combine(
               *this, o, [](const mpz_class& x, const mpz_class& y) { return Scalar(mpz_class(x * y)); },
               [](const mpq_class& x, const mpq_class& y) { return Scalar(mpq_class(x * y)); },
               [](const Poly& x, const Poly& y) { return Scalar(x * y); });
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (o.is_numeric()) {
        mpq_class d = o.to_rational();
        if (is_numeric()) return *this = Scalar(mpq_class(to_rational() / d));
        return *this = Scalar(std::get<Poly>(v_).scaled(1 / d));
    }
    return *this = Scalar(to_poly().exact_divide(o.to_poly()));
}

Scalar exact_div(const Scalar& l, const Scalar& r) {
    if (l.is_integer() && r.is_integer()) {
        const mpz_class& d = r.to_integer();
        if (d == 0) throw DivisionByZero();
        if (!mpz_divisible_p(l.to_integer().get_mpz_t(), d.get_mpz_t()))
            throw NotDivisible(l.to_string() + " is not divisible by " + d.get_str());
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), l.to_integer().get_mpz_t(), d.get_mpz_t());
        return q;
    }
    return l / r;
}

Scalar Scalar::pow(unsigned e) const {
    switch (kind()) {
        case Kind::integer: {
            mpz_class r;
            mpz_pow_ui(r.get_mpz_t(), std::get<mpz_class>(v_).get_mpz_t(), e);
            return r;
        }
        case Kind::rational: {
            const mpq_class& q = std::get<mpq_class>(v_);
            mpz_class n, d;
            mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), e);
            mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), e);
            return Scalar(mpq_class(n, d));
        }
        case Kind::polynomial: break;
    }
    return Scalar(std::get<Poly>(v_).pow(e));
}

Scalar Scalar::evaluate(const Assignment& point) const {
    if (auto* p = std::get_if<Poly>(&v_)) return Scalar(p->substitute(point));
    return *this;
}

Scalar Scalar::substitute(Var v, const Scalar& value) const {
    if (auto* p = std::get_if<Poly>(&v_)) return Scalar(p->substitute(v, value.to_poly()));
    return *this;
}

std::string Scalar::to_string() const {
    switch (kind()) {
        case Kind::integer: return std::get<mpz_class>(v_).get_str();
        case Kind::rational: return std::get<mpq_class>(v_).get_str();
        case Kind::polynomial: break;
    }
    return std::get<Poly>(v_).to_string();
}

Scalar Scalar::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty scalar literal");
    bool numeric = std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/';
    });
    if (numeric && s.find('-', 1) == std::string::npos && s.find('+', 1) == std::string::npos) {
        if (s.front() == '+') s.erase(0, 1);
        mpq_class q;
        if (q.set_str(s, 10) != 0 || q.get_den() == 0)
            throw std::invalid_argument("invalid rational literal '" + std::string(text) + "'");
        q.canonicalize();
        return Scalar(q);
    }
    return Scalar(Poly::parse(text));
}

Scalar binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Scalar catalan_number(long n) { return exact_div(binomial(2 * n, n), Scalar(n + 1)); }

}  // namespace hk
