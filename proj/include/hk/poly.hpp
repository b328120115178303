#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hk {

/// Formal variables available to polynomials. a, b, t are the sequence
/// parameters; x, y carry the factorized form a = x + y, b = x*y; z is the
/// variable of orthogonal and characteristic polynomials.
enum class Var : unsigned { a = 0, b, t, x, y, z };
inline constexpr int kVarCount = 6;

std::string_view var_name(Var v);
bool parse_var(char c, Var& out);

/// Exponent vector packed into 64 bits, ten bits per variable, with `a` in the
/// most significant field so that integer order is lexicographic order.
class Monomial {
public:
    static constexpr unsigned kBits = 10;
    static constexpr unsigned kMaxExponent = (1u << kBits) - 1;

    constexpr Monomial() = default;
    static Monomial of(Var v, unsigned exponent = 1);

    unsigned exponent(Var v) const noexcept {
        return static_cast<unsigned>((key_ >> shift(v)) & kMaxExponent);
    }
    unsigned total_degree() const noexcept;
    bool is_one() const noexcept { return key_ == 0; }
    bool divides(Monomial other) const noexcept;

    /// Throws std::overflow_error when an exponent would exceed kMaxExponent.
    Monomial operator*(Monomial other) const;
    /// Requires divides(*this) on the divisor.
    Monomial operator/(Monomial divisor) const noexcept { return Monomial(key_ - divisor.key_); }

    std::uint64_t key() const noexcept { return key_; }
    static constexpr Monomial from_key(std::uint64_t key) noexcept { return Monomial(key); }
    auto operator<=>(const Monomial&) const = default;

    std::string to_string() const;

private:
    explicit constexpr Monomial(std::uint64_t key) : key_(key) {}
    static constexpr unsigned shift(Var v) noexcept {
        return (kVarCount - 1 - static_cast<unsigned>(v)) * kBits;
    }
    std::uint64_t key_ = 0;
};

using Assignment = std::map<Var, mpq_class>;

/// Sparse multivariate polynomial with rational coefficients, stored as an
/// integer numerator polynomial over a positive common denominator.
///
/// Canonical form: terms sorted by ascending monomial, no zero coefficients,
/// gcd(content, denominator) == 1, and the zero polynomial has denominator 1.
/// Two equal polynomials therefore compare equal member-wise.
class Poly {
public:
    struct Term {
        Monomial mono;
        mpz_class coeff;
        bool operator==(const Term&) const = default;
    };

    Poly() = default;
    Poly(long v);  // NOLINT(google-explicit-constructor)
    explicit Poly(const mpz_class& v);
    explicit Poly(const mpq_class& v);
    Poly(Monomial mono, const mpq_class& coeff);
    static Poly variable(Var v) { return Poly(Monomial::of(v), mpq_class(1)); }
    /// Sums the given terms; repeated monomials are combined.
    static Poly from_rational_terms(std::vector<std::pair<Monomial, mpq_class>> terms);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Coefficient of the unit monomial.
    mpq_class constant_term() const;
    mpq_class coefficient(Monomial mono) const;

    const std::vector<Term>& numerator_terms() const noexcept { return terms_; }
    const mpz_class& denominator() const noexcept { return den_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    unsigned total_degree() const noexcept;
    unsigned degree(Var v) const noexcept;
    Monomial leading_monomial() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly l, const Poly& r) { return l += r; }
    friend Poly operator-(Poly l, const Poly& r) { return l -= r; }
    friend Poly operator*(const Poly& l, const Poly& r);

    Poly scaled(const mpq_class& c) const;
    Poly pow(unsigned e) const;

    /// Exact quotient in Q[a,b,t,x,y,z]; throws NotDivisible otherwise.
    Poly exact_divide(const Poly& divisor) const;

    /// Substitutes the assigned variables; unassigned ones stay symbolic.
    Poly substitute(const Assignment& values) const;
    Poly substitute(Var v, const Poly& value) const;

    std::string to_string() const;
    /// Parses the canonical rendering, e.g. "-3*a^2*b + 1/2*t - 7".
    static Poly parse(std::string_view text);

    bool operator==(const Poly& o) const = default;

private:
    void normalize();

    std::vector<Term> terms_;
    mpz_class den_ = 1;
};

}  // namespace hk
