#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "hk/poly.hpp"

namespace hk {

/// Exact coefficient ring element: an integer, a rational, or a polynomial in
/// a, b, t, x, y, z with rational coefficients.
///
/// Values are kept in the simplest kind that represents them: a rational with
/// unit denominator is stored as an integer and a constant polynomial as a
/// rational (or integer). Equality is therefore plain structural equality.
class Scalar {
public:
    enum class Kind { integer, rational, polynomial };

    Scalar() : v_(mpz_class(0)) {}
    Scalar(long v) : v_(mpz_class(v)) {}  // NOLINT(google-explicit-constructor)
    Scalar(int v) : v_(mpz_class(v)) {}   // NOLINT(google-explicit-constructor)
    Scalar(mpz_class v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    Scalar(mpq_class v);                         // NOLINT(google-explicit-constructor)
    Scalar(Poly v);                              // NOLINT(google-explicit-constructor)

    static Scalar variable(Var v) { return Scalar(Poly::variable(v)); }
    static Scalar rational(long num, long den);

    Kind kind() const noexcept { return static_cast<Kind>(v_.index()); }
    bool is_integer() const noexcept { return kind() == Kind::integer; }
    bool is_numeric() const noexcept { return kind() != Kind::polynomial; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Throws KindMismatch when the value is not an integer.
    const mpz_class& to_integer() const;
    /// Throws KindMismatch when the value is a non-constant polynomial.
    mpq_class to_rational() const;
    /// Promotes to a polynomial; never fails.
    Poly to_poly() const;
    long to_long() const;

    /// Sign of a numeric value; KindMismatch for polynomials.
    int sign() const;
    unsigned total_degree() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
    friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
    friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
    /// Division in the fraction field of the numeric kinds; for a polynomial
    /// divisor the quotient must be a polynomial (NotDivisible otherwise).
    friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }

    Scalar pow(unsigned e) const;

    /// Ring division: like operator/, except that two integers must divide
    /// exactly (NotDivisible when the remainder is nonzero).
    friend Scalar exact_div(const Scalar& l, const Scalar& r);

    /// Substitutes rational values for variables; the result is numeric once
    /// every variable occurring in the value is assigned.
    Scalar evaluate(const Assignment& point) const;
    Scalar substitute(Var v, const Scalar& value) const;

    /// "12", "-3/4" or a canonical polynomial string such as "-3*a^2*b + t".
    std::string to_string() const;
    /// Accepts integer literals, "p/q" rationals and polynomial strings.
    static Scalar parse(std::string_view text);

    bool operator==(const Scalar& o) const = default;

    const std::variant<mpz_class, mpq_class, Poly>& raw() const noexcept { return v_; }

private:
    void demote();
    std::variant<mpz_class, mpq_class, Poly> v_;
};

/// Convenience constructors for symbolic parameters.
inline Scalar sym_a() { return Scalar::variable(Var::a); }
inline Scalar sym_b() { return Scalar::variable(Var::b); }
inline Scalar sym_t() { return Scalar::variable(Var::t); }
inline Scalar sym_z() { return Scalar::variable(Var::z); }

/// (-1)^e as a Scalar.
inline Scalar sign_pow(long e) { return (e % 2 == 0) ? Scalar(1) : Scalar(-1); }

Scalar binomial(long n, long k);
Scalar catalan_number(long n);

}  // namespace hk
