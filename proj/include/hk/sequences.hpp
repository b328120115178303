#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hk/scalar.hpp"

namespace hk {

/// Path families. restricted: non-negative paths, f = 1 + a z f + b z^m f^2.
/// shifted: restricted paths whose level steps on the axis weigh a + t.
/// unrestricted: all paths, G = 1/sqrt((1 - a z)^2 - 4 b z^m).
enum class Family { restricted, shifted, unrestricted };

enum class NamedSequence {
    catalan,
    aerated_catalan,
    motzkin,
    schroeder,
    central_binomial,
    aerated_central_binomial,
    central_trinomial,
    delannoy,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view s);
std::string_view sequence_name(NamedSequence n);
std::optional<NamedSequence> parse_sequence_name(std::string_view s);
const std::vector<NamedSequence>& all_named_sequences();

struct SequenceSpec {
    Family family = Family::restricted;
    int m = 2;
    Scalar a = 1;
    Scalar b = 1;
    Scalar t = 0;  // only read by Family::shifted
    std::optional<NamedSequence> name;

    static SequenceSpec restricted(int m, Scalar a, Scalar b);
    static SequenceSpec shifted(int m, Scalar a, Scalar b, Scalar t);
    static SequenceSpec unrestricted(int m, Scalar a, Scalar b);
    static SequenceSpec named(NamedSequence n);

    /// All parameters symbolic (a, b and, for shifted, t).
    static SequenceSpec symbolic(Family f, int m);

    SequenceSpec evaluate(const Assignment& point) const;
    bool is_symbolic() const;
    std::string describe() const;
};

enum class GenerationPath { recurrence, closed_form, series, path_dp };

struct SequenceWindow {
    SequenceSpec spec;
    std::size_t start = 0;
    std::vector<Scalar> terms;
    GenerationPath path = GenerationPath::recurrence;
};

/// Terms 0..count-1 from the convolution recurrences of the defining
/// functional equations:
///   restricted   c(n) = a c(n-1) + b sum_{i+j=n-m} c(i) c(j)
///   shifted      C(n) = (a+t) C(n-1) + b sum_{i+j=n-m} C(i) c(j)
///   unrestricted g(n) = a g(n-1) + 2b sum_{i+j=n-m} g(i) c(j)
/// The last one follows from G (1 - a z - 2 b z^m f) = 1.
SequenceWindow seq_terms(const SequenceSpec& spec, std::size_t count);

/// c(n,m,a,b) = sum_k C_k binom(n+(2-m)k, 2k) a^{n-mk} b^k.
Scalar c_closed_form(long n, int m, const Scalar& a, const Scalar& b);
/// g(n,m,a,b) = sum_k binom(2k,k) binom(n+2k-mk, 2k) a^{n-mk} b^k.
Scalar g_closed_form(long n, int m, const Scalar& a, const Scalar& b);
/// C(n,m,a,b,t) from closed-form c values through C = c + t z c C.
std::vector<Scalar> shifted_from_closed_form(std::size_t count, int m, const Scalar& a, const Scalar& b,
                                             const Scalar& t);
SequenceWindow closed_form_terms(const SequenceSpec& spec, std::size_t count);

enum class PolyKind { fib, lucas, normalized_lucas };

/// Fib_n(x,s): 0, 1, x Fib_{n-1} + s Fib_{n-2}.  Lucas: 2, x, same recurrence.
/// Normalized Lucas: 1, x, x^2 + 2s, then the ordinary recurrence.
Scalar poly_family(PolyKind kind, long n, const Scalar& x, const Scalar& s);
std::vector<Scalar> poly_family_range(PolyKind kind, long count, const Scalar& x, const Scalar& s);

/// Coefficients (k = 0..floor(n/2)) of z^n in the Fib_{n+1-2k}(z,-1) basis,
/// binom(n,k) - binom(n,k-1), or in the Luc_{n-2k}(z,-1) basis, binom(n,k).
std::vector<Scalar> basis_expansion(long n, PolyKind kind);
/// Sum of coefficient times basis polynomial; equals z^n.
Scalar basis_reconstruction(long n, PolyKind kind);

/// Parameters for reducing m = 1 to m = 2.
struct M1Reduction {
    Scalar a, b, t;     // c(n,1,a,b) = C(n,2,a,b,t)
    Scalar ua, ub;      // g(n,1,a,b) = g(n,2,ua,ub)
};
M1Reduction m1_reduce(const Scalar& a, const Scalar& b);

}  // namespace hk
