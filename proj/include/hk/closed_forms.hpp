#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hk/scalar.hpp"
#include "hk/sequences.hpp"

namespace hk {

/// Closed-form Hankel determinant formulas. Each id evaluates only inside its
/// domain of (family, m, shift, size) and raises OutOfDomain elsewhere.
enum class ClosedFormId {
    A_d0,
    A_d1,
    A_d2,
    Astar,
    catalan_all_k,
    B,
    Bstar,
    binom_all_k,
    thm4_1,
    cor4_3,
    thm4_4,
    rem4_6,
    thm5_4,
    thm5_5,
    thm5_6,
    thm6_1,
    thm6_2,
    thm6_3,
    thm6_4,
    thm6_5,
    thm7_1,
    thm7_2,
    thm7_3,
    thm7_4,
    zero_pattern_5_1,
};

/// How the formula is parameterized.
enum class ParamStyle {
    abt,        // a, b (and t for the shifted family)
    xyt,        // a = x + y, b = x y, plus t
    fixed,      // a single numeric sequence
    zero_a,     // a = 0, b free
};

struct ClosedFormInfo {
    ClosedFormId id;
    std::string_view name;
    std::string_view summary;
    std::vector<Family> families;
    int m_min = 1;
    int m_max = 0;                 // 0: unbounded
    std::vector<long> shifts;      // empty: every shift
    long min_size = 0;
    ParamStyle style = ParamStyle::abt;
    SequenceSpec fixed_spec;       // for ParamStyle::fixed
};

const std::vector<ClosedFormId>& all_closed_form_ids();
const ClosedFormInfo& closed_form_info(ClosedFormId id);
std::string_view closed_form_name(ClosedFormId id);
std::optional<ClosedFormId> parse_closed_form_id(std::string_view name);

struct ClosedFormQuery {
    Family family = Family::restricted;
    int m = 2;
    long k = 0;
    long size = 0;
    Scalar a = 1, b = 1, t = 0;
    Scalar x = 1, y = 1;  // read instead of a, b by ParamStyle::xyt
};

/// Alternative readings of a formula, e.g. two forms of the same expression
/// or two candidate normalizations of one line.
struct Reading {
    std::string label;
    Scalar value;
};

/// Empty string when the query is inside the domain, else the reason it is not.
std::string domain_violation(ClosedFormId id, const ClosedFormQuery& q);
bool in_domain(ClosedFormId id, const ClosedFormQuery& q);

/// Primary reading first. Throws OutOfDomain.
std::vector<Reading> closed_form_readings(ClosedFormId id, const ClosedFormQuery& q);
Scalar closed_form_det(ClosedFormId id, const ClosedFormQuery& q);

/// The sequence whose Hankel determinant the query describes.
SequenceSpec query_sequence(ClosedFormId id, const ClosedFormQuery& q);

/// (x^n - y^n)/(x - y) as a polynomial, i.e. n x^{n-1} when x = y.
Scalar quotient_xy(long n, const Scalar& x, const Scalar& y);
/// sum_{i=0}^{n} i^2.
Scalar sum_of_squares(long n);

}  // namespace hk
