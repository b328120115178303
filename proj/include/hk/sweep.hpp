#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hk/closed_forms.hpp"

namespace hk {

enum class SweepMode { numeric, symbolic, both };

/// How a symbolic cell is decided: by comparing the polynomials, or by
/// comparing values at d+1 random rational points where d bounds the total
/// degree of both sides.
enum class SymbolicCheck { polynomial, evaluation };

struct SweepOptions {
    int m_min = 1;
    int m_max = 5;
    long max_numeric_size = 12;
    long max_symbolic_size = 9;
    long max_shift = 5;             // for ids that cover every shift
    int random_points = 3;          // in addition to the all-ones point
    std::uint64_t seed = 1;
    SweepMode mode = SweepMode::both;
    SymbolicCheck check = SymbolicCheck::polynomial;
    long full_polynomial_limit = 9; // symbolic sizes above this use evaluation
    std::size_t cell_cap = 0;       // 0: unlimited
};

enum class Verdict { match, mismatch, inapplicable };
std::string_view verdict_name(Verdict v);

struct ReadingOutcome {
    std::string label;
    Scalar value;
    bool matches = false;
};

struct SweepCell {
    ClosedFormId id{};
    Family family{};
    int m = 0;
    long k = 0;
    long size = 0;
    std::string point;   // "ones", "random-1", ..., "symbolic", "fixed"
    std::string params;  // rendered parameter values
    std::string method;  // "numeric", "polynomial" or "evaluation(<points>)"
    Scalar predicted;
    Scalar computed;
    std::vector<ReadingOutcome> readings;
    Verdict verdict = Verdict::match;
};

struct SweepSummary {
    std::size_t cells = 0, matches = 0, mismatches = 0;
    bool truncated = false;  // stopped at the cell cap
};

struct SweepResult {
    std::vector<SweepCell> cells;
    SweepSummary summary;
};

/// Compares closed_form_det against hankel_det over the domain of each id.
/// Cells come out in a fixed order: id, family, m, shift, point, size.
SweepResult sweep(const std::vector<ClosedFormId>& ids, const SweepOptions& options);

/// Bound on the total degree in the parameters of d_k(n) for the families.
long hankel_degree_bound(long n, long k);

}  // namespace hk
