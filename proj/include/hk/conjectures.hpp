#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hk/scalar.hpp"
#include "hk/sweep.hpp"

namespace hk {

/// Unproven statements checked against brute force.
enum class ConjectureId {
    C6_7_jacobi,           // recurrence data of g(n+1,3,a,b)/a
    C6_8_dd,               // dd0, dd1, dd2 for m = 3
    R6_10_u_sequence,      // u(n) = s(n-1)u(n-1) - t(n-2)u(n-2)
    C7_5_d2,               // restricted d2 at mn, mn-1 for m >= 4
    C7_6_D2,               // shifted D2 for m >= 4
    C7_7_dd,               // dd0, dd1, dd2 for general m
    R7_3_ptilde,           // bordered determinants of c(n,m,a,b)
    R7_8_ptilde_lucas,     // bordered determinants of g(n,m,a,b)
    C7_10_partial_sums,    // Hankel determinants of the partial sums H_m(k)
    C7_10_st_pattern,      // recurrence data of H_2(k,z,0,1)
};

struct ConjectureInfo {
    ConjectureId id;
    std::string_view name;
    std::string_view summary;
    int m_min = 0, m_max = 0;
    long max_size = 0;           // numeric cells
    long max_symbolic_size = 0;  // 0: no symbolic cells
};

const std::vector<ConjectureId>& all_conjecture_ids();
const ConjectureInfo& conjecture_info(ConjectureId id);
std::string_view conjecture_name(ConjectureId id);
std::optional<ConjectureId> parse_conjecture_id(std::string_view name);

/// Overrides of the per-id defaults. Zero keeps the default.
struct ConjectureGrid {
    int m_min = 0, m_max = 0;
    long max_size = 0;
    long max_symbolic_size = 0;
    int random_points = 2;  // in addition to the fixed points of each id
    bool symbolic = true;
    std::uint64_t seed = 1;
    std::size_t cell_cap = 0;  // 0: unlimited
};

struct ConjectureCell {
    std::string quantity;  // e.g. "dd2(7)", "t(4)", "census(8)"
    std::string params;
    Scalar predicted;
    Scalar computed;
    std::vector<ReadingOutcome> readings;  // primary reading first
    Verdict verdict = Verdict::match;
    std::string note;  // why a cell is inapplicable
    /// A proven result covering the cell, and its value there.
    std::string backing;
    Scalar backing_value;

    bool theorem_backed() const noexcept { return !backing.empty(); }
};

struct ConjectureSummary {
    std::size_t cells = 0, matches = 0, mismatches = 0, inapplicable = 0;
    std::size_t backed = 0, backed_failures = 0;
    bool truncated = false;
};

struct ConjectureReport {
    ConjectureId id{};
    std::vector<ConjectureCell> cells;
    ConjectureSummary summary;
    std::vector<std::string> notes;
};

/// Coefficients 0..count-1 of H_m(k,z,a,b) = G_m (1 - (b z^m f_m^2)^k).
std::vector<Scalar> partial_sum_terms(int m, long k, const Scalar& a, const Scalar& b, std::size_t count);

/// Runs one harness. Mismatches and failed cells are recorded, never thrown.
ConjectureReport check_conjecture(ConjectureId id, const ConjectureGrid& grid = {});

}  // namespace hk
