#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hk::cli {

enum class Format { plain, json, csv };

/// Parsed command line. Parameter values are kept as text and parsed
/// exactly when the command runs.
struct CliConfig {
    std::string command;  // seq, det, closed, verify, favard, oracle, conjecture
    std::optional<std::string> family, name;
    int m = 2;
    std::string a = "1", b = "1", t = "0", x = "1", y = "1";
    bool symbolic = false;
    bool skip_symbolic = false;        // conjecture: numeric cells only
    std::optional<long> n;
    std::optional<std::string> n_range;  // "lo..hi"
    long k = 0;
    std::string method = "automatic";
    std::vector<std::string> ids;
    std::string mode = "both";       // verify: numeric, symbolic, both
    std::string check = "polynomial";  // verify: polynomial, evaluation
    bool check_terms = false;          // seq --check
    std::optional<long> max_n, max_symbolic_n, max_shift;
    std::optional<int> m_min, m_max, points;
    std::uint64_t seed = 1;
    std::optional<std::string> terms;  // favard: comma-separated moments
    std::optional<long> count;
    std::string kind = "weights";      // oracle: weights, lgv
    std::size_t max_enumeration = 6;
    std::optional<std::size_t> max_cells;  // from HF_MAX_CELLS
    Format format = Format::plain;
    std::optional<std::string> out;
};

/// Result of argument parsing: a config, or text to print with an exit code
/// (help output, or a usage error).
struct ParseOutcome {
    std::optional<CliConfig> config;
    std::string message;
    int exit_code = 0;
};

/// `args` excludes the program name. HF_MAX_CELLS is read from the
/// environment.
ParseOutcome parse_args(const std::vector<std::string>& args);

/// Exit codes: 0 success, 1 theorem mismatch, 2 configuration error.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse_args then run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hk::cli
