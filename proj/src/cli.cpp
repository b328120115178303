#include "hk/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "hk/closed_forms.hpp"
#include "hk/conjectures.hpp"
#include "hk/errors.hpp"
#include "hk/hankel.hpp"
#include "hk/orthopoly.hpp"
#include "hk/paths.hpp"
#include "hk/report.hpp"
#include "hk/sweep.hpp"

namespace hk::cli {

namespace {

std::optional<std::size_t> env_cap() {
    const char* v = std::getenv("HF_MAX_CELLS");
    if (!v || !*v) return std::nullopt;
    std::size_t cap = 0;
    const char* end = v + std::char_traits<char>::length(v);
    auto [p, ec] = std::from_chars(v, end, cap);
    if (ec != std::errc() || p != end || cap == 0)
        throw ConfigError("HF_MAX_CELLS must be a positive integer, got '" + std::string(v) + "'");
    return cap;
}

long parse_long(std::string_view s, std::string_view what) {
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ConfigError(std::string(what) + ": not an integer: '" + std::string(s) + "'");
    return v;
}

Scalar parse_value(const std::string& text, std::string_view what) {
    Scalar v;
    try {
        v = Scalar::parse(text);
    } catch (const std::exception&) {
        throw ConfigError(std::string(what) + ": expected an integer or p/q, got '" + text + "'");
    }
    if (!v.is_numeric()) throw ConfigError(std::string(what) + ": expected an integer or p/q, got '" + text + "'");
    return v;
}

std::vector<long> sizes(const CliConfig& c, long lo_default, long hi_default) {
    long lo = lo_default, hi = hi_default;
    if (c.n_range) {
        const auto dots = c.n_range->find("..");
        if (dots == std::string::npos) throw ConfigError("--n-range expects lo..hi");
        lo = parse_long(c.n_range->substr(0, dots), "--n-range");
        hi = parse_long(c.n_range->substr(dots + 2), "--n-range");
    } else if (c.n) {
        lo = hi = *c.n;
    }
    if (lo < 0 || hi < lo) throw ConfigError("size range must satisfy 0 <= lo <= hi");
    std::vector<long> out;
    for (long n = lo; n <= hi; ++n) out.push_back(n);
    if (c.max_cells && out.size() > *c.max_cells)
        throw ConfigError("request of " + std::to_string(out.size()) + " cells exceeds HF_MAX_CELLS");
    return out;
}

Family family_of(const std::string& s) {
    if (auto f = parse_family(s)) return *f;
    throw ConfigError("unknown family '" + s + "' (restricted, shifted, unrestricted)");
}

SequenceSpec make_spec(const CliConfig& c) {
    if (c.name) {
        if (c.family) throw ConfigError("--name and --family are exclusive");
        if (auto n = parse_sequence_name(*c.name)) return SequenceSpec::named(*n);
        std::string names;
        for (auto n : all_named_sequences()) names += (names.empty() ? "" : ", ") + std::string(sequence_name(n));
        throw ConfigError("unknown sequence name '" + *c.name + "' (" + names + ")");
    }
    if (c.m < 1) throw ConfigError("-m must be at least 1");
    const Family f = family_of(c.family.value_or("restricted"));
    if (c.symbolic) return SequenceSpec::symbolic(f, c.m);
    return {f, c.m, parse_value(c.a, "-a"), parse_value(c.b, "-b"),
            f == Family::shifted ? parse_value(c.t, "-t") : Scalar(0), std::nullopt};
}

DetMethod method_of(const std::string& s) {
    if (s == "automatic") return DetMethod::automatic;
    if (s == "berkowitz") return DetMethod::berkowitz;
    if (s == "bareiss") return DetMethod::bareiss;
    throw ConfigError("unknown method '" + s + "' (automatic, berkowitz, bareiss)");
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += sep;
        s += parts[i];
    }
    return s;
}

Json config_echo(const CliConfig& c) {
    Json j;
    if (c.family) j["family"] = *c.family;
    if (c.name) j["name"] = *c.name;
    j["m"] = c.m;
    if (c.symbolic) {
        j["symbolic"] = true;
    } else {
        j["a"] = c.a;
        j["b"] = c.b;
        j["t"] = c.t;
    }
    if (c.n) j["n"] = *c.n;
    if (c.n_range) j["n_range"] = *c.n_range;
    j["k"] = c.k;
    if (!c.ids.empty()) j["ids"] = c.ids;
    j["seed"] = c.seed;
    if (c.max_cells) j["max_cells"] = *c.max_cells;
    return j;
}

struct Output {
    Json cells = Json::array();
    Json summary = Json::object();
    Json extra = Json::object();  // additional top-level fields
    std::string plain;
    int exit_code = 0;
};

void emit(const CliConfig& c, const Output& o, std::ostream& out) {
    std::string text;
    switch (c.format) {
        case Format::plain: text = o.plain; break;
        case Format::csv: text = to_csv(o.cells); break;
        case Format::json: {
            Json doc;
            doc["command"] = c.command;
            doc["config"] = config_echo(c);
            doc["cells"] = o.cells;
            doc["summary"] = o.summary;
            for (const auto& [k, v] : o.extra.items()) doc[k] = v;
            text = doc.dump(2) + "\n";
            break;
        }
    }
    if (c.out) {
        std::ofstream f(*c.out);
        if (!f) throw ConfigError("cannot open output file '" + *c.out + "'");
        f << text;
    } else {
        out << text;
    }
}

Output cmd_seq(const CliConfig& c) {
    const SequenceSpec spec = make_spec(c);
    const long count = c.n.value_or(10);
    if (count < 0) throw ConfigError("-n must be non-negative");
    if (c.max_cells && static_cast<std::size_t>(count) > *c.max_cells)
        throw ConfigError("request of " + std::to_string(count) + " cells exceeds HF_MAX_CELLS");
    const auto w = seq_terms(spec, static_cast<std::size_t>(count));
    Output o;
    std::vector<std::string> values;
    std::vector<Scalar> reference;
    if (c.check_terms) reference = closed_form_terms(spec, static_cast<std::size_t>(count)).terms;
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < w.terms.size(); ++i) {
        Json cell{{"n", i}, {"value", to_json(w.terms[i])}};
        if (c.check_terms) {
            const bool ok = reference[i] == w.terms[i];
            cell["closed_form"] = to_json(reference[i]);
            cell["verdict"] = ok ? "match" : "mismatch";
            if (!ok) ++mismatches;
        }
        o.cells.push_back(std::move(cell));
        values.push_back(w.terms[i].to_string());
    }
    o.summary = {{"terms", w.terms.size()}, {"sequence", spec.describe()}};
    o.plain = join(values, ",") + "\n";
    if (c.check_terms) {
        o.summary["mismatches"] = mismatches;
        o.plain += mismatches == 0 ? "closed form: all terms match\n"
                                   : "closed form: " + std::to_string(mismatches) + " mismatching terms\n";
        if (mismatches) o.exit_code = 1;
    }
    return o;
}

Output cmd_det(const CliConfig& c) {
    const SequenceSpec spec = make_spec(c);
    if (c.k < 0) throw ConfigError("-k must be non-negative");
    const auto ns = sizes(c, 0, 6);
    const auto method = method_of(c.method);
    const auto terms = seq_terms(spec, hankel_terms_needed(static_cast<std::size_t>(ns.back()),
                                                           static_cast<std::size_t>(c.k)))
                           .terms;
    Output o;
    std::vector<std::string> values;
    for (long n : ns) {
        const Scalar d = hankel_det(terms, static_cast<std::size_t>(n), static_cast<std::size_t>(c.k), method);
        o.cells.push_back({{"n", n}, {"k", c.k}, {"value", to_json(d)}});
        values.push_back(d.to_string());
    }
    o.summary = {{"cells", ns.size()}, {"sequence", spec.describe()}};
    o.plain = join(values, ",") + "\n";
    return o;
}

Output cmd_closed(const CliConfig& c) {
    if (c.ids.size() != 1) throw ConfigError("closed needs exactly one --id");
    const auto id = parse_closed_form_id(c.ids.front());
    if (!id) throw ConfigError("unknown closed-form id '" + c.ids.front() + "'");
    const auto& info = closed_form_info(*id);
    ClosedFormQuery q;
    q.family = c.family ? family_of(*c.family) : info.families.front();
    q.m = c.m;
    q.k = c.k;
    if (c.symbolic) {
        q.a = info.style == ParamStyle::zero_a ? Scalar(0) : sym_a();
        q.b = sym_b();
        q.t = q.family == Family::shifted ? sym_t() : Scalar(0);
        q.x = Scalar::variable(Var::x);
        q.y = Scalar::variable(Var::y);
    } else {
        q.a = parse_value(c.a, "-a");
        q.b = parse_value(c.b, "-b");
        q.t = q.family == Family::shifted ? parse_value(c.t, "-t") : Scalar(0);
        q.x = parse_value(c.x, "-x");
        q.y = parse_value(c.y, "-y");
    }
    const auto ns = sizes(c, 0, 6);
    Output o;
    std::vector<std::string> values;
    std::size_t covered = 0;
    for (long n : ns) {
        q.size = n;
        const std::string why = domain_violation(*id, q);
        if (!why.empty()) {
            o.cells.push_back({{"n", n}, {"k", c.k}, {"value", nullptr}, {"note", why}});
            values.push_back("-");
            continue;
        }
        ++covered;
        const Scalar v = closed_form_det(*id, q);
        o.cells.push_back({{"n", n}, {"k", c.k}, {"value", to_json(v)}, {"note", ""}});
        values.push_back(v.to_string());
    }
    o.summary = {{"cells", ns.size()}, {"in_domain", covered}, {"id", info.name}};
    o.plain = join(values, ",") + "\n";
    return o;
}

SweepMode sweep_mode(const std::string& s) {
    if (s == "numeric") return SweepMode::numeric;
    if (s == "symbolic") return SweepMode::symbolic;
    if (s == "both") return SweepMode::both;
    throw ConfigError("unknown mode '" + s + "' (numeric, symbolic, both)");
}

SymbolicCheck symbolic_check(const std::string& s) {
    if (s == "polynomial") return SymbolicCheck::polynomial;
    if (s == "evaluation") return SymbolicCheck::evaluation;
    throw ConfigError("unknown check '" + s + "' (polynomial, evaluation)");
}

Output cmd_verify(const CliConfig& c) {
    std::vector<ClosedFormId> ids;
    for (const auto& s : c.ids) {
        auto id = parse_closed_form_id(s);
        if (!id) throw ConfigError("unknown closed-form id '" + s + "'");
        ids.push_back(*id);
    }
    if (ids.empty()) ids = all_closed_form_ids();
    SweepOptions opt;
    opt.mode = sweep_mode(c.mode);
    opt.check = symbolic_check(c.check);
    if (c.max_n) opt.max_numeric_size = opt.max_symbolic_size = *c.max_n;
    if (c.max_symbolic_n) opt.max_symbolic_size = *c.max_symbolic_n;
    opt.full_polynomial_limit = std::max(opt.full_polynomial_limit, opt.max_symbolic_size);
    if (c.max_shift) opt.max_shift = *c.max_shift;
    if (c.m_min) opt.m_min = *c.m_min;
    if (c.m_max) opt.m_max = *c.m_max;
    if (c.points) opt.random_points = *c.points;
    if (opt.max_numeric_size < 0 || opt.max_symbolic_size < 0 || opt.random_points < 0 || opt.max_shift < 0)
        throw ConfigError("sizes, shifts and point counts must be non-negative");
    opt.seed = c.seed;
    opt.cell_cap = c.max_cells.value_or(0);
    const SweepResult r = sweep(ids, opt);

    Output o;
    std::map<ClosedFormId, SweepSummary> per_id;
    for (ClosedFormId id : ids) per_id[id];
    std::string mismatch_lines;
    for (const auto& cell : r.cells) {
        o.cells.push_back(to_json(cell));
        auto& s = per_id[cell.id];
        ++s.cells;
        if (cell.verdict == Verdict::match) {
            ++s.matches;
        } else {
            ++s.mismatches;
            mismatch_lines += "  mismatch " + std::string(closed_form_name(cell.id)) + " " +
                              std::string(family_name(cell.family)) + " m=" + std::to_string(cell.m) +
                              " k=" + std::to_string(cell.k) + " size=" + std::to_string(cell.size) + " [" +
                              cell.params + "] predicted " + cell.predicted.to_string() + ", computed " +
                              cell.computed.to_string() + "\n";
        }
    }
    o.summary = to_json(r.summary);
    Json by_id = Json::object();
    for (ClosedFormId id : ids) {
        const auto& s = per_id[id];
        by_id[std::string(closed_form_name(id))] = to_json(s);
        o.plain += std::string(closed_form_name(id)) + ": " + std::to_string(s.cells) + " cells, " +
                   std::to_string(s.matches) + " match, " + std::to_string(s.mismatches) + " mismatch\n";
    }
    o.summary["by_id"] = by_id;
    o.plain += mismatch_lines;
    o.plain += "total: " + std::to_string(r.summary.cells) + " cells, " + std::to_string(r.summary.matches) +
               " match, " + std::to_string(r.summary.mismatches) + " mismatch" +
               (r.summary.truncated ? " (truncated at HF_MAX_CELLS)" : "") + "\n";
    if (r.summary.mismatches > 0) o.exit_code = 1;
    return o;
}

Output cmd_favard(const CliConfig& c) {
    std::vector<Scalar> moments;
    std::size_t count = 0;
    std::string source;
    if (c.terms) {
        std::stringstream ss(*c.terms);
        std::string item;
        while (std::getline(ss, item, ',')) moments.push_back(parse_value(item, "--terms"));
        count = c.count ? static_cast<std::size_t>(*c.count) : moments.size() / 2;
        source = "terms";
    } else {
        count = static_cast<std::size_t>(c.count.value_or(6));
        const SequenceSpec spec = make_spec(c);
        moments = seq_terms(spec, 2 * count).terms;
        source = spec.describe();
    }
    if (c.count && *c.count < 0) throw ConfigError("--count must be non-negative");
    if (moments.size() < 2 * count) throw ConfigError("favard needs 2*count moments");
    const JacobiCoeffs j = jacobi_from_moments(moments, count);
    Output o;
    std::vector<std::string> s, t;
    for (std::size_t i = 0; i < count; ++i) {
        Json cell{{"n", i}, {"s", to_json(j.s[i])}, {"t", i < j.t.size() ? to_json(j.t[i]) : Json()}};
        o.cells.push_back(std::move(cell));
        s.push_back(j.s[i].to_string());
        if (i < j.t.size()) t.push_back(j.t[i].to_string());
    }
    o.summary = {{"count", count}, {"source", source}};
    o.plain = "s: " + join(s, ",") + "\nt: " + join(t, ",") + "\n";
    return o;
}

Output cmd_oracle(const CliConfig& c) {
    const SequenceSpec spec = make_spec(c);
    const PathModel model = PathModel::for_spec(spec);
    Output o;
    std::size_t mismatches = 0;
    std::vector<std::string> lines;
    if (c.kind == "weights") {
        const auto ns = sizes(c, 0, 10);
        const auto terms = seq_terms(spec, static_cast<std::size_t>(ns.back() + 1)).terms;
        for (long n : ns) {
            const Scalar dp = path_weight_dp(model, n);
            const Scalar& seq = terms[static_cast<std::size_t>(n)];
            const bool ok = dp == seq;
            if (!ok) ++mismatches;
            o.cells.push_back({{"params", "n=" + std::to_string(n)},
                               {"predicted", to_json(seq)},
                               {"computed", to_json(dp)},
                               {"verdict", ok ? "match" : "mismatch"}});
            lines.push_back("n=" + std::to_string(n) + ": " + dp.to_string() + (ok ? "" : " (mismatch)"));
        }
    } else if (c.kind == "lgv") {
        if (c.k < 0) throw ConfigError("-k must be non-negative");
        const auto ns = sizes(c, 0, 4);
        const auto terms = seq_terms(spec, hankel_terms_needed(static_cast<std::size_t>(ns.back()),
                                                               static_cast<std::size_t>(c.k)))
                               .terms;
        for (long n : ns) {
            const Scalar d = hankel_det(terms, static_cast<std::size_t>(n), static_cast<std::size_t>(c.k));
            Scalar l;
            try {
                l = lgv_det_oracle({model, static_cast<std::size_t>(c.k), static_cast<std::size_t>(n),
                                    c.max_enumeration});
            } catch (const CapExceeded& e) {
                throw ConfigError(std::string(e.what()) + " (raise --max-enum)");
            }
            const bool ok = d == l;
            if (!ok) ++mismatches;
            o.cells.push_back({{"params", "n=" + std::to_string(n) + ", k=" + std::to_string(c.k)},
                               {"predicted", to_json(d)},
                               {"computed", to_json(l)},
                               {"verdict", ok ? "match" : "mismatch"}});
            lines.push_back("n=" + std::to_string(n) + ": " + l.to_string() + (ok ? "" : " (mismatch)"));
        }
    } else {
        throw ConfigError("unknown oracle kind '" + c.kind + "' (weights, lgv)");
    }
    o.summary = {{"cells", o.cells.size()}, {"mismatches", mismatches}, {"kind", c.kind}};
    o.plain = join(lines, "\n") + "\n";
    if (mismatches) o.exit_code = 1;
    return o;
}

Output cmd_conjecture(const CliConfig& c) {
    std::vector<ConjectureId> ids;
    for (const auto& s : c.ids) {
        auto id = parse_conjecture_id(s);
        if (!id) throw ConfigError("unknown conjecture id '" + s + "'");
        ids.push_back(*id);
    }
    if (ids.empty()) ids = all_conjecture_ids();
    ConjectureGrid g;
    if (c.m_min) g.m_min = *c.m_min;
    if (c.m_max) g.m_max = *c.m_max;
    if (c.max_n) g.max_size = *c.max_n;
    if (c.max_symbolic_n) g.max_symbolic_size = *c.max_symbolic_n;
    if (c.points) g.random_points = *c.points;
    if (g.random_points < 0 || g.max_size < 0 || g.max_symbolic_size < 0)
        throw ConfigError("sizes and point counts must be non-negative");
    g.symbolic = !c.skip_symbolic;
    g.seed = c.seed;
    g.cell_cap = c.max_cells.value_or(0);

    Output o;
    Json by_id = Json::object(), notes = Json::object();
    ConjectureSummary total;
    for (ConjectureId id : ids) {
        const auto r = check_conjecture(id, g);
        for (const auto& cell : r.cells) o.cells.push_back(to_json(cell, id));
        const std::string name(conjecture_name(id));
        by_id[name] = to_json(r.summary);
        notes[name] = r.notes;
        const auto& s = r.summary;
        o.plain += name + ": " + std::to_string(s.cells) + " cells, " + std::to_string(s.matches) + " match, " +
                   std::to_string(s.mismatches) + " mismatch, " + std::to_string(s.inapplicable) +
                   " inapplicable; theorem-backed " + std::to_string(s.backed) + " (" +
                   std::to_string(s.backed_failures) + " failing)" + (s.truncated ? " (truncated)" : "") + "\n";
        for (const auto& n : r.notes) o.plain += "  " + n + "\n";
        total.cells += s.cells;
        total.matches += s.matches;
        total.mismatches += s.mismatches;
        total.inapplicable += s.inapplicable;
        total.backed += s.backed;
        total.backed_failures += s.backed_failures;
        total.truncated = total.truncated || s.truncated;
    }
    o.summary = to_json(total);
    o.summary["by_id"] = by_id;
    o.extra["notes"] = notes;
    return o;
}

void add_sequence_options(CLI::App* sub, CliConfig& c) {
    sub->add_option("--family", c.family, "restricted, shifted or unrestricted");
    sub->add_option("--name", c.name, "a named sequence such as catalan or motzkin");
    sub->add_option("-m", c.m, "down-step length parameter");
    sub->add_option("-a", c.a, "level-step weight (integer or p/q)");
    sub->add_option("-b", c.b, "down-step weight (integer or p/q)");
    sub->add_option("-t", c.t, "extra level-step weight on the axis (shifted family)");
    sub->add_flag("--symbolic", c.symbolic, "treat a, b, t as variables");
}

void add_grid_options(CLI::App* sub, CliConfig& c) {
    sub->add_option("--id", c.ids, "ids to run (default: all)");
    sub->add_option("--max-n", c.max_n, "largest size");
    sub->add_option("--max-symbolic-n", c.max_symbolic_n, "largest size for symbolic cells");
    sub->add_option("--m-min", c.m_min, "smallest m");
    sub->add_option("--m-max", c.m_max, "largest m");
    sub->add_option("--points", c.points, "number of random rational points");
    sub->add_option("--seed", c.seed, "seed for the random points");
}

}  // namespace

ParseOutcome parse_args(const std::vector<std::string>& args) {
    CliConfig c;
    CLI::App app{"Exact Hankel determinants of lattice-path sequences", "hankel"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "plain";
    app.add_option("--format", format, "plain, json or csv")->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--out", c.out, "write the output to this file");

    auto* seq = app.add_subcommand("seq", "sequence terms");
    add_sequence_options(seq, c);
    seq->add_option("-n", c.n, "number of terms (default 10)");
    seq->add_flag("--check", c.check_terms, "compare with the closed-form terms");

    auto* det = app.add_subcommand("det", "Hankel determinants by elimination");
    add_sequence_options(det, c);
    det->add_option("-k", c.k, "shift");
    det->add_option("-n", c.n, "size");
    det->add_option("--n-range", c.n_range, "sizes lo..hi");
    det->add_option("--method", c.method, "automatic, berkowitz or bareiss");

    auto* closed = app.add_subcommand("closed", "closed-form determinants");
    closed->add_option("--id", c.ids, "closed-form id")->required();
    closed->add_option("--family", c.family, "family (default: the first the id covers)");
    closed->add_option("-m", c.m, "down-step length parameter");
    closed->add_option("-k", c.k, "shift");
    closed->add_option("-n", c.n, "size");
    closed->add_option("--n-range", c.n_range, "sizes lo..hi");
    closed->add_option("-a", c.a, "level-step weight");
    closed->add_option("-b", c.b, "down-step weight");
    closed->add_option("-t", c.t, "axis weight (shifted family)");
    closed->add_option("-x", c.x, "x, for ids parameterized by a = x + y, b = x y");
    closed->add_option("-y", c.y, "y, for ids parameterized by a = x + y, b = x y");
    closed->add_flag("--symbolic", c.symbolic, "symbolic parameters");

    auto* verify = app.add_subcommand("verify", "closed forms against elimination");
    add_grid_options(verify, c);
    verify->add_option("--mode", c.mode, "numeric, symbolic or both");
    verify->add_option("--check", c.check, "polynomial or evaluation (symbolic cells)");
    verify->add_option("--max-shift", c.max_shift, "largest shift for ids covering every shift");

    auto* favard = app.add_subcommand("favard", "recurrence coefficients from moments");
    add_sequence_options(favard, c);
    favard->add_option("--terms", c.terms, "comma-separated moments instead of a sequence");
    favard->add_option("--count", c.count, "number of s values (default 6)");

    auto* oracle = app.add_subcommand("oracle", "lattice-path oracles");
    add_sequence_options(oracle, c);
    oracle->add_option("--kind", c.kind, "weights or lgv");
    oracle->add_option("-k", c.k, "shift (lgv)");
    oracle->add_option("-n", c.n, "size");
    oracle->add_option("--n-range", c.n_range, "sizes lo..hi");
    oracle->add_option("--max-enum", c.max_enumeration, "largest path system to enumerate");

    auto* conj = app.add_subcommand("conjecture", "conjecture harnesses");
    add_grid_options(conj, c);
    conj->add_flag("--no-symbolic", c.skip_symbolic, "numeric cells only");

    ParseOutcome out;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        c.max_cells = env_cap();
    } catch (const CLI::CallForHelp&) {
        out.message = app.help();
        return out;
    } catch (const CLI::CallForAllHelp&) {
        out.message = app.help("", CLI::AppFormatMode::All);
        return out;
    } catch (const CLI::ParseError& e) {
        out.message = std::string(e.what()) + "\n" + "Run with --help for usage.\n";
        out.exit_code = 2;
        return out;
    } catch (const ConfigError& e) {
        out.message = std::string(e.what()) + "\n";
        out.exit_code = 2;
        return out;
    }
    for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
    c.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::plain;
    out.config = std::move(c);
    return out;
}

int run(const CliConfig& c, std::ostream& out, std::ostream& err) {
    try {
        Output o;
        if (c.command == "seq")
            o = cmd_seq(c);
        else if (c.command == "det")
            o = cmd_det(c);
        else if (c.command == "closed")
            o = cmd_closed(c);
        else if (c.command == "verify")
            o = cmd_verify(c);
        else if (c.command == "favard")
            o = cmd_favard(c);
        else if (c.command == "oracle")
            o = cmd_oracle(c);
        else if (c.command == "conjecture")
            o = cmd_conjecture(c);
        else
            throw ConfigError("unknown command '" + c.command + "'");
        emit(c, o, out);
        return o.exit_code;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const ParseOutcome p = parse_args(args);
    if (!p.config) {
        (p.exit_code == 0 ? out : err) << p.message;
        return p.exit_code;
    }
    return run(*p.config, out, err);
}

}  // namespace hk::cli
