#pragma once

// Command-line front end. `run_cli` takes the arguments after the program
// name and writes to the given streams; it returns the process exit code:
// 0 success, 1 verification failure / formula-oracle mismatch, 2 usage error.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "relprime.hpp"

namespace relprime::cli {

/// Largest n accepted by `compute`.
inline constexpr std::uint64_t kComputeCeiling = 100000;

struct Range {
    std::uint64_t first = 0;
    std::uint64_t last = 0;
};

inline std::uint64_t parse_u64(std::string_view text, std::string_view flag)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    require(ec == std::errc{} && ptr == text.data() + text.size() && !text.empty(),
            std::string(flag) + ": expected a nonnegative integer, got \"" + std::string(text) + "\"");
    return v;
}

/// "7" or "1..100" (inclusive on both ends).
inline Range parse_range(std::string_view text)
{
    auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        auto v = parse_u64(text, "--n");
        return {v, v};
    }
    Range r{parse_u64(text.substr(0, dots), "--n"), parse_u64(text.substr(dots + 2), "--n")};
    require(r.first <= r.last, "--n: empty range " + std::string(text));
    return r;
}

inline nlohmann::ordered_json to_json(const CountReport& r)
{
    nlohmann::ordered_json j;
    j["n"] = r.n;
    if (r.k)
        j["k"] = *r.k;
    if (r.d)
        j["d"] = *r.d;
    j["value"] = r.count.str();
    j["method"] = to_string(r.method);
    j["elapsed_ms"] = r.elapsed_ms();
    return j;
}

/// Writes one record per line (json, bfile) or all values on one line (plain).
inline void write_reports(std::ostream& out, const std::vector<CountReport>& reports, const std::string& format)
{
    if (format == "plain") {
        for (std::size_t i = 0; i < reports.size(); ++i)
            out << (i ? " " : "") << reports[i].count;
        out << '\n';
    } else if (format == "bfile") {
        for (const auto& r : reports)
            out << r.n << ' ' << r.count << '\n';
    } else {
        for (const auto& r : reports)
            out << to_json(r).dump() << '\n';
    }
}

/// Parses b-file text ("n value" per line; blank lines and '#' comments skipped).
inline std::vector<std::pair<std::uint64_t, BigNat>> parse_bfile(std::istream& in)
{
    std::vector<std::pair<std::uint64_t, BigNat>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        auto space = line.find(' ');
        require(space != std::string::npos, "b-file: malformed line \"" + line + "\"");
        rows.emplace_back(parse_u64(std::string_view(line).substr(0, space), "b-file"),
                          BigNat::parse(std::string_view(line).substr(space + 1)));
    }
    return rows;
}

namespace detail {

struct ComputeArgs {
    std::string function;
    std::string n;
    std::optional<std::uint64_t> k;
    std::optional<std::uint64_t> d;
    std::string format = "plain";
    std::string method = "formula";
};

inline int compute(const ComputeArgs& a, std::ostream& out)
{
    const Range range = parse_range(a.n);
    require(range.first >= 1, "--n: n must be >= 1");
    require(range.last <= kComputeCeiling, "--n: n must be <= " + std::to_string(kComputeCeiling));
    const bool needs_k = a.function == "fk" || a.function == "phik";
    const bool needs_d = a.function == "psi";
    require(!needs_k || a.k, a.function + " requires --k");
    require(needs_k || !a.k, a.function + " does not take --k");
    require(!needs_d || a.d, "psi requires --d");
    require(needs_d || !a.d, a.function + " does not take --d");
    require(!a.k || *a.k >= 1, "--k: k must be >= 1");
    if (needs_d)
        for (auto n = range.first; n <= range.last; ++n)
            require(*a.d >= 1 && n % *a.d == 0,
                    "psi: d must divide n (d=" + std::to_string(*a.d) + ", n=" + std::to_string(n) + ")");
    const bool oracle = a.method == "oracle";
    if (oracle)
        require_oracle_range(range.last);

    std::vector<CountReport> reports;
    CoprimeSubsetCounter counter;
    const Method method = oracle ? Method::oracle : Method::formula;
    for (auto n = range.first; n <= range.last; ++n) {
        const auto un = static_cast<unsigned>(n);
        auto run = [&]() -> BigNat {
            if (a.function == "f")
                return oracle ? brute_coprime_count(un) : counter.count(n);
            if (a.function == "fk")
                return oracle ? brute_coprime_count(un, static_cast<unsigned>(*a.k)) : counter.count(n, *a.k);
            if (a.function == "phi")
                return oracle ? brute_phi(un) : subset_phi(n);
            if (a.function == "phik")
                return oracle ? brute_phi(un, static_cast<unsigned>(*a.k)) : subset_phi(n, *a.k);
            return oracle ? brute_psi(un, static_cast<unsigned>(*a.d)) : subset_psi(n, *a.d);
        };
        reports.push_back(measure(n, a.k, a.d, method, run));
    }
    write_reports(out, reports, a.format);
    return 0;
}

inline int verify(const std::string& suite_arg, const SuiteOptions& options, std::ostream& out)
{
    auto suite = parse_suite(suite_arg);
    require(suite.has_value(), "verify: unknown suite \"" + suite_arg + "\"");
    auto r = run_suite(*suite, options);
    if (r.ok()) {
        out << r.name << ": " << r.checks << " checks passed\n";
        return 0;
    }
    out << r.name << ": FAILED " << r.failures << " of " << r.checks << " checks; first failure: " << r.first_failure
        << '\n';
    return 1;
}

inline std::string render_distribution(const std::map<std::uint64_t, std::uint64_t>& dist)
{
    std::ostringstream os;
    bool first = true;
    for (auto [ell, count] : dist) {
        os << (first ? "" : " ") << ell << ':' << count;
        first = false;
    }
    return os.str();
}

struct AffineArgs {
    std::vector<std::string> sets;
    std::optional<unsigned> n;
    std::optional<unsigned> k;
    bool inequivalent = false;
    std::string format = "plain";
};

inline IntegerSet nonempty_set(const std::string& text)
{
    auto s = IntegerSet::parse(text);
    require(!s.empty(), "--set: empty set");
    return s;
}

inline int affine(const std::string& action, const AffineArgs& a, std::ostream& out)
{
    const bool json = a.format == "json";
    nlohmann::ordered_json j;
    if (action == "canon" || action == "profile") {
        require(a.sets.size() == 1, "affine " + action + ": exactly one --set is required");
        auto s = nonempty_set(a.sets[0]);
        if (action == "canon") {
            auto cf = canonical_form(s);
            j = {{"c", cf.c.elements()}, {"d", cf.d.elements()}, {"representative", cf.representative.elements()}};
            if (!json)
                out << "C=" << cf.c.str() << " D=" << cf.d.str() << " R=" << cf.representative.str() << '\n';
        } else {
            auto p = invariant_profile(s);
            j = {{"s", p.sumset_size}, {"d", p.difference_size}};
            if (!json)
                out << "s=" << p.sumset_size << " d=" << p.difference_size << '\n';
        }
    } else if (action == "equiv") {
        require(a.sets.size() == 2, "affine equiv: exactly two --set options are required");
        bool eq = affinely_equivalent(nonempty_set(a.sets[0]), nonempty_set(a.sets[1]));
        j = {{"equivalent", eq}};
        if (!json)
            out << (eq ? "true" : "false") << '\n';
    } else {
        require(a.n.has_value(), "affine dist: --n is required");
        auto dist = sumset_size_distribution(*a.n, a.k, a.inequivalent);
        for (auto [ell, count] : dist)
            j[std::to_string(ell)] = count;
        if (!json)
            out << render_distribution(dist) << '\n';
    }
    if (json)
        out << j.dump() << '\n';
    return 0;
}

inline int bench(const std::vector<std::uint64_t>& ns, unsigned reps, std::ostream& out, std::ostream& err)
{
    require(!ns.empty(), "bench: --n is required");
    require(reps >= 1, "bench: --reps must be >= 1");
    for (auto n : ns)
        require_oracle_range(n);

    auto best_of = [reps](auto&& fn) {
        CountReport best = fn();
        for (unsigned i = 1; i < reps; ++i) {
            auto r = fn();
            if (r.elapsed < best.elapsed)
                best = std::move(r);
        }
        return best;
    };

    out << std::left << std::setw(6) << "n" << std::setw(14) << "formula_ms" << std::setw(14) << "oracle_ms"
        << std::setw(12) << "speedup" << "value\n";
    for (auto n : ns) {
        auto formula = best_of([n] {
            return measure(n, std::nullopt, std::nullopt, Method::formula, [n] { return count_coprime_subsets(n); });
        });
        auto oracle = best_of([n] {
            return measure(n, std::nullopt, std::nullopt, Method::oracle,
                           [n] { return brute_coprime_count(static_cast<unsigned>(n)); });
        });
        if (formula.count != oracle.count) {
            err << "bench: formula and oracle disagree at n=" << n << ": " << formula.count << " vs " << oracle.count
                << '\n';
            return 1;
        }
        const double f_ms = formula.elapsed_ms(), o_ms = oracle.elapsed_ms();
        std::ostringstream ratio;
        ratio << std::fixed << std::setprecision(1) << (f_ms > 0 ? o_ms / f_ms : 0.0) << 'x';
        out << std::left << std::setw(6) << n << std::setw(14) << std::fixed << std::setprecision(4) << f_ms
            << std::setw(14) << o_ms << std::setw(12) << ratio.str() << formula.count << '\n';
    }
    return 0;
}

} // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact counts of relatively prime subsets, subset phi functions, and affine invariants of "
                 "integer sets"};
    app.require_subcommand(1);

    detail::ComputeArgs compute;
    auto* compute_cmd = app.add_subcommand("compute", "Evaluate f, f_k, Phi, Phi_k or Psi");
    compute_cmd->add_option("function", compute.function, "f | fk | phi | phik | psi")
        ->required()
        ->check(CLI::IsMember({"f", "fk", "phi", "phik", "psi"}));
    compute_cmd->add_option("--n", compute.n, "n or inclusive range a..b")->required();
    compute_cmd->add_option("--k", compute.k, "subset size (fk, phik)");
    compute_cmd->add_option("--d", compute.d, "divisor of n (psi)");
    compute_cmd->add_option("--format", compute.format, "plain | json | bfile")
        ->check(CLI::IsMember({"plain", "json", "bfile"}));
    compute_cmd->add_option("--method", compute.method, "formula | oracle")
        ->check(CLI::IsMember({"formula", "oracle"}));

    std::string suite;
    SuiteOptions suite_options;
    auto* verify_cmd = app.add_subcommand("verify", "Run an identity suite");
    verify_cmd->add_option("suite", suite,
                           "recursions | divisor-sums | bounds | asymptotics | oracle | affine | closed-forms")
        ->required();
    verify_cmd->add_option("--n-max", suite_options.n_max, "largest n checked (random trials for affine)");
    verify_cmd->add_option("--k-max", suite_options.k_max, "check every k up to this bound instead of a sample");
    verify_cmd->add_option("--seed", suite_options.seed, "seed for randomized trials");

    std::string action;
    detail::AffineArgs affine;
    auto* affine_cmd = app.add_subcommand("affine", "Affine canonical forms and invariants");
    affine_cmd->add_option("action", action, "canon | equiv | profile | dist")
        ->required()
        ->check(CLI::IsMember({"canon", "equiv", "profile", "dist"}));
    affine_cmd->add_option("--set", affine.sets, "comma-separated integers");
    affine_cmd->add_option("--n", affine.n, "dist: sets drawn from {0..n}");
    affine_cmd->add_option("--k", affine.k, "dist: restrict to |A| = k");
    affine_cmd->add_flag("--inequivalent", affine.inequivalent, "dist: count each affine class once");
    affine_cmd->add_option("--format", affine.format, "plain | json")->check(CLI::IsMember({"plain", "json"}));

    std::vector<std::uint64_t> bench_ns;
    unsigned reps = 3;
    auto* bench_cmd = app.add_subcommand("bench", "Time the formula against brute-force enumeration");
    bench_cmd->add_option("--n", bench_ns, "values of n (comma-separated or repeated)")->delimiter(',')->required();
    bench_cmd->add_option("--reps", reps, "repetitions per measurement (best is reported)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (compute_cmd->parsed())
            return detail::compute(compute, out);
        if (verify_cmd->parsed())
            return detail::verify(suite, suite_options, out);
        if (affine_cmd->parsed())
            return detail::affine(action, affine, out);
        return detail::bench(bench_ns, reps, out, err);
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace relprime::cli
