#include "gfcodes/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "gfcodes/avoidance_graph.hpp"
#include "gfcodes/code_io.hpp"
#include "gfcodes/codes.hpp"
#include "gfcodes/search.hpp"

namespace gfcodes::cli {

namespace {

struct ConstructArgs {
    std::string variant = "theorem2";
    int p = 3;
    std::string out_path;
};

struct VerifyArgs {
    std::string path;
    std::string mode = "qn";
    std::optional<int> s;
};

struct SearchArgs {
    int n = 0;
    int s = 0;
    std::optional<std::uint64_t> limit;
    bool print_solutions = false;
};

struct MinSArgs {
    int n = 0;
    int s_max = 0;
};

struct ScanArgs {
    std::string n_range;
    std::string s_range;
    std::optional<std::uint64_t> node_budget;
};

struct CountArgs {
    int n = 0;
    int s = 0;
    bool enumerate = false;
};

// "lo..hi" or a single integer; "n+1" as the upper bound of an s range
// means "up to the cube" for each n.
IntRange parse_range(const std::string& text, bool allow_cube_bound, bool& cube_bound) {
    cube_bound = false;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            std::size_t used = 0;
            const int v = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {v, v};
        }
        const std::string lo = text.substr(0, dots);
        const std::string hi = text.substr(dots + 2);
        if (allow_cube_bound && hi == "n+1") {
            cube_bound = true;
            return {std::stoi(lo), kMaxWordLength + 1};
        }
        std::size_t used_lo = 0, used_hi = 0;
        IntRange r{std::stoi(lo, &used_lo), std::stoi(hi, &used_hi)};
        if (used_lo != lo.size() || used_hi != hi.size()) throw std::invalid_argument(text);
        return r;
    } catch (const std::logic_error&) {
        throw RangeError("malformed range '" + text + "', expected lo..hi");
    }
}

int max_run_of(const Code& code) {
    int run = 0;
    for (const Word w : code.words()) run = std::max(run, max_run_ones(w));
    return run;
}

void print_summary(std::ostream& out, int n, int s, std::uint64_t size, int max_run,
                   const std::string& prefix) {
    out << prefix << "n: " << n << '\n'
        << prefix << "s: " << s << '\n'
        << prefix << "size: " << size << '\n'
        << prefix << "max_run: " << max_run << '\n';
}

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    if (!a.out_path.empty()) {
        file.open(a.out_path);
        if (!file) {
            err << "error: cannot write " << a.out_path << '\n';
            return kInputError;
        }
    }
    std::ostream& sink = a.out_path.empty() ? out : file;
    // Summary lines become comments when they share a stream with the codewords.
    const std::string prefix = a.out_path.empty() ? "# " : "";

    if (a.variant == "theorem2" && a.p == 5) {
        const int n = run_avoiding_length(a.p);
        const int s = run_avoiding_bound(a.p);
        sink << "# n=" << n << " s=" << s << '\n'
             << "# variant=theorem2 p=" << a.p << " base=hamming" << n / 2 << '\n';
        RunHistogram histogram;
        std::string line;
        stream_run_avoiding_code(a.p, [&](const Word& w) {
            histogram.add(w);
            line = w.to_string();
            line += '\n';
            sink << line;
        });
        print_summary(out, n, s, histogram.total(), histogram.max_run(), prefix);
        return histogram.mass_at_least(s) == 0 ? kOk : kNegative;
    }

    Code code = Code::from_masks(1, {0});
    int s = 0;
    std::string provenance;
    if (a.variant == "theorem2") {
        if (a.p < 2 || a.p > 5) {
            err << "error: theorem2 requires p in 2..5\n";
            return kInputError;
        }
        code = construct_run_avoiding_code(a.p);
        s = run_avoiding_bound(a.p);
        provenance = "variant=theorem2 p=" + std::to_string(a.p) + " base=hamming" +
                     std::to_string(run_avoiding_length(a.p - 1));
    } else if (a.variant == "hamming") {
        if (a.p < 1 || a.p > 4) {
            err << "error: hamming requires p in 1..4\n";
            return kInputError;
        }
        code = hamming_code(a.p);
        s = max_run_of(code) + 1;
        provenance = "variant=hamming p=" + std::to_string(a.p);
    } else if (a.variant == "gamma7-example") {
        code = example_gamma7_code();
        s = 5;
        provenance = "variant=gamma7-example base=000,111 bias=f(000)=f(111)=1";
    } else {
        err << "error: unknown variant '" << a.variant << "'\n";
        return kInputError;
    }
    write_code(sink, code,
               {"n=" + std::to_string(code.n()) + " s=" + std::to_string(s), provenance});
    print_summary(out, code.n(), s, code.size(), max_run_of(code), prefix);
    return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    if (a.mode != "qn" && a.mode != "gamma") {
        err << "error: --mode must be qn or gamma\n";
        return kInputError;
    }
    if (a.mode == "gamma" && !a.s) {
        err << "error: --mode gamma requires -s\n";
        return kInputError;
    }
    if (a.s && *a.s < 1) {
        err << "error: -s must be at least 1\n";
        return kInputError;
    }
    const Code code = read_code_file(a.path);
    if (code.n() > kMaxSweepLength) {
        err << "error: verification sweep limited to n <= 25, file has n = " << code.n() << '\n';
        return kUndecided;
    }
    VerificationReport report;
    if (a.mode == "qn") {
        report = verify_perfect_qn(code);
    } else {
        const AvoidanceGraph g = AvoidanceGraph::run_avoiding(code.n(), *a.s);
        try {
            report = verify_perfect_in_gamma(code, g);
        } catch (const DomainError& e) {
            err << "error: " << e.what() << '\n';
            return kNegative;
        }
    }
    out << report.serialize();
    return report.perfect() ? kOk : kNegative;
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
    const AvoidanceGraph g = AvoidanceGraph::run_avoiding(a.n, a.s);
    const SearchOutcome outcome = search_perfect_codes(g, SearchOptions{a.limit, {}});
    out << "graph: " << g.descriptor() << '\n'
        << "vertices: " << g.vertex_count() << '\n'
        << outcome.serialize();
    if (a.print_solutions) {
        for (std::size_t i = 0; i < outcome.solutions.size(); ++i) {
            out << "solution " << i + 1 << ':';
            for (const Word w : outcome.solutions[i].words()) out << ' ' << w.to_string();
            out << '\n';
        }
    }
    return kOk;
}

int cmd_min_s(const MinSArgs& a, std::ostream& out) {
    const auto s = min_s(a.n, a.s_max);
    out << "n: " << a.n << '\n' << "s_max: " << a.s_max << '\n'
        << "min_s: " << (s ? std::to_string(*s) : "none") << '\n';
    return kOk;
}

int cmd_scan(const ScanArgs& a, std::ostream& out) {
    bool unused = false, cube_bound = false;
    const IntRange n_range = parse_range(a.n_range, false, unused);
    const IntRange s_range = parse_range(a.s_range, true, cube_bound);
    if (n_range.lo < 1 || n_range.hi > kMaxWordLength || n_range.lo > n_range.hi ||
        s_range.lo < 1 || s_range.lo > s_range.hi) {
        throw RangeError("invalid scan ranges");
    }
    const ScanReport report =
        conjecture_scan(n_range, s_range, ScanOptions{a.node_budget, cube_bound});
    out << report.table() << report.serialize();
    if (report.has_undecided()) return kUndecided;
    return report.has_counterexample() ? kNegative : kOk;
}

int cmd_count(const CountArgs& a, std::ostream& out, std::ostream& err) {
    const std::uint64_t count = vertex_count(a.n, a.s);
    out << "graph: " << AvoidanceGraph::run_avoiding(a.n, a.s).descriptor() << '\n'
        << "vertices: " << count << '\n';
    if (a.enumerate) {
        if (a.n > kMaxEnumerationLength) {
            err << "error: enumeration limited to n <= 30\n";
            return kUndecided;
        }
        const AvoidanceGraph g = AvoidanceGraph::run_avoiding(a.n, a.s);
        std::uint64_t seen = 0;
        for (const Word v : g.vertices()) {
            (void)v;
            ++seen;
        }
        out << "enumerated: " << seen << '\n';
        return seen == count ? kOk : kNegative;
    }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Perfect codes in generalized Fibonacci cubes", "gfcodes"};
    app.require_subcommand(1);

    ConstructArgs construct;
    auto* construct_cmd = app.add_subcommand("construct", "Build a perfect code and write it");
    construct_cmd->add_option("--variant", construct.variant, "theorem2 | hamming | gamma7-example");
    construct_cmd->add_option("-p", construct.p, "Length parameter, n = 2^p - 1");
    construct_cmd->add_option("-o,--out", construct.out_path, "Output file (default: stdout)");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check that a code file is a perfect code");
    verify_cmd->add_option("code", verify.path, "Code file")->required();
    verify_cmd->add_option("--mode", verify.mode, "qn | gamma");
    verify_cmd->add_option("-s", verify.s, "Forbidden run length for --mode gamma");

    SearchArgs search;
    auto* search_cmd = app.add_subcommand("search", "Exhaustive perfect-code search in Gamma_n(1^s)");
    search_cmd->add_option("-n", search.n)->required()->check(CLI::Range(1, kMaxWordLength));
    search_cmd->add_option("-s", search.s)->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("--limit", search.limit, "Stop after this many solutions")
        ->check(CLI::PositiveNumber);
    search_cmd->add_flag("--print-solutions", search.print_solutions);

    MinSArgs mins;
    auto* mins_cmd = app.add_subcommand("min-s", "Smallest s admitting a perfect code");
    mins_cmd->add_option("-n", mins.n)->required()->check(CLI::Range(1, kMaxWordLength));
    mins_cmd->add_option("--s-max", mins.s_max)->required()->check(CLI::Range(2, 64));

    ScanArgs scan;
    auto* scan_cmd = app.add_subcommand("scan", "Check the conjecture over a grid of (n, s)");
    scan_cmd->add_option("-n", scan.n_range, "lo..hi")->required();
    scan_cmd->add_option("-s", scan.s_range, "lo..hi, hi may be n+1")->required();
    scan_cmd->add_option("--node-budget", scan.node_budget, "Per-cell search node budget");

    CountArgs count;
    auto* count_cmd = app.add_subcommand("count", "Vertex count of Gamma_n(1^s)");
    count_cmd->add_option("-n", count.n)->required()->check(CLI::Range(1, kMaxWordLength));
    count_cmd->add_option("-s", count.s)->required()->check(CLI::PositiveNumber);
    count_cmd->add_flag("--enumerate", count.enumerate, "Cross-check by enumeration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        std::string message = e.what();
        if (auto nl = message.find('\n'); nl != std::string::npos) message.resize(nl);
        err << "error: " << message << '\n';
        return kInputError;
    }

    try {
        if (*construct_cmd) return cmd_construct(construct, out, err);
        if (*verify_cmd) return cmd_verify(verify, out, err);
        if (*search_cmd) return cmd_search(search, out);
        if (*mins_cmd) return cmd_min_s(mins, out);
        if (*scan_cmd) return cmd_scan(scan, out);
        if (*count_cmd) return cmd_count(count, out, err);
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kUndecided;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace gfcodes::cli
