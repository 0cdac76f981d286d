#include "gfcodes/search.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <sstream>

namespace gfcodes {

namespace {

// Dancing-links exact cover over a fixed universe. Column headers sit at
// indices 1..items, the root at 0; body nodes follow.
class ExactCover {
public:
    explicit ExactCover(std::size_t items) {
        nodes_.resize(items + 1);
        for (std::size_t i = 0; i <= items; ++i) {
            Node& h = nodes_[i];
            h.left = i == 0 ? items : i - 1;
            h.right = i == items ? 0 : i + 1;
            h.up = h.down = i;
            h.column = i;
        }
        size_.assign(items + 1, 0);
    }

    // Items are 0-based and must be increasing.
    void add_row(std::size_t row, const std::vector<std::size_t>& items) {
        std::size_t first = 0;
        for (std::size_t item : items) {
            const std::size_t col = item + 1;
            const std::size_t id = nodes_.size();
            Node node;
            node.column = col;
            node.row = row;
            node.up = nodes_[col].up;
            node.down = col;
            nodes_[nodes_[col].up].down = id;
            nodes_[col].up = id;
            if (first == 0) {
                first = id;
                node.left = node.right = id;
            } else {
                node.right = first;
                node.left = nodes_[first].left;
                nodes_[nodes_[first].left].right = id;
                nodes_[first].left = id;
            }
            nodes_.push_back(node);
            ++size_[col];
        }
    }

    template <typename OnSolution>
    void solve(const SearchOptions& options, SearchOutcome& outcome, OnSolution&& on_solution) {
        options_ = &options;
        outcome_ = &outcome;
        stopped_ = false;
        chosen_.clear();
        search(on_solution);
    }

private:
    struct Node {
        std::size_t left = 0, right = 0, up = 0, down = 0, column = 0, row = 0;
    };

    void cover(std::size_t col) {
        nodes_[nodes_[col].right].left = nodes_[col].left;
        nodes_[nodes_[col].left].right = nodes_[col].right;
        for (std::size_t i = nodes_[col].down; i != col; i = nodes_[i].down) {
            for (std::size_t j = nodes_[i].right; j != i; j = nodes_[j].right) {
                nodes_[nodes_[j].down].up = nodes_[j].up;
                nodes_[nodes_[j].up].down = nodes_[j].down;
                --size_[nodes_[j].column];
            }
        }
    }

    void uncover(std::size_t col) {
        for (std::size_t i = nodes_[col].up; i != col; i = nodes_[i].up) {
            for (std::size_t j = nodes_[i].left; j != i; j = nodes_[j].left) {
                ++size_[nodes_[j].column];
                nodes_[nodes_[j].down].up = j;
                nodes_[nodes_[j].up].down = j;
            }
        }
        nodes_[nodes_[col].right].left = col;
        nodes_[nodes_[col].left].right = col;
    }

    template <typename OnSolution>
    void search(OnSolution& on_solution) {
        if (nodes_[0].right == 0) {
            // on_solution returns false to stop the whole search.
            if (!on_solution(chosen_)) stopped_ = true;
            return;
        }
        // Fewest remaining rows; the first such column has the smallest index.
        std::size_t col = nodes_[0].right;
        for (std::size_t c = nodes_[col].right; c != 0; c = nodes_[c].right) {
            if (size_[c] < size_[col]) col = c;
        }
        if (size_[col] == 0) return;

        cover(col);
        for (std::size_t r = nodes_[col].down; r != col && !stopped_; r = nodes_[r].down) {
            if (options_->node_budget && outcome_->nodes_expanded >= *options_->node_budget) {
                outcome_->budget_exceeded = true;
                stopped_ = true;
                break;
            }
            ++outcome_->nodes_expanded;
            chosen_.push_back(nodes_[r].row);
            for (std::size_t j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].column);
            search(on_solution);
            for (std::size_t j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].column);
            chosen_.pop_back();
        }
        uncover(col);
    }

    std::vector<Node> nodes_;
    std::vector<std::size_t> size_;
    std::vector<std::size_t> chosen_;
    const SearchOptions* options_ = nullptr;
    SearchOutcome* outcome_ = nullptr;
    bool stopped_ = false;
};

}  // namespace

std::string SearchOutcome::serialize() const {
    std::ostringstream out;
    out << "exists: " << (exists ? "true" : "false") << '\n'
        << "exhausted: " << (exhausted ? "true" : "false") << '\n'
        << "solution_count: " << solution_count << '\n'
        << "nodes_expanded: " << nodes_expanded << '\n';
    return out.str();
}

SearchOutcome search_perfect_codes(const AvoidanceGraph& g, const SearchOptions& options) {
    const std::uint64_t count = g.vertex_count();
    if (count > kMaxSearchVertices) {
        throw CapacityError(g.descriptor() + " has " + std::to_string(count) +
                            " vertices; exact-cover search is limited to 4096");
    }
    std::vector<std::uint64_t> vertices;
    vertices.reserve(count);
    for (const Word v : g.vertices()) vertices.push_back(v.bits());

    auto index_of = [&](std::uint64_t mask) {
        return static_cast<std::size_t>(
            std::lower_bound(vertices.begin(), vertices.end(), mask) - vertices.begin());
    };

    // Column per vertex, row per candidate codeword covering its closed neighbourhood.
    ExactCover problem(vertices.size());
    std::vector<std::size_t> items;
    for (std::size_t row = 0; row < vertices.size(); ++row) {
        items.clear();
        items.push_back(row);
        for (const Word u : g.neighbors(Word::unchecked(g.n(), vertices[row]))) {
            items.push_back(index_of(u.bits()));
        }
        std::sort(items.begin(), items.end());
        problem.add_row(row, items);
    }

    SearchOutcome outcome;
    bool limit_hit = false;
    problem.solve(options, outcome, [&](const std::vector<std::size_t>& rows) {
        std::vector<std::uint64_t> masks;
        masks.reserve(rows.size());
        for (std::size_t r : rows) masks.push_back(vertices[r]);
        outcome.solutions.push_back(Code::from_masks(g.n(), std::move(masks)));
        ++outcome.solution_count;
        if (options.limit && outcome.solution_count >= *options.limit) {
            limit_hit = true;
            return false;
        }
        return true;
    });
    outcome.exists = outcome.solution_count > 0;
    outcome.exhausted = !limit_hit && !outcome.budget_exceeded;
    return outcome;
}

std::optional<int> min_s(int n, int s_max) {
    for (int s = 2; s <= s_max; ++s) {
        if (search_perfect_codes(n, s, 1).exists) return s;
    }
    return std::nullopt;
}

// --- conjecture scan --------------------------------------------------------

std::string to_string(Existence e) {
    switch (e) {
        case Existence::Exists: return "exists";
        case Existence::Absent: return "absent";
        case Existence::Undecided: return "undecided";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Consistent: return "yes";
        case Verdict::Counterexample: return "COUNTEREXAMPLE";
        case Verdict::Anomaly: return "anomaly(s=1)";
        case Verdict::Excluded: return "excluded(n<3)";
        case Verdict::Undecided: return "undecided";
    }
    return "?";
}

bool is_mersenne_length(int n) {
    const auto next = static_cast<unsigned>(n) + 1U;
    return n >= 1 && std::has_single_bit(next);
}

bool ScanReport::has_counterexample() const {
    return std::any_of(cells.begin(), cells.end(),
                       [](const ScanCell& c) { return c.verdict == Verdict::Counterexample; });
}

bool ScanReport::has_undecided() const {
    return std::any_of(cells.begin(), cells.end(),
                       [](const ScanCell& c) { return c.existence == Existence::Undecided; });
}

std::string ScanReport::table() const {
    std::ostringstream out;
    char line[128];
    std::snprintf(line, sizeof line, "%4s %4s %10s %10s %10s  %s\n", "n", "s", "vertices",
                  "exists", "count", "consistent");
    out << line;
    for (const ScanCell& c : cells) {
        std::snprintf(line, sizeof line, "%4d %4d %10llu %10s %10llu  %s\n", c.n, c.s,
                      static_cast<unsigned long long>(c.vertices), to_string(c.existence).c_str(),
                      static_cast<unsigned long long>(c.count), to_string(c.verdict).c_str());
        out << line;
    }
    for (const ScanCell& c : cells) {
        for (const std::string& ce : c.counterexamples) {
            out << "counterexample n=" << c.n << " s=" << c.s << ": " << ce << '\n';
        }
    }
    for (const ScanCell& c : cells) {
        if (!c.note.empty()) out << "note n=" << c.n << " s=" << c.s << ": " << c.note << '\n';
    }
    return out.str();
}

std::string ScanReport::serialize() const {
    std::size_t exists = 0, absent = 0, undecided = 0, anomalies = 0, counterexamples = 0;
    for (const ScanCell& c : cells) {
        if (c.existence == Existence::Exists) ++exists;
        if (c.existence == Existence::Absent) ++absent;
        if (c.existence == Existence::Undecided) ++undecided;
        if (c.verdict == Verdict::Anomaly) ++anomalies;
        counterexamples += c.counterexamples.size();
    }
    std::ostringstream out;
    out << "cells: " << cells.size() << '\n'
        << "exists: " << exists << '\n'
        << "absent: " << absent << '\n'
        << "undecided: " << undecided << '\n'
        << "anomalies: " << anomalies << '\n'
        << "counterexamples: " << counterexamples << '\n'
        << "consistent: " << (has_counterexample() ? "false" : "true") << '\n';
    return out.str();
}

namespace {

ScanCell scan_cell(int n, int s, const ScanOptions& options) {
    ScanCell cell;
    cell.n = n;
    cell.s = s;
    const AvoidanceGraph g = AvoidanceGraph::run_avoiding(n, s);
    cell.vertices = g.vertex_count();
    if (cell.vertices > kMaxSearchVertices) {
        cell.note = "over the 4096-vertex search budget";
        return cell;
    }
    const SearchOutcome outcome = search_perfect_codes(g, SearchOptions{{}, options.node_budget});
    cell.count = outcome.solution_count;
    if (!outcome.exhausted) {
        cell.note = "node budget exhausted after " + std::to_string(outcome.nodes_expanded) +
                    " nodes";
        return cell;
    }
    cell.existence = outcome.exists ? Existence::Exists : Existence::Absent;

    if (s == 1) {
        cell.verdict = Verdict::Anomaly;
        cell.note = "Gamma_n(1) is the single vertex 0^n; {0^n} is perfect there for every n";
        return cell;
    }
    if (n < 3) {
        cell.verdict = Verdict::Excluded;
        return cell;
    }
    cell.verdict = Verdict::Consistent;
    const bool mersenne = is_mersenne_length(n);
    for (const Code& code : outcome.solutions) {
        std::string reason;
        if (!mersenne) reason = "n is not 2^p-1";
        if (n <= kMaxSweepLength && !verify_perfect_qn(code).perfect()) {
            reason += reason.empty() ? "" : "; ";
            reason += "not a perfect code of Q" + std::to_string(n);
        }
        if (reason.empty()) continue;
        std::string rendered = reason + "; code {";
        for (std::size_t i = 0; i < code.size(); ++i) {
            rendered += (i ? "," : "") + code[i].to_string();
        }
        cell.counterexamples.push_back(rendered + "}");
        cell.verdict = Verdict::Counterexample;
    }
    return cell;
}

}  // namespace

ScanReport conjecture_scan(IntRange n_range, IntRange s_range, const ScanOptions& options) {
    if (n_range.lo < 1 || n_range.hi > kMaxWordLength || n_range.lo > n_range.hi) {
        throw RangeError("invalid n range");
    }
    if (s_range.lo < 1 || s_range.lo > s_range.hi) throw RangeError("invalid s range");
    ScanReport report;
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
        for (int s = s_range.lo; s <= s_range.hi; ++s) {
            if (options.cap_s_at_cube && s > n + 1) break;
            report.cells.push_back(scan_cell(n, s, options));
        }
    }
    return report;
}

}  // namespace gfcodes
