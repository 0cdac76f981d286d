#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gfcodes/avoidance_graph.hpp"
#include "gfcodes/codes.hpp"

namespace gfcodes {

inline constexpr std::uint64_t kMaxSearchVertices = 4096;

struct SearchOptions {
    // Stop after this many solutions; the outcome is then not exhausted.
    std::optional<std::uint64_t> limit;
    // Abandon the search after this many row selections (undecided outcome).
    std::optional<std::uint64_t> node_budget;
};

struct SearchOutcome {
    bool exists = false;
    std::vector<Code> solutions;      // in discovery order
    std::uint64_t solution_count = 0;  // exact when exhausted, a lower bound otherwise
    std::uint64_t nodes_expanded = 0;
    bool exhausted = false;            // whole search space explored
    bool budget_exceeded = false;      // stopped by node_budget

    // exhausted && !exists certifies non-existence.
    bool certifies_absence() const noexcept { return exhausted && !exists; }
    std::string serialize() const;
};

// All perfect codes of g, as exact covers of V(g) by closed neighbourhoods.
// Branches on the uncovered vertex with the fewest candidate codewords
// (smallest mask on ties) and tries candidates in ascending mask order.
// Throws CapacityError when g has more than 4096 vertices.
SearchOutcome search_perfect_codes(const AvoidanceGraph& g, const SearchOptions& options = {});

inline SearchOutcome search_perfect_codes(int n, int s,
                                          std::optional<std::uint64_t> limit = std::nullopt) {
    return search_perfect_codes(AvoidanceGraph::run_avoiding(n, s), SearchOptions{limit, {}});
}

// Smallest s in [2, s_max] for which Gamma_n(1^s) has a perfect code.
std::optional<int> min_s(int n, int s_max);

struct IntRange {
    int lo = 0;
    int hi = 0;  // inclusive
};

enum class Existence { Exists, Absent, Undecided };
enum class Verdict {
    Consistent,      // every code found has n = 2^p - 1 and is perfect in Q_n
    Counterexample,  // some code violates the conjecture
    Anomaly,         // s = 1: the one-vertex graph, reported separately
    Excluded,        // n < 3, outside the conjecture's hypothesis
    Undecided,       // over budget
};

std::string to_string(Existence e);
std::string to_string(Verdict v);

struct ScanCell {
    int n = 0;
    int s = 0;
    std::uint64_t vertices = 0;
    Existence existence = Existence::Undecided;
    std::uint64_t count = 0;
    Verdict verdict = Verdict::Undecided;
    std::string note;  // capacity message or anomaly description
    // Offending codes with the reason, rendered verbatim.
    std::vector<std::string> counterexamples;
};

struct ScanOptions {
    std::optional<std::uint64_t> node_budget;
    // Skip cells with s > n + 1 (they repeat the s = n + 1 cube cell).
    bool cap_s_at_cube = false;
};

struct ScanReport {
    std::vector<ScanCell> cells;

    bool has_counterexample() const;
    bool has_undecided() const;
    // Fixed-width table: n, s, vertices, exists, count, consistent; then any
    // counterexample verbatim.
    std::string table() const;
    std::string serialize() const;
};

bool is_mersenne_length(int n);

ScanReport conjecture_scan(IntRange n_range, IntRange s_range, const ScanOptions& options = {});

}  // namespace gfcodes
