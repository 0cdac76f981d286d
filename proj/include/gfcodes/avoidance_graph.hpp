#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gfcodes/bitword.hpp"
#include "gfcodes/codes.hpp"

namespace gfcodes {

inline constexpr int kMaxEnumerationLength = 30;

// Subgraph of Q_n induced by the words that avoid a forbidden substring.
// Adjacency is single-bit flips that stay inside the vertex set; no edge list
// is ever built.
class AvoidanceGraph {
public:
    AvoidanceGraph(int n, const Word& pattern);

    // Gamma_n(1^s); s > n gives Q_n.
    static AvoidanceGraph run_avoiding(int n, int s);
    static AvoidanceGraph cube(int n);

    int n() const noexcept { return n_; }
    // Forbidden pattern, or nothing when the graph is all of Q_n.
    const std::optional<Word>& pattern() const noexcept { return pattern_; }
    std::uint64_t vertex_count() const noexcept { return vertex_count_; }
    bool is_cube() const noexcept { return !pattern_.has_value(); }
    // "Q7", "Gamma7(1^5)", "Gamma5(010)".
    std::string descriptor() const;

    bool contains_mask(std::uint64_t bits) const noexcept {
        if (!pattern_) return true;
        if (run_length_ > 0) return max_run_ones(bits) < run_length_;
        return !contains_substring(Word::unchecked(n_, bits), *pattern_);
    }
    bool contains(const Word& w) const noexcept {
        return w.length() == n_ && contains_mask(w.bits());
    }

    // Vertices in ascending mask order, lazily. Throws CapacityError for n > 30.
    auto vertices() const {
        if (n_ > kMaxEnumerationLength) {
            throw CapacityError("vertex enumeration limited to n <= 30");
        }
        return enumerate_words(n_) |
               std::views::filter([g = *this](const Word& w) { return g.contains_mask(w.bits()); });
    }

    // Single-bit flips of v inside the graph, ascending mask order.
    // Throws DomainError when v is not a vertex.
    std::vector<Word> neighbors(const Word& v) const;

private:
    explicit AvoidanceGraph(int n);

    int n_;
    std::optional<Word> pattern_;
    int run_length_ = 0;  // s when the pattern is 1^s
    std::uint64_t vertex_count_ = 0;
};

// |V(Gamma_n(1^s))| by the s-step Fibonacci recurrence.
std::uint64_t vertex_count(int n, int s);

// Number of length-n words avoiding an arbitrary pattern, by a
// prefix-automaton count.
std::uint64_t avoiding_count(int n, const Word& pattern);

// Closed-neighbourhood domination sweep inside the subgraph. Codewords that
// are not vertices raise DomainError; n > 25 raises CapacityError.
VerificationReport verify_perfect_in_gamma(const Code& c, const AvoidanceGraph& g);

}  // namespace gfcodes
