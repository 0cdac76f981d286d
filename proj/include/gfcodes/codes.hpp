#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gfcodes/bitword.hpp"

namespace gfcodes {

// A set of equal-length words, kept sorted by mask without duplicates.
class Code {
public:
    Code(int n, std::vector<Word> words);
    static Code from_masks(int n, std::vector<std::uint64_t> masks);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return masks_.size(); }
    bool empty() const noexcept { return masks_.empty(); }
    std::span<const std::uint64_t> masks() const noexcept { return masks_; }
    Word operator[](std::size_t i) const { return Word::unchecked(n_, masks_[i]); }
    bool contains(const Word& w) const;

    auto words() const {
        return std::views::all(masks_) |
               std::views::transform([n = n_](std::uint64_t m) { return Word::unchecked(n, m); });
    }

    std::vector<std::string> to_strings() const;

    friend bool operator==(const Code&, const Code&) = default;

private:
    Code(int n, std::vector<std::uint64_t> masks, int /*sorted tag*/)
        : n_(n), masks_(std::move(masks)) {}

    int n_;
    std::vector<std::uint64_t> masks_;
};

// Total map from words of length r to Z2, the f of the Vasilev extension.
class BiasFunction {
public:
    using Rule = std::function<int(const Word&)>;

    BiasFunction(int r, Rule rule);

    static BiasFunction constant(int r, int value);
    // values[mask] is f of the word with that mask; size must be 2^r.
    static BiasFunction from_table(int r, std::vector<std::uint8_t> values);
    // f(w) = 1 exactly on the listed words.
    static BiasFunction indicator(int r, const std::vector<Word>& ones);

    int r() const noexcept { return r_; }
    int operator()(const Word& w) const;

private:
    int r_;
    Rule rule_;
};

enum class Status { PerfectCode, NotCode, NotDominated, MultiplyDominated };

std::string to_string(Status status);

struct Witness {
    Word first;
    std::optional<Word> second;  // present for a violating pair

    std::string to_string() const;
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
    Status status = Status::PerfectCode;
    std::optional<Witness> witness;
    int n = 0;
    std::uint64_t code_size = 0;
    int max_run = 0;
    std::string graph;          // "Q7", "Gamma7(1^5)", "Gamma4(0110)"
    bool cardinality_ok = false;  // |C|(n+1) = 2^n

    bool perfect() const noexcept { return status == Status::PerfectCode; }
    // Flat "key: value" lines, stable key order.
    std::string serialize() const;
};

inline constexpr int kMaxSweepLength = 25;

// Distinct members at distance >= 3. On failure returns the violating pair
// (a, b), a < b, minimal in lexicographic mask order.
std::optional<std::pair<Word, Word>> find_close_pair(const Code& c);
inline bool is_code(const Code& c) { return !find_close_pair(c).has_value(); }

// Full 2^n domination sweep in Q_n. Throws CapacityError for n > 25.
VerificationReport verify_perfect_qn(const Code& c);

// { x || pi(x)+f(c) || x+c : x in B_r, c in base }, length 2r+1.
Code vasilev_extend(const Code& base, const BiasFunction& bias);

// Same words as vasilev_extend, delivered in ascending mask order with
// memory proportional to |base| only.
void stream_vasilev(const Code& base, const BiasFunction& bias,
                    const std::function<void(const Word&)>& sink);

// Hamming code of length 2^p - 1 by Vasilev steps with zero bias from {0}.
Code hamming_code(int p);

struct PartitionIndex {
    int index = 0;  // i with w in A_i
    Slice prefix;   // z, length max(i-1, 0)
    Slice suffix;   // y, length m for i = 0, else m - i
};

// Classifies a word of length 2m+1 containing 0^{m+1} into the block A_i
// (A_0 = 0^{m+1}y, A_i = z 1 0^{m+1} y). Throws DomainError otherwise.
PartitionIndex lemma_partition_index(const Word& w, int m);

// Inverse of lemma_partition_index.
Word reassemble_partition(const PartitionIndex& part, int m);

// Bias over B_{2m+1} that keeps the extended code free of 1^{3m+3}:
// A_0 -> 1, A_1 -> 0, A_i -> parity(z) for i >= 2, everything else -> 0.
BiasFunction run_avoiding_bias(int m);

constexpr int run_avoiding_length(int p) { return (1 << p) - 1; }
// Forbidden run length 3 * 2^{p-2}.
constexpr int run_avoiding_bound(int p) { return 3 << (p - 2); }

// Materialized construction for 2 <= p <= 4. `base` defaults to hamming_code(p-1)
// and must be a perfect code of Q_{2^{p-1}-1}.
Code construct_run_avoiding_code(int p, const std::optional<Code>& base = std::nullopt);

// Streamed construction for 2 <= p <= 6, ascending mask order.
void stream_run_avoiding_code(int p, const std::function<void(const Word&)>& sink,
                              const std::optional<Code>& base = std::nullopt);

Code translate_code(const Code& c, const Word& t);

// Vasilev extension of {000, 111} with f(000) = f(111) = 1.
Code example_gamma7_code();

// max_run_ones -> number of words.
class RunHistogram {
public:
    void add(const Word& w) {
        ++counts_[max_run_ones(w)];
        ++total_;
    }
    const std::map<int, std::uint64_t>& counts() const noexcept { return counts_; }
    std::uint64_t total() const noexcept { return total_; }
    int max_run() const noexcept { return counts_.empty() ? 0 : counts_.rbegin()->first; }
    // Words whose longest run is at least `run`.
    std::uint64_t mass_at_least(int run) const;

private:
    std::map<int, std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

RunHistogram run_histogram(const Code& c);

}  // namespace gfcodes
