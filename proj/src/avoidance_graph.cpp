#include "gfcodes/avoidance_graph.hpp"

#include <algorithm>
#include <array>

namespace gfcodes {

AvoidanceGraph::AvoidanceGraph(int n, const Word& pattern) : n_(n) {
    check_word_length(n);
    if (pattern.length() <= n) {
        pattern_ = pattern;
        if (pattern.bits() == low_mask(pattern.length())) run_length_ = pattern.length();
    }
    vertex_count_ = pattern_ ? avoiding_count(n, *pattern_) : std::uint64_t{1} << n;
}

AvoidanceGraph::AvoidanceGraph(int n) : n_(n) {
    check_word_length(n);
    vertex_count_ = std::uint64_t{1} << n;
}

AvoidanceGraph AvoidanceGraph::run_avoiding(int n, int s) {
    check_word_length(n);
    if (s < 1) throw RangeError("run length s must be at least 1");
    if (s > n) return cube(n);
    return AvoidanceGraph(n, Word::ones(s));
}

AvoidanceGraph AvoidanceGraph::cube(int n) {
    return AvoidanceGraph(n);
}

std::string AvoidanceGraph::descriptor() const {
    const std::string dim = std::to_string(n_);
    if (!pattern_) return "Q" + dim;
    if (run_length_ > 0) return "Gamma" + dim + "(1^" + std::to_string(run_length_) + ")";
    return "Gamma" + dim + "(" + pattern_->to_string() + ")";
}

std::vector<Word> AvoidanceGraph::neighbors(const Word& v) const {
    if (!contains(v)) {
        throw DomainError(v.to_string() + " is not a vertex of " + descriptor());
    }
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        const std::uint64_t u = v.bits() ^ (std::uint64_t{1} << i);
        if (contains_mask(u)) out.push_back(Word::unchecked(n_, u));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t vertex_count(int n, int s) {
    if (n < 1) throw RangeError("n must be at least 1");
    if (s < 1) throw RangeError("s must be at least 1");
    if (n > kMaxWordLength) throw RangeError("n exceeds 63");
    // a(k) = 2^k for k < s, a(k) = a(k-1) + ... + a(k-s) afterwards.
    std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        if (k < s) {
            a[k] = std::uint64_t{1} << k;
        } else {
            std::uint64_t sum = 0;
            for (int j = 1; j <= s; ++j) sum += a[k - j];
            a[k] = sum;
        }
    }
    return a[n];
}

std::uint64_t avoiding_count(int n, const Word& pattern) {
    check_word_length(n);
    const int len = pattern.length();
    // KMP failure function over the pattern; state = length of matched prefix.
    std::vector<int> fail(static_cast<std::size_t>(len) + 1, 0);
    for (int i = 1, k = 0; i < len; ++i) {
        while (k > 0 && pattern.bit(i) != pattern.bit(k)) k = fail[k];
        if (pattern.bit(i) == pattern.bit(k)) ++k;
        fail[i + 1] = k;
    }
    auto step = [&](int state, int bit) {
        while (state > 0 && pattern.bit(state) != bit) state = fail[state];
        return pattern.bit(state) == bit ? state + 1 : 0;
    };
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(len), 0), next(ways.size());
    ways[0] = 1;
    for (int pos = 0; pos < n; ++pos) {
        std::fill(next.begin(), next.end(), 0);
        for (int state = 0; state < len; ++state) {
            if (ways[state] == 0) continue;
            for (int bit = 0; bit < 2; ++bit) {
                const int to = step(state, bit);
                if (to < len) next[to] += ways[state];
            }
        }
        ways.swap(next);
    }
    std::uint64_t total = 0;
    for (std::uint64_t w : ways) total += w;
    return total;
}

VerificationReport verify_perfect_in_gamma(const Code& c, const AvoidanceGraph& g) {
    const int n = g.n();
    if (c.n() != n) {
        throw DimensionError("code length " + std::to_string(c.n()) + " differs from graph " +
                             g.descriptor());
    }
    if (n > kMaxSweepLength) {
        throw CapacityError("subgraph sweep limited to n <= 25, got n = " + std::to_string(n));
    }
    for (const Word w : c.words()) {
        if (!g.contains(w)) {
            throw DomainError("codeword " + w.to_string() + " is not a vertex of " +
                              g.descriptor());
        }
    }

    VerificationReport report;
    report.n = n;
    report.code_size = c.size();
    report.graph = g.descriptor();
    for (const Word w : c.words()) report.max_run = std::max(report.max_run, max_run_ones(w));
    report.cardinality_ok = (n < 64) && c.size() * static_cast<std::uint64_t>(n + 1) ==
                                            (std::uint64_t{1} << n);

    std::vector<std::uint8_t> dominators(std::size_t{1} << n, 0);
    auto bump = [&](std::uint64_t v) {
        if (dominators[v] < 2) ++dominators[v];
    };
    for (std::uint64_t m : c.masks()) {
        bump(m);
        for (int i = 0; i < n; ++i) {
            const std::uint64_t u = m ^ (std::uint64_t{1} << i);
            if (g.contains_mask(u)) bump(u);
        }
    }
    for (std::uint64_t v = 0; v < dominators.size(); ++v) {
        if (!g.contains_mask(v) || dominators[v] == 1) continue;
        report.status = dominators[v] == 0 ? Status::NotDominated : Status::MultiplyDominated;
        report.witness = Witness{Word::unchecked(n, v), std::nullopt};
        return report;
    }
    report.status = Status::PerfectCode;
    return report;
}

}  // namespace gfcodes
