#include "gfcodes/codes.hpp"

#include <algorithm>
#include <sstream>

namespace gfcodes {

namespace {

void require_length(const Word& w, int n) {
    if (w.length() != n) {
        throw DimensionError("word of length " + std::to_string(w.length()) +
                             " in a code of length " + std::to_string(n));
    }
}

// Membership test over the masks of a code: a bitmap when 2^n is small,
// binary search otherwise.
class MaskSet {
public:
    explicit MaskSet(const Code& c) : code_(c) {
        if (c.n() <= 26) {
            bitmap_.assign((std::size_t{1} << c.n()) / 64 + 1, 0);
            for (std::uint64_t m : c.masks()) bitmap_[m >> 6] |= std::uint64_t{1} << (m & 63);
        }
    }

    bool contains(std::uint64_t m) const {
        if (!bitmap_.empty()) return (bitmap_[m >> 6] >> (m & 63)) & 1U;
        return std::binary_search(code_.masks().begin(), code_.masks().end(), m);
    }

private:
    const Code& code_;
    std::vector<std::uint64_t> bitmap_;
};

bool power_of_two_matches(std::uint64_t size, int n) {
    // |C|(n+1) = 2^n without overflow for n <= 63.
    const std::uint64_t total = n == 64 ? 0 : (std::uint64_t{1} << n);
    return size != 0 && total % static_cast<std::uint64_t>(n + 1) == 0 &&
           total / static_cast<std::uint64_t>(n + 1) == size;
}

void check_p(int p, int lo, int hi, const char* what) {
    if (p < lo || p > hi) {
        throw RangeError(std::string(what) + ": p = " + std::to_string(p) + " outside " +
                         std::to_string(lo) + ".." + std::to_string(hi));
    }
}

// Leftmost i with positions i+1 .. i+m+1 all zero, for a word of length 2m+1.
std::optional<PartitionIndex> find_partition(std::uint64_t bits, int m) {
    const std::uint64_t window = low_mask(m + 1);
    for (int i = 0; i <= m; ++i) {
        if (((bits >> i) & window) != 0) continue;
        PartitionIndex part;
        part.index = i;
        if (i > 0) part.prefix = Slice{bits & low_mask(i - 1), i - 1};
        const int tail = i + m + 1;
        part.suffix = Slice{bits >> tail, 2 * m + 1 - tail};
        return part;
    }
    return std::nullopt;
}

Code default_base(int p, const std::optional<Code>& base) {
    const int r = run_avoiding_length(p - 1);
    if (!base) return hamming_code(p - 1);
    if (base->n() != r) {
        throw DimensionError("base code has length " + std::to_string(base->n()) +
                             ", expected " + std::to_string(r));
    }
    if (!verify_perfect_qn(*base).perfect()) {
        throw DomainError("base code is not a perfect code of Q" + std::to_string(r));
    }
    return *base;
}

}  // namespace

// --- Code -------------------------------------------------------------------

Code::Code(int n, std::vector<Word> words) : n_(n) {
    check_word_length(n);
    masks_.reserve(words.size());
    for (const Word& w : words) {
        require_length(w, n);
        masks_.push_back(w.bits());
    }
    std::sort(masks_.begin(), masks_.end());
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

Code Code::from_masks(int n, std::vector<std::uint64_t> masks) {
    check_word_length(n);
    for (std::uint64_t m : masks) {
        if ((m & ~low_mask(n)) != 0) throw DimensionError("mask wider than code length");
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return Code(n, std::move(masks), 0);
}

bool Code::contains(const Word& w) const {
    return w.length() == n_ && std::binary_search(masks_.begin(), masks_.end(), w.bits());
}

std::vector<std::string> Code::to_strings() const {
    std::vector<std::string> out;
    out.reserve(masks_.size());
    for (const Word w : words()) out.push_back(w.to_string());
    return out;
}

// --- BiasFunction -----------------------------------------------------------

BiasFunction::BiasFunction(int r, Rule rule) : r_(r), rule_(std::move(rule)) {
    check_word_length(r);
}

BiasFunction BiasFunction::constant(int r, int value) {
    return BiasFunction(r, [v = value & 1](const Word&) { return v; });
}

BiasFunction BiasFunction::from_table(int r, std::vector<std::uint8_t> values) {
    check_word_length(r);
    if (r > 30 || values.size() != (std::size_t{1} << r)) {
        throw DimensionError("bias table must have 2^r entries");
    }
    return BiasFunction(r, [table = std::move(values)](const Word& w) {
        return static_cast<int>(table[w.bits()] & 1U);
    });
}

BiasFunction BiasFunction::indicator(int r, const std::vector<Word>& ones) {
    std::vector<std::uint64_t> masks;
    for (const Word& w : ones) {
        require_length(w, r);
        masks.push_back(w.bits());
    }
    std::sort(masks.begin(), masks.end());
    return BiasFunction(r, [masks = std::move(masks)](const Word& w) {
        return std::binary_search(masks.begin(), masks.end(), w.bits()) ? 1 : 0;
    });
}

int BiasFunction::operator()(const Word& w) const {
    require_length(w, r_);
    return rule_(w) & 1;
}

// --- reports ----------------------------------------------------------------

std::string to_string(Status status) {
    switch (status) {
        case Status::PerfectCode: return "PerfectCode";
        case Status::NotCode: return "NotCode";
        case Status::NotDominated: return "NotDominated";
        case Status::MultiplyDominated: return "MultiplyDominated";
    }
    return "Unknown";
}

std::string Witness::to_string() const {
    return second ? first.to_string() + "," + second->to_string() : first.to_string();
}

std::string VerificationReport::serialize() const {
    std::ostringstream out;
    out << "status: " << gfcodes::to_string(status) << '\n'
        << "n: " << n << '\n'
        << "code_size: " << code_size << '\n'
        << "max_run: " << max_run << '\n'
        << "witness: " << (witness ? witness->to_string() : "none") << '\n'
        << "graph: " << graph << '\n'
        << "cardinality_ok: " << (cardinality_ok ? "true" : "false") << '\n';
    return out.str();
}

// --- verification -----------------------------------------------------------

std::optional<std::pair<Word, Word>> find_close_pair(const Code& c) {
    const MaskSet members(c);
    const int n = c.n();
    for (std::uint64_t a : c.masks()) {
        std::optional<std::uint64_t> best;
        auto consider = [&](std::uint64_t b) {
            if (b > a && members.contains(b) && (!best || b < *best)) best = b;
        };
        for (int i = 0; i < n; ++i) {
            const std::uint64_t ai = a ^ (std::uint64_t{1} << i);
            consider(ai);
            for (int j = i + 1; j < n; ++j) consider(ai ^ (std::uint64_t{1} << j));
        }
        if (best) return std::pair{Word::unchecked(n, a), Word::unchecked(n, *best)};
    }
    return std::nullopt;
}

VerificationReport verify_perfect_qn(const Code& c) {
    const int n = c.n();
    if (n > kMaxSweepLength) {
        throw CapacityError("Q_n sweep limited to n <= 25, got n = " + std::to_string(n));
    }
    VerificationReport report;
    report.n = n;
    report.code_size = c.size();
    report.graph = "Q" + std::to_string(n);
    report.cardinality_ok = power_of_two_matches(c.size(), n);
    for (const Word w : c.words()) report.max_run = std::max(report.max_run, max_run_ones(w));

    if (auto pair = find_close_pair(c)) {
        report.status = Status::NotCode;
        report.witness = Witness{pair->first, pair->second};
        return report;
    }

    std::vector<std::uint8_t> dominators(std::size_t{1} << n, 0);
    for (std::uint64_t m : c.masks()) {
        ++dominators[m];
        for (int i = 0; i < n; ++i) ++dominators[m ^ (std::uint64_t{1} << i)];
    }
    for (std::uint64_t v = 0; v < dominators.size(); ++v) {
        if (dominators[v] != 1) {
            report.status = dominators[v] == 0 ? Status::NotDominated : Status::MultiplyDominated;
            report.witness = Witness{Word::unchecked(n, v), std::nullopt};
            return report;
        }
    }
    report.status = Status::PerfectCode;
    return report;
}

// --- constructions ----------------------------------------------------------

void stream_vasilev(const Code& base, const BiasFunction& bias,
                    const std::function<void(const Word&)>& sink) {
    const int r = base.n();
    if (bias.r() != r) {
        throw DimensionError("bias defined on length " + std::to_string(bias.r()) +
                             ", base code has length " + std::to_string(r));
    }
    if (2 * r + 1 > kMaxWordLength) throw DimensionError("extended length exceeds 63");
    const int n = 2 * r + 1;

    std::vector<int> base_bias;
    base_bias.reserve(base.size());
    for (const Word c : base.words()) base_bias.push_back(bias(c));

    // Ordered by mask: the high block h = x + c is most significant, then the
    // parity bit, then x. For a fixed h, x ranges over h + base.
    std::vector<std::uint64_t> low(base.size());
    const std::uint64_t high_count = std::uint64_t{1} << r;
    for (std::uint64_t h = 0; h < high_count; ++h) {
        for (std::size_t k = 0; k < base.size(); ++k) {
            const std::uint64_t x = h ^ base.masks()[k];
            const std::uint64_t middle =
                static_cast<std::uint64_t>((std::popcount(x) + base_bias[k]) & 1);
            low[k] = x | (middle << r);
        }
        std::sort(low.begin(), low.end());
        for (std::uint64_t l : low) sink(Word::unchecked(n, l | (h << (r + 1))));
    }
}

Code vasilev_extend(const Code& base, const BiasFunction& bias) {
    std::vector<std::uint64_t> masks;
    if (base.n() <= 20) masks.reserve(base.size() << base.n());
    stream_vasilev(base, bias, [&](const Word& w) { masks.push_back(w.bits()); });
    return Code::from_masks(2 * base.n() + 1, std::move(masks));
}

Code hamming_code(int p) {
    check_p(p, 1, 5, "hamming_code");
    Code code = Code::from_masks(1, {0});
    for (int step = 1; step < p; ++step) {
        code = vasilev_extend(code, BiasFunction::constant(code.n(), 0));
    }
    return code;
}

PartitionIndex lemma_partition_index(const Word& w, int m) {
    if (m < 0) throw RangeError("m must be nonnegative");
    if (w.length() != 2 * m + 1) {
        throw DimensionError("partition index expects length 2m+1 = " +
                             std::to_string(2 * m + 1) + ", got " +
                             std::to_string(w.length()));
    }
    if (auto part = find_partition(w.bits(), m)) return *part;
    throw DomainError("word " + w.to_string() + " has no 0^" + std::to_string(m + 1) +
                      " window");
}

Word reassemble_partition(const PartitionIndex& part, int m) {
    std::uint64_t bits = part.prefix.bits;
    int length = part.prefix.length;
    if (part.index > 0) {
        bits |= std::uint64_t{1} << length;
        ++length;
    }
    length += m + 1;
    bits |= part.suffix.bits << length;
    length += part.suffix.length;
    return Word::from_bits(length, bits);
}

BiasFunction run_avoiding_bias(int m) {
    if (m < 0) throw RangeError("m must be nonnegative");
    return BiasFunction(2 * m + 1, [m](const Word& c) {
        const auto part = find_partition(c.bits(), m);
        if (!part || part->index == 1) return 0;
        if (part->index == 0) return 1;
        return std::popcount(part->prefix.bits) & 1;
    });
}

Code construct_run_avoiding_code(int p, const std::optional<Code>& base) {
    check_p(p, 2, 4, "construct_run_avoiding_code");
    const int m = (1 << (p - 2)) - 1;
    return vasilev_extend(default_base(p, base), run_avoiding_bias(m));
}

void stream_run_avoiding_code(int p, const std::function<void(const Word&)>& sink,
                              const std::optional<Code>& base) {
    check_p(p, 2, 6, "stream_run_avoiding_code");
    const int m = (1 << (p - 2)) - 1;
    stream_vasilev(default_base(p, base), run_avoiding_bias(m), sink);
}

Code translate_code(const Code& c, const Word& t) {
    if (t.length() != c.n()) {
        throw DimensionError("translation of length " + std::to_string(t.length()) +
                             " on a code of length " + std::to_string(c.n()));
    }
    std::vector<std::uint64_t> masks(c.masks().begin(), c.masks().end());
    for (std::uint64_t& m : masks) m ^= t.bits();
    return Code::from_masks(c.n(), std::move(masks));
}

Code example_gamma7_code() {
    const Code base = Code::from_masks(3, {0b000, 0b111});
    return vasilev_extend(base, BiasFunction::indicator(3, {Word::zeros(3), Word::ones(3)}));
}

// --- histograms -------------------------------------------------------------

std::uint64_t RunHistogram::mass_at_least(int run) const {
    std::uint64_t mass = 0;
    for (auto it = counts_.lower_bound(run); it != counts_.end(); ++it) mass += it->second;
    return mass;
}

RunHistogram run_histogram(const Code& c) {
    RunHistogram histogram;
    for (const Word w : c.words()) histogram.add(w);
    return histogram;
}

}  // namespace gfcodes
