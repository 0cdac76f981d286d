#pragma once

// Binary words of length 1..63 stored as a single 64-bit mask.
//
// Position convention: the leftmost character b1 of the string rendering is
// bit 0 of the mask, b_i is bit i-1. Every slicing operation in the library
// (concatenation, Vasilev blocks, partition prefixes) relies on it.

#include <bit>
#include <compare>
#include <cstdint>
#include <ranges>
#include <string>
#include <string_view>

#include "gfcodes/errors.hpp"

namespace gfcodes {

inline constexpr int kMaxWordLength = 63;

// Mask with the low `length` bits set; valid for 0 <= length <= 64.
constexpr std::uint64_t low_mask(int length) noexcept {
    return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

class Word {
public:
    // Validating factory: 1 <= length <= 63, no bit at or above `length`.
    static Word from_bits(int length, std::uint64_t bits);
    static Word zeros(int length) { return from_bits(length, 0); }
    static Word ones(int length) { return from_bits(length, low_mask(length)); }

    // Caller guarantees the invariants; used on hot enumeration paths.
    static constexpr Word unchecked(int length, std::uint64_t bits) noexcept {
        return Word(length, bits);
    }

    constexpr int length() const noexcept { return length_; }
    constexpr std::uint64_t bits() const noexcept { return bits_; }

    // Coordinate b_{index+1}.
    constexpr int bit(int index) const noexcept {
        return static_cast<int>((bits_ >> index) & 1U);
    }

    std::string to_string() const;

    friend constexpr auto operator<=>(const Word&, const Word&) = default;

private:
    constexpr Word(int length, std::uint64_t bits) noexcept
        : length_(length), bits_(bits) {}

    int length_;
    std::uint64_t bits_;
};

// A possibly empty run of bits, used for the z / y components of the
// partition lemma. Never crosses the API as a Word.
struct Slice {
    std::uint64_t bits = 0;
    int length = 0;

    std::string to_string() const;
    friend constexpr bool operator==(const Slice&, const Slice&) = default;
};

// Parses '0'/'1' text, b1 first. Throws ParseError naming the offending index.
Word word_from_string(std::string_view text);

Word xor_add(const Word& a, const Word& b);
int hamming_distance(const Word& a, const Word& b);

constexpr int parity(const Word& a) noexcept { return std::popcount(a.bits()) & 1; }

// a followed by b. Throws DimensionError past 63 bits.
Word concat(const Word& a, const Word& b);

constexpr Word complement(const Word& a) noexcept {
    return Word::unchecked(a.length(), a.bits() ^ low_mask(a.length()));
}

// True iff some window of s equals f. Rejects an empty pattern (no such Word).
bool contains_substring(const Word& s, const Word& f);

// Longest block of consecutive ones in the low bits of `bits`.
constexpr int max_run_ones(std::uint64_t bits) noexcept {
    int run = 0;
    while (bits != 0) {
        bits &= bits >> 1;
        ++run;
    }
    return run;
}

constexpr int max_run_ones(const Word& a) noexcept { return max_run_ones(a.bits()); }

void check_word_length(int n);

// All 2^n words of length n in ascending mask order, generated lazily.
inline auto enumerate_words(int n) {
    check_word_length(n);
    return std::views::iota(std::uint64_t{0}, std::uint64_t{1} << n) |
           std::views::transform([n](std::uint64_t m) { return Word::unchecked(n, m); });
}

}  // namespace gfcodes
