#include "gfcodes/bitword.hpp"

#include <string>

namespace gfcodes {

namespace {

std::string render(std::uint64_t bits, int length) {
    std::string out(static_cast<std::size_t>(length), '0');
    for (int i = 0; i < length; ++i) {
        if ((bits >> i) & 1U) out[static_cast<std::size_t>(i)] = '1';
    }
    return out;
}

void require_same_length(const Word& a, const Word& b) {
    if (a.length() != b.length()) {
        throw DimensionError("word lengths differ: " + std::to_string(a.length()) +
                             " vs " + std::to_string(b.length()));
    }
}

}  // namespace

void check_word_length(int n) {
    if (n < 1 || n > kMaxWordLength) {
        throw RangeError("word length " + std::to_string(n) + " outside 1.." +
                         std::to_string(kMaxWordLength));
    }
}

Word Word::from_bits(int length, std::uint64_t bits) {
    check_word_length(length);
    if ((bits & ~low_mask(length)) != 0) {
        throw DimensionError("bits set beyond word length " + std::to_string(length));
    }
    return Word(length, bits);
}

std::string Word::to_string() const { return render(bits_, length_); }

std::string Slice::to_string() const { return render(bits, length); }

Word word_from_string(std::string_view text) {
    if (text.empty()) throw ParseError("empty word", 0);
    if (text.size() > static_cast<std::size_t>(kMaxWordLength)) {
        throw ParseError("word longer than 63 characters", kMaxWordLength);
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '1') {
            bits |= std::uint64_t{1} << i;
        } else if (c != '0') {
            throw ParseError("invalid character at index " + std::to_string(i), i);
        }
    }
    return Word::unchecked(static_cast<int>(text.size()), bits);
}

Word xor_add(const Word& a, const Word& b) {
    require_same_length(a, b);
    return Word::unchecked(a.length(), a.bits() ^ b.bits());
}

int hamming_distance(const Word& a, const Word& b) {
    require_same_length(a, b);
    return std::popcount(a.bits() ^ b.bits());
}

Word concat(const Word& a, const Word& b) {
    const int length = a.length() + b.length();
    if (length > kMaxWordLength) {
        throw DimensionError("concatenation of length " + std::to_string(length) +
                             " exceeds 63");
    }
    return Word::unchecked(length, a.bits() | (b.bits() << a.length()));
}

bool contains_substring(const Word& s, const Word& f) {
    const int width = f.length();
    if (width > s.length()) return false;
    const std::uint64_t mask = low_mask(width);
    for (int offset = 0; offset + width <= s.length(); ++offset) {
        if (((s.bits() >> offset) & mask) == f.bits()) return true;
    }
    return false;
}

}  // namespace gfcodes
